"""
Map file format (UTF-8 JSON).

    {"source": <space>, "target": <space>, "map": {"a": "x", "b": "y"}}
"""

import json
import logging
from pathlib import Path
from typing import Dict, Union

from pydantic import BaseModel, Field, ValidationError

from ..core import MalformedFile, SpaceFile
from .finite_map import FiniteMap

logger = logging.getLogger(__name__)


class MapFile(BaseModel):
    """Wire model of a map file."""
    source: SpaceFile
    target: SpaceFile
    map: Dict[str, str] = Field(description="Image label of every source label")

    def to_finite_map(self) -> FiniteMap:
        return FiniteMap.from_labels(self.source.to_topology(), self.target.to_topology(), self.map)

    @classmethod
    def from_finite_map(cls, f: FiniteMap) -> "MapFile":
        return cls(
            source=SpaceFile.from_topology(f.source),
            target=SpaceFile.from_topology(f.target),
            map=f.as_labels(),
        )


def parse_map(data: Union[dict, str]) -> FiniteMap:
    """
    Parse a map from a dict or a JSON string.

    Raises:
        MalformedFile: for JSON or schema errors
        LcTopoError subclasses: for invalid spaces or a non-total map
    """
    try:
        if isinstance(data, str):
            data = json.loads(data)
        model = MapFile.model_validate(data)
    except json.JSONDecodeError as e:
        raise MalformedFile(f"invalid JSON: {e}") from e
    except ValidationError as e:
        raise MalformedFile(f"invalid map file: {e.errors()[0]['msg']}") from e
    return model.to_finite_map()


def dump_map(f: FiniteMap) -> str:
    return json.dumps(
        {"source": f.source.to_dict(), "target": f.target.to_dict(), "map": f.as_labels()},
        ensure_ascii=False,
    )


def load_map(path: Union[str, Path]) -> FiniteMap:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise MalformedFile(f"cannot read {path}: {e}") from e
    except UnicodeDecodeError as e:
        raise MalformedFile(f"{path} is not UTF-8: {e}") from e
    logger.debug(f"Loaded map file {path}")
    return parse_map(text)
