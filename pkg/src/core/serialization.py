"""
Space file format (UTF-8 JSON).

    {"points": ["a", "b"], "opens": [[], ["a"], ["a", "b"]]}

Opens may be listed in any order on input; output is canonical: opens in
storage order, each open's labels in ground order.
"""

import json
import logging
from pathlib import Path
from typing import List, Union

from pydantic import BaseModel, Field, ValidationError, field_validator

from .errors import MalformedFile
from .ground import GroundSet
from .topology import Topology, validate_topology

logger = logging.getLogger(__name__)


class SpaceFile(BaseModel):
    """Wire model of a space file."""
    points: List[str] = Field(description="Point labels in ground order")
    opens: List[List[str]] = Field(description="Open sets as lists of point labels")

    @field_validator("points")
    @classmethod
    def points_distinct(cls, points: List[str]) -> List[str]:
        if len(set(points)) != len(points):
            raise ValueError("point labels must be distinct")
        return points

    def to_topology(self) -> Topology:
        ground = GroundSet(tuple(self.points))
        family = [ground.mask_of(open_set) for open_set in self.opens]
        return validate_topology(ground, family)

    @classmethod
    def from_topology(cls, space: Topology) -> "SpaceFile":
        return cls(**space.to_dict())


def parse_space(data: Union[dict, str]) -> Topology:
    """
    Parse a space from a dict or a JSON string.

    Raises:
        MalformedFile: for JSON or schema errors
        LcTopoError subclasses: for topology validation errors
    """
    try:
        if isinstance(data, str):
            data = json.loads(data)
        model = SpaceFile.model_validate(data)
    except json.JSONDecodeError as e:
        raise MalformedFile(f"invalid JSON: {e}") from e
    except ValidationError as e:
        raise MalformedFile(f"invalid space file: {e.errors()[0]['msg']}") from e
    return model.to_topology()


def dump_space(space: Topology) -> str:
    """Serialize to a single canonical JSON line."""
    return json.dumps(space.to_dict(), ensure_ascii=False)


def load_space(path: Union[str, Path]) -> Topology:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise MalformedFile(f"cannot read {path}: {e}") from e
    except UnicodeDecodeError as e:
        raise MalformedFile(f"{path} is not UTF-8: {e}") from e
    logger.debug(f"Loaded space file {path}")
    return parse_space(text)


def save_space(space: Topology, path: Union[str, Path]):
    Path(path).write_text(dump_space(space) + "\n", encoding="utf-8")
