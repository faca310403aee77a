"""
Named space library - loads and manages the fixture spaces in data/spaces.
"""

import logging
from pathlib import Path
from typing import Dict, List, Optional

from ..config import SPACES_DIR
from .errors import LcTopoError
from .serialization import load_space
from .topology import Topology

logger = logging.getLogger(__name__)


class SpaceLibrary:
    """Manages named spaces stored as space files."""

    def __init__(self, spaces_dir: Path = None):
        self.spaces_dir = spaces_dir or SPACES_DIR
        self.spaces_cache: Dict[str, Topology] = {}
        self.load_all_spaces()

    def load_all_spaces(self):
        """Load every *.json space file; the file stem is the space name."""
        if not self.spaces_dir.exists():
            logger.warning(f"Spaces directory not found: {self.spaces_dir}")
            return

        json_files = sorted(self.spaces_dir.glob("*.json"))
        logger.debug(f"Loading {len(json_files)} space files...")

        for json_file in json_files:
            try:
                self.spaces_cache[json_file.stem] = load_space(json_file)
            except LcTopoError as e:
                logger.error(f"Error loading space from {json_file}: {e}")

        logger.debug(f"Loaded {len(self.spaces_cache)} spaces")

    def get_space(self, name: str) -> Optional[Topology]:
        return self.spaces_cache.get(name)

    def list_spaces(self) -> List[str]:
        return sorted(self.spaces_cache)

    def path_of(self, name: str) -> Path:
        return self.spaces_dir / f"{name}.json"


_library = None


def get_space_library() -> SpaceLibrary:
    """Get the global space library instance."""
    global _library
    if _library is None:
        _library = SpaceLibrary()
    return _library
