"""
Configuration management for the lctopo finite-topology engine.
"""

import logging
import os
from pathlib import Path
from dotenv import load_dotenv

logger = logging.getLogger(__name__)

# Load environment variables
load_dotenv()

# Base paths
BASE_DIR = Path(__file__).parent.parent
DATA_DIR = BASE_DIR / "data"
SPACES_DIR = DATA_DIR / "spaces"
MAPS_DIR = DATA_DIR / "maps"


def env_int(name: str, default: int) -> int:
    """Integer environment variable; unparsable values fall back to the default."""
    raw = os.getenv(name)
    if raw is None:
        return default
    try:
        return int(raw)
    except ValueError:
        logger.warning(f"{name}={raw!r} is not an integer, using {default}")
        return default


# Logging
LOG_LEVEL = os.getenv("LOG_LEVEL", "INFO")

# Size caps
MAX_GROUND_SIZE = 16  # 2^n subsets must stay iterable
ENUMERATION_HARD_CAP = 7
MAX_ENUMERATION_N = min(env_int("LCTOPO_MAX_N", ENUMERATION_HARD_CAP), ENUMERATION_HARD_CAP)
MAP_ENUMERATION_CAP = 4  # |Y|^|X| assignments per space pair

# Verification caps by quantifier domain
SPACE_LEVEL_CAP = 5
SUBSET_LEVEL_CAP = 4
MAP_LEVEL_CAP = 3

# Workers and progress bars
DEFAULT_JOBS = env_int("LCTOPO_JOBS", 1)
SHOW_PROGRESS = os.getenv("LCTOPO_PROGRESS", "0").lower() in ("1", "true", "yes")
