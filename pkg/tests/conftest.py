"""
Pytest configuration and fixtures.
"""

import pytest
import logging
import sys
from pathlib import Path

# Add project root to path
sys.path.insert(0, str(Path(__file__).parent.parent))

from src.core import GroundSet, Topology, get_space_library, validate_topology

# Configure logging
logging.basicConfig(
    level=logging.INFO,
    format='%(asctime)s - %(name)s - %(levelname)s - %(message)s'
)


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: exhaustive runs at n=5")


def make_space(labels: str, opens) -> Topology:
    """Space on single-character labels with opens written as strings ("", "a", "ab")."""
    ground = GroundSet(tuple(labels))
    return validate_topology(ground, [ground.mask_of(o) for o in opens])


@pytest.fixture(scope="session")
def project_root():
    """Get project root directory."""
    return Path(__file__).parent.parent


@pytest.fixture(scope="session")
def data_dir(project_root):
    """Get data directory."""
    return project_root / "data"


@pytest.fixture(scope="session")
def spaces_dir(data_dir):
    return data_dir / "spaces"


@pytest.fixture(scope="session")
def maps_dir(data_dir):
    return data_dir / "maps"


@pytest.fixture(scope="session")
def library():
    return get_space_library()


@pytest.fixture(scope="session")
def sierpinski():
    """S = ({a, b}, {∅, {a}, X})."""
    return make_space("ab", ["", "a", "ab"])


@pytest.fixture(scope="session")
def chain3():
    return make_space("abc", ["", "a", "ab", "abc"])


@pytest.fixture(scope="session")
def partition3():
    """Locally indiscrete, not submaximal: ({a,b,c}, {∅, {a}, {b,c}, X})."""
    return make_space("abc", ["", "a", "bc", "abc"])


@pytest.fixture(scope="session")
def discrete2():
    return make_space("ab", ["", "a", "b", "ab"])


@pytest.fixture(scope="session")
def indiscrete2():
    return make_space("ab", ["", "ab"])


@pytest.fixture(scope="session")
def point():
    return make_space("a", ["", "a"])


@pytest.fixture(scope="session")
def space_factory():
    """make_space as a fixture."""
    return make_space
