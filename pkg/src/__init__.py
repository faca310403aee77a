"""
lctopo - Locally closed sets on finite spaces

A finite-topology computation engine: locally closed sets, the refined
topology they generate, submaximal / T_D / locally indiscrete spaces,
lc-separation axioms and lc-continuity, checked by exhaustive enumeration
of all topologies on small ground sets.
"""

__version__ = "0.1.0"

from .core import Topology, GroundSet, PointSet, validate_topology

__all__ = ["Topology", "GroundSet", "PointSet", "validate_topology"]
