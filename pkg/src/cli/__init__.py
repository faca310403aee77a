"""
CLI module: the ``lctopo`` command and DOT export.
"""

from .dot_export import specialization_graph, hasse_edges, dot_quote, to_pydot, export_dot
from .main import build_parser, run, main

__all__ = [
    "specialization_graph",
    "hasse_edges",
    "dot_quote",
    "to_pydot",
    "export_dot",
    "build_parser",
    "run",
    "main",
]
