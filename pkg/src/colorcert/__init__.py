"""Certificates for list-coloring bounds.

Exact counting of even and odd spanning Eulerian sub-digraphs,
orientation and kernel certificates, online/offline list-coloring game
solvers, quasi-line structure recognizers, and discharging on
multigraphs, plus a catalog of built-in verified instances.
"""

from .graphs import (
    Digraph, FormatError, ListSizeFn, MultiGraph, SimpleGraph,
)

__all__ = ["Digraph", "FormatError", "ListSizeFn", "MultiGraph", "SimpleGraph"]
__version__ = "0.1.0"
