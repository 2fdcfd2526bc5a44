"""Exact, kernel and bicriteria solvers for s-club cluster edge and arc deletion."""
from .graph import Digraph, Graph
from .verifier import DeletionSet, Instance, verify, verify_directed, verify_undirected

__all__ = ["Graph", "Digraph", "Instance", "DeletionSet", "verify", "verify_undirected", "verify_directed"]
__version__ = "0.1.0"
