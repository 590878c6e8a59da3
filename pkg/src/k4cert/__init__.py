"""Certify graphs as 3-colourable or as containing a K4 minor."""

from .coloring import Coloring, find_proper_coloring, verify_coloring
from .critical import CriticalPair, ProofViolation, extract_critical_pair
from .extractor import BranchDecomposition, Certificate, audit_trace, extract_k4_minor
from .graph import Graph, from_edge_list
from .oracle import brute_force_k4_minor, is_k4_minor_free, verify_k4_minor

__version__ = "0.1.0"
