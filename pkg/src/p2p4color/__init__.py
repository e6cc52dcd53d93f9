"""Colouring (P2∪P4, X)-free graphs within their χ-binding bounds."""
from .clique import clique_number, max_clique
from .cograph import color_cograph, cotree
from .colorers import StructureViolation, bound, color, color_butterfly_free, color_diamond_free, color_gem_free
from .coloring import Coloring, verify_coloring
from .detect import find_induced, find_odd_antihole, find_odd_hole, is_in_class, pattern
from .gen import named_graph
from .graph import Graph, complement, from_edge_list, induced, mycielskian
from .oracle import chromatic_number
from .perfection import certify_perfect, exhaustive_perfection
from .wagon import verify_structure, wagon_partition

__all__ = [
    "Coloring", "Graph", "StructureViolation", "bound", "certify_perfect", "chromatic_number",
    "clique_number", "color", "color_butterfly_free", "color_cograph", "color_diamond_free",
    "color_gem_free", "complement", "cotree", "exhaustive_perfection", "find_induced",
    "find_odd_antihole", "find_odd_hole", "from_edge_list", "induced", "is_in_class",
    "max_clique", "mycielskian", "named_graph", "pattern", "verify_coloring",
    "verify_structure", "wagon_partition",
]
