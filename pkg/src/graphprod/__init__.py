"""Graph products of cyclic groups: normal forms, centralizers and automorphism generators."""
from .labeled_graph import INF, GraphAutomorphism, GraphError, LabeledGraph
from .words import GroupElement, ReductionOrderError, WordError, element, identity, multiply, normalize, vertex
from .automorphisms import Automorphism, AutomorphismError
from .centralizer import basic_form, centralizer, rank, root
from .generators import generating_set, star_generating_set, subgroup_one_set

__version__ = "0.1.0"

__all__ = [
    "INF",
    "Automorphism",
    "AutomorphismError",
    "GraphAutomorphism",
    "GraphError",
    "GroupElement",
    "LabeledGraph",
    "ReductionOrderError",
    "WordError",
    "basic_form",
    "centralizer",
    "element",
    "generating_set",
    "identity",
    "multiply",
    "normalize",
    "rank",
    "root",
    "star_generating_set",
    "subgroup_one_set",
    "vertex",
]
