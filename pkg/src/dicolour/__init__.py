"""Exact fractional colouring parameters of small digraphs and multigraphs."""

__version__ = "0.1.0"

from .errors import CapacityError, InputError, ParseError
from .structures import (
    MultiDigraph,
    MultiGraph,
    acyclic_orientation,
    digirth,
    directed_cycles,
    is_acyclic,
    is_forest,
    maximal_acyclic_sets,
    symmetric_orientation,
    symmetric_part,
)
from .families import (
    aux_graph_H,
    aux_graph_HF,
    circulant_digraph,
    circulant_graph,
    circular_distance,
    cyclic_interval,
    directed_cycle,
    min_noninterval_size,
)
from .homomorphisms import find_hom, is_acyclic_hom, is_circular_hom, is_core, is_graph_hom
from .params import (
    Colouring,
    ParamResult,
    compute_param,
    decide_b_tuple,
    decide_circular,
    decide_dichromatic,
    decide_graph_kd,
    decide_star,
    decide_tree,
    validate_colouring,
)
from .fractional import LpSolution, chi_f, chi_f_dual_witness, decide_chi_f
from .reductions import (
    gadget_dg,
    gadget_gkd,
    l_split,
    split_reduction_params,
    verify_reduction,
)
