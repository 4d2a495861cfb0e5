"""Exact constructions of spaces with prescribed path-component spaces.

The planar space K has path-component space [0, 1]; finite powers of K
pulled back over box regions realize those regions; and words over
component values model the free topological groups that arise as
fundamental groups of the associated wedge and suspension spaces.
"""

from .approx import CubicalModel, HomologyReport, build_k_n, hausdorff_bound, homology, trace_of_k
from .freegroup import (
    CombinatorialLoop,
    GroupWord,
    contract,
    graev_reduce,
    insert_normal_closure,
    loop_image,
    reduce,
    suspension_image,
)
from .product_realize import BoxRegion, PointKd, fiber_kd, member_y, path_kd, q_kd, realize_report
from .space_k import (
    Arc,
    Fiber,
    PLPath,
    PointK,
    component_of,
    fiber_k,
    member_k,
    path,
    q_k,
    same_component,
    segment_in_k,
    separation_witness,
)
from .ternary import CantorClass, CantorGap, TernaryExpansion, cantor_function, classify, gaps_between, ternary_expand

__version__ = "0.1.0"
