"""Rate regions of the three-receiver AWGN broadcast channel with receiver message side information."""
from .channel import ChannelParams, ChannelParamsError, DomainError, capacity_fn, validate_params
from .graphs import SideInfoGraph, decompose, induced_acyclic_vertex_sets, member_graph
from .regions import (
    BoundReport,
    Hull,
    ParamRegion,
    containment_report,
    hull,
    hull_member,
    intersect,
    slice_region,
    support,
)
from .bounds_g4 import (
    inner1_g4,
    inner2_g4,
    outer1_g4,
    outer2_g4_g21,
    proposed_inner_g4,
    proposed_outer_g4,
    thresholds_g4_g21,
)
from .bounds_g7 import (
    best_inner_g7,
    best_outer,
    capacity_g7,
    comparison_report_g7,
    inner_g7,
    outer1_g7,
    proposed_outer_g7,
)

__version__ = "0.1.0"

__all__ = [
    "ChannelParams",
    "ChannelParamsError",
    "DomainError",
    "capacity_fn",
    "validate_params",
    "SideInfoGraph",
    "decompose",
    "induced_acyclic_vertex_sets",
    "member_graph",
    "BoundReport",
    "Hull",
    "ParamRegion",
    "containment_report",
    "hull",
    "hull_member",
    "intersect",
    "slice_region",
    "support",
    "inner1_g4",
    "inner2_g4",
    "outer1_g4",
    "outer2_g4_g21",
    "proposed_inner_g4",
    "proposed_outer_g4",
    "thresholds_g4_g21",
    "best_inner_g7",
    "best_outer",
    "capacity_g7",
    "comparison_report_g7",
    "inner_g7",
    "outer1_g7",
    "proposed_outer_g7",
]
