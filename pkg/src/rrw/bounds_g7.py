"""Group-7 bounds: members G17 u G2k, where receiver 3 knows M1 and M2."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import kernels
from .channel import ChannelParams, capacity_fn
from .graphs import (
    SideInfoGraph,
    decompose,
    induced_acyclic_vertex_sets,
    is_group7,
    member_graph,
    out_neighbors,
)
from .regions import (
    COINCIDES,
    DEFAULT_TOL,
    SIMPLEX,
    BoundReport,
    Const,
    MaskedConstraint,
    ParamRegion,
    Region,
    Sum,
    cap,
    containment_report,
    intersect,
)

FIRST_BLOCK = (1, 3, 4, 6)
SECOND_BLOCK = (2, 5, 7, 8)


class UnsupportedMemberError(ValueError):
    pass


@dataclass(frozen=True)
class Group7Member:
    k: int
    graph: SideInfoGraph
    scheme_block: str
    o1: frozenset

    @classmethod
    def of(cls, k_or_graph) -> "Group7Member":
        if isinstance(k_or_graph, Group7Member):
            return k_or_graph
        if isinstance(k_or_graph, SideInfoGraph):
            g = k_or_graph
            if not is_group7(g):
                raise UnsupportedMemberError(f"graph {g} is not a group-7 member")
            k = decompose(g).subgraph_index
        else:
            k = int(k_or_graph)
            g = member_graph(7, k)
        block = "second" if (2, 3) in g.arcs else "first"
        return cls(k, g, block, out_neighbors(g, 1))

    @property
    def sum_mask(self) -> tuple:
        return tuple(i for i in (1, 3) if i not in self.o1)

    @property
    def solved(self) -> bool:
        return self.scheme_block == "second"


def inner_g7(member, ch: ChannelParams) -> ParamRegion:
    """Superposition of x1 ~ N(0, aP) over x2 ~ N(0, (1-a)P); alpha is the parameter."""
    m = Group7Member.of(member)
    P, N1, N2, N3 = ch.P, ch.N1, ch.N2, ch.N3
    cloud = cap(P, N2, (1, -1), (0, 1))  # C((1-a)P/(aP+N2))
    if m.scheme_block == "first":
        cons = (
            MaskedConstraint((2,) + m.sum_mask, Sum((cloud, cap(P, N1, (0, 1), (0, 0)))), "receiver-1 decoding"),
            MaskedConstraint((2,), cloud, "R2"),
            MaskedConstraint((2, 3), Sum((cloud, cap(P, N3, (0, 1), (0, 0)))), "receiver-2 decoding"),
            MaskedConstraint((3,), Const(ch.single_user_capacity(3)), "R3"),
        )
    else:
        cons = (
            MaskedConstraint((1,), cap(P, N1, (0, 1), (0, 0)), "R1"),
            MaskedConstraint(m.sum_mask, Const(ch.single_user_capacity(1)), "receiver-1 sum"),
            MaskedConstraint((2,), cloud, "R2"),
            MaskedConstraint((3,), Const(ch.single_user_capacity(3)), "R3"),
        )
    return ParamRegion(cons, name=f"inner(G17uG2{m.k})")


def outer1_g7(ch: ChannelParams) -> ParamRegion:
    """Two-receiver BC region of receivers 1 and 2 plus the point-to-point bound on R3."""
    P = ch.P
    return ParamRegion(
        (
            MaskedConstraint((1,), cap(P, ch.N1, (0, 1), (0, 0)), "R1"),
            MaskedConstraint((2,), cap(P, ch.N2, (1, -1), (0, 1)), "R2"),
            MaskedConstraint((3,), Const(ch.single_user_capacity(3)), "R3"),
        ),
        name="outer1'",
    )


def best_outer(graph: SideInfoGraph, ch: ChannelParams) -> ParamRegion:
    """Acyclic induced subgraph bound: for every acyclic induced vertex set S,
    sum_{i in S} R_i <= max_{i in S} C(P/N_i). Redundant rows are kept."""
    cons = []
    for vs in induced_acyclic_vertex_sets(graph):
        best = max(ch.single_user_capacity(i) for i in vs)
        cons.append(MaskedConstraint(vs, Const(best), "S=" + "".join(map(str, vs))))
    return ParamRegion(tuple(cons), name="best_outer")


def proposed_outer_g7(member, ch: ChannelParams) -> Region:
    m = Group7Member.of(member)
    return intersect(outer1_g7(ch), best_outer(m.graph, ch))


def best_inner_g7(member, ch: ChannelParams) -> ParamRegion:
    """Three-layer superposition bound over the power split (a1, a2, a3 = 1 - a1 - a2)."""
    m = Group7Member.of(member)
    if m.solved:
        raise UnsupportedMemberError(
            f"k={m.k} has a known capacity; use inner_g7 for its inner bound"
        )
    P, N1, N2, N3 = ch.P, ch.N1, ch.N2, ch.N3
    # coefficients over (1, a1, a2); a3 = 1 - a1 - a2
    b1 = cap(P, N1, (0, 1, 0), (0, 0, 0))
    b2 = cap(P, N2, (0, 0, 1), (0, 1, 0))
    b3 = cap(P, N2, (1, -1, -1), (0, 1, 1))
    direct3 = cap(P, N3, (1, -1, -1), (0, 0, 0))
    cons = (
        MaskedConstraint((2,) + m.sum_mask, Sum((b1, b2, b3)), "receiver-1 sum"),
        MaskedConstraint((2, 3), Sum((b2, b3)), "receiver-2 sum"),
        MaskedConstraint((3,), direct3, "R3 direct"),
        MaskedConstraint((3,), b3, "R3 top layer"),
    )
    return ParamRegion(cons, domain=SIMPLEX, name=f"best_inner(G17uG2{m.k})")


def b_terms(a1: float, a2: float, a3: float, ch: ChannelParams) -> tuple[float, float, float]:
    P, N1, N2 = ch.P, ch.N1, ch.N2
    return (
        capacity_fn(a1 * P / N1),
        capacity_fn(a2 * P / (a1 * P + N2)),
        capacity_fn(a3 * P / ((a1 + a2) * P + N2)),
    )


@dataclass
class Certificate:
    region: Region
    outer: Region
    report: BoundReport

    @property
    def certified(self) -> bool:
        return self.report.verdict == COINCIDES


def capacity_g7(member, ch: ChannelParams, grid: int = 32, tol: float = DEFAULT_TOL) -> Certificate:
    """Capacity region of a solved member together with its coincidence certificate."""
    m = Group7Member.of(member)
    if not m.solved:
        raise UnsupportedMemberError(f"capacity of G17uG2{m.k} is not established")
    inner = inner_g7(m, ch)
    outer = outer1_g7(ch) if m.k in (7, 8) else proposed_outer_g7(m, ch)
    return Certificate(inner, outer, containment_report(inner, outer, grid, tol))


def polyhedron_check(member, ch: ChannelParams, alpha, eps: float = 1e-9) -> bool:
    """Whether every vertex of the best-inner polyhedron at the power split ``alpha``
    satisfies the proposed inner-bound conditions at alpha = alpha_1."""
    m = Group7Member.of(member)
    a1, a2, _ = alpha
    best = best_inner_g7(m, ch)
    prop = inner_g7(m, ch)
    V, _ = kernels.polytope_vertices(best.masks, best.rhs_at(np.array([[a1, a2]])))
    lhs = V @ prop.masks.T
    rhs = prop.rhs_at(np.array([a1]))[0]
    return bool(np.all(lhs <= rhs + eps))


@dataclass
class ComparisonReport:
    inner: BoundReport
    outer: BoundReport

    def to_json(self) -> dict:
        return {"inner": self.inner.to_json(), "outer": self.outer.to_json()}


def comparison_report_g7(member, ch: ChannelParams, grid: int = 32, tol: float = DEFAULT_TOL) -> ComparisonReport:
    """best_inner inside the proposed inner bound, and the proposed outer bound inside best_outer."""
    m = Group7Member.of(member)
    if m.solved:
        raise UnsupportedMemberError(f"k={m.k} is solved; use capacity_g7")
    inner = containment_report(best_inner_g7(m, ch), inner_g7(m, ch), grid, tol)
    outer = containment_report(proposed_outer_g7(m, ch), best_outer(m.graph, ch), grid, tol)
    return ComparisonReport(inner, outer)
