"""Group-4 bounds: members G14 u G2k, where receiver 3 knows M1 and receiver 2 does not."""
from __future__ import annotations

import math
from dataclasses import dataclass

from .channel import ChannelParams, capacity_fn
from .graphs import SideInfoGraph, decompose, is_group4, member_graph, out_neighbors
from .regions import Const, Hull, MaskedConstraint, ParamRegion, cap, intersect

REGIME_TOL = 1e-12
THRESHOLD_XTOL = 1e-10


class UnsupportedMemberError(ValueError):
    pass


@dataclass(frozen=True)
class Group4Member:
    k: int
    graph: SideInfoGraph
    o1_contains_3: bool
    special_scheme: bool

    @classmethod
    def of(cls, k_or_graph) -> "Group4Member":
        if isinstance(k_or_graph, SideInfoGraph):
            g = k_or_graph
            if not is_group4(g):
                raise UnsupportedMemberError(f"graph {g} is not a group-4 member")
            k = decompose(g).subgraph_index
        else:
            k = int(k_or_graph)
            g = member_graph(4, k)
        o1 = out_neighbors(g, 1)
        special = (2, 3) in g.arcs and (1, 3) not in g.arcs
        return cls(k, g, 3 in o1, special)

    @property
    def o1(self) -> frozenset:
        return out_neighbors(self.graph, 1)

    @property
    def sum_mask(self) -> tuple:
        """{1, 3} minus the messages receiver 1 already knows."""
        return tuple(i for i in (1, 3) if i not in self.o1)

    @property
    def decode_mask(self) -> tuple:
        """Every message receiver 1 does not know (the special rows' sum)."""
        return tuple(i for i in (1, 2, 3) if i not in self.o1)


def _member(member) -> Group4Member:
    if isinstance(member, Group4Member):
        return member
    return Group4Member.of(member)


def inner1_g4(member, ch: ChannelParams) -> ParamRegion:
    """Scheme 1: DPC of x2 (for receiver 2) against x1 (carrying M1, M3); parameter alpha."""
    m = _member(member)
    P, N1, N2, N3 = ch.P, ch.N1, ch.N2, ch.N3
    r1_bound = cap(P, N1, (1, -1), (0, 1))  # C((1-a)P/(aP+N1))
    r2_bound = cap(P, N2, (0, 1), (0, 0))  # C(aP/N2)
    r3_bound = cap(P, N3, (1, -1), (0, 1))  # C((1-a)P/(aP+N3))
    if m.special_scheme:
        cons = [
            MaskedConstraint((1,), r1_bound, "R1"),
            MaskedConstraint(m.decode_mask, Const(ch.single_user_capacity(1)), "decoded sum"),
        ]
    else:
        cons = [MaskedConstraint(m.sum_mask, r1_bound, "receiver-1 sum")]
    cons += [MaskedConstraint((2,), r2_bound, "R2"), MaskedConstraint((3,), r3_bound, "R3")]
    return ParamRegion(tuple(cons), name=f"inner1(G14uG2{m.k})")


def inner2_g4(member, ch: ChannelParams) -> ParamRegion:
    """Scheme 2: DPC of x1 (for receiver 3) against x2 (carrying M2); parameter gamma."""
    m = _member(member)
    P, N1, N2, N3 = ch.P, ch.N1, ch.N2, ch.N3
    r1_bound = cap(P, N1, (0, 1), (0, 0))  # C(gP/N1)
    r2_bound = cap(P, N2, (1, -1), (0, 1))  # C((1-g)P/(gP+N2))
    r3_bound = cap(P, N3, (0, 1), (0, 0))  # C(gP/N3)
    if m.special_scheme:
        cons = [
            MaskedConstraint((1,), r1_bound, "R1"),
            MaskedConstraint(m.decode_mask, Const(ch.single_user_capacity(1)), "decoded sum"),
        ]
    else:
        cons = [MaskedConstraint(m.sum_mask, r1_bound, "receiver-1 sum")]
    cons += [MaskedConstraint((2,), r2_bound, "R2"), MaskedConstraint((3,), r3_bound, "R3")]
    return ParamRegion(tuple(cons), name=f"inner2(G14uG2{m.k})")


def outer1_g4(ch: ChannelParams) -> ParamRegion:
    """Point-to-point bound on R1 plus the two-receiver BC region of receivers 2 and 3."""
    P = ch.P
    return ParamRegion(
        (
            MaskedConstraint((1,), Const(ch.single_user_capacity(1)), "R1"),
            MaskedConstraint((2,), cap(P, ch.N2, (0, 1), (0, 0)), "R2"),
            MaskedConstraint((3,), cap(P, ch.N3, (1, -1), (0, 1)), "R3"),
        ),
        name="outer1",
    )


def outer2_g4_g21(ch: ChannelParams, member=1) -> ParamRegion:
    """Enhanced-channel bound (N3 lowered to N2); only stated for G14 u G21."""
    m = _member(member)
    if m.k != 1:
        raise UnsupportedMemberError(
            f"the enhanced-channel outer bound is only available for k=1 (got k={m.k})"
        )
    P = ch.P
    return ParamRegion(
        (
            MaskedConstraint((1, 3), cap(P, ch.N1, (0, 1), (0, 0)), "R1+R3"),
            MaskedConstraint((2,), cap(P, ch.N2, (1, -1), (0, 1)), "R2"),
            MaskedConstraint((3,), cap(P, ch.N2, (0, 1), (0, 0)), "R3"),
        ),
        name="outer2",
    )


def proposed_inner_g4(member, ch: ChannelParams) -> Hull:
    m = _member(member)
    return Hull(inner1_g4(m, ch), inner2_g4(m, ch), name=f"hull(G14uG2{m.k})")


@dataclass(frozen=True)
class ProposedOuter:
    region: object
    outer1_only: bool


def proposed_outer_g4(member, ch: ChannelParams) -> ProposedOuter:
    """outer1 & outer2 for k=1; outer1 alone (flagged) for other members."""
    m = _member(member)
    out1 = outer1_g4(ch)
    if m.k == 1:
        return ProposedOuter(intersect(out1, outer2_g4_g21(ch, m)), False)
    return ProposedOuter(out1, True)


# ---------------------------------------------------------------------- thresholds


@dataclass(frozen=True)
class ThresholdPair:
    r_thr3: float
    r_thr3_prime: float
    regime: str
    gamma_star: float | None = None
    alpha_star: float | None = None

    def to_json(self) -> dict:
        return {
            "r_thr3": self.r_thr3,
            "r_thr3_prime": self.r_thr3_prime,
            "regime": self.regime,
            "gamma_star": self.gamma_star,
            "alpha_star": self.alpha_star,
        }


def _bisect_increasing(f, target, lo=0.0, hi=1.0, xtol=THRESHOLD_XTOL):
    """Solve f(x) = target for increasing f on [lo, hi]."""
    while hi - lo > xtol:
        mid = 0.5 * (lo + hi)
        if f(mid) < target:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def thresholds_g4_g21(r1: float, ch: ChannelParams) -> ThresholdPair:
    """R3 thresholds below / above which the k=1 bounds coincide for fixed R1."""
    P, N1, N3 = ch.P, ch.N1, ch.N3
    c1 = capacity_fn(P / N1)
    c3 = capacity_fn(P / N3)
    if not (math.isfinite(r1) and -REGIME_TOL <= r1 <= c1 + REGIME_TOL):
        raise ValueError(f"r1 must lie in [0, C(P/N1)] = [0, {c1:.6g}], got {r1}")
    r1 = min(max(r1, 0.0), c1)
    if r1 <= REGIME_TOL:
        return ThresholdPair(0.0, 0.0, "zero", 0.0, 1.0)
    if r1 >= c1 - c3 - REGIME_TOL:
        v = c1 - r1
        return ThresholdPair(v, v, "saturated")

    def gap_gamma(g):
        return capacity_fn(g * P / N1) - capacity_fn(g * P / N3)

    def gap_alpha_rev(x):
        # the alpha-equation written in x = 1 - alpha, where it is increasing
        return capacity_fn(x * P / ((1 - x) * P + N1)) - capacity_fn(x * P / ((1 - x) * P + N3))

    g = _bisect_increasing(gap_gamma, r1)
    a = 1.0 - _bisect_increasing(gap_alpha_rev, r1)
    thr = capacity_fn(g * P / N3)
    thr_p = capacity_fn((1 - a) * P / (a * P + N3))
    return ThresholdPair(thr, thr_p, "interior", g, a)


__all__ = [
    "Group4Member",
    "ProposedOuter",
    "ThresholdPair",
    "UnsupportedMemberError",
    "inner1_g4",
    "inner2_g4",
    "outer1_g4",
    "outer2_g4_g21",
    "proposed_inner_g4",
    "proposed_outer_g4",
    "thresholds_g4_g21",
]
