import numpy as np
import pytest

from rrw import bounds_g4 as g4
from rrw import bounds_g7 as g7
from rrw.channel import ChannelParams, capacity_fn
from rrw.oracle import (
    brute_hull_member,
    brute_member,
    brute_radial,
    brute_support,
    brute_vertices,
    rhs_lipschitz,
)
from rrw.regions import Const, MaskedConstraint, ParamRegion, hull, support

C = capacity_fn
CH = ChannelParams(10, 1, 2, 4)


def test_brute_member_origin():
    assert brute_member(g4.inner1_g4(1, CH), [0, 0, 0])


def test_step_halving_changes_only_near_boundary():
    reg = g7.inner_g7(1, CH)
    pts = np.random.default_rng(3).uniform(0, 1.2, (2000, 3))
    a = brute_member(reg, pts, theta_step=1e-3)
    b = brute_member(reg, pts, theta_step=5e-4)
    band = 2 * 1e-3 * rhs_lipschitz(reg, 1e-3)
    changed = pts[a != b]
    assert brute_member(reg, changed, theta_step=1e-3, slack=band).all()


def test_brute_radial_axes():
    reg = g4.outer1_g4(CH)
    for i, want in enumerate([C(10), C(5), C(2.5)]):
        assert abs(brute_radial(reg, np.eye(3)[i], 1e-3) - want) <= 1e-3


def test_brute_radial_zero_region():
    zero = ParamRegion((MaskedConstraint((1, 2, 3), Const(0.0)),))
    assert brute_radial(zero, [1, 1, 1]) == 0.0


def test_brute_radial_brackets_engine():
    reg = g4.inner2_g4(1, CH)
    rng = np.random.default_rng(5)
    for d in rng.uniform(0, 1, (10, 3)):
        d /= np.linalg.norm(d)
        diff = reg.radial(d) - brute_radial(reg, d)
        assert -1e-9 <= diff <= 2e-3


def test_brute_vertices_box():
    V = brute_vertices(np.eye(3), np.array([1.0, 2.0, 3.0]))
    assert len(V) == 8
    assert np.allclose(V.max(axis=0), [1, 2, 3])


def test_brute_support_matches_engine():
    reg = g4.outer2_g4_g21(CH)
    for w in ([1, 1, 1], [0.2, 1, 3], [1, 0, 0]):
        assert brute_support(reg, w) == pytest.approx(support(reg, w), abs=1e-4)


def test_brute_hull_member():
    a, b = g4.inner1_g4(1, CH), g4.inner2_g4(1, CH)
    assert brute_hull_member(a, b, [0.0, C(5) * 0.99, 0.0])
    assert brute_hull_member(a, b, [C(10) * 0.99, 0.0, 0.0])
    top = max(support(a, np.ones(3)), support(b, np.ones(3)))
    assert not brute_hull_member(a, b, np.full(3, top / 3 + 1e-3))


def test_brute_hull_agrees_away_from_band():
    a, b = g4.inner1_g4(1, CH), g4.inner2_g4(1, CH)
    h = hull(a, b)
    rng = np.random.default_rng(11)
    for d in rng.uniform(0, 1, (12, 3)):
        d /= np.linalg.norm(d)
        r = h.radial(d)
        assert brute_hull_member(a, b, 0.97 * r * d)
        assert not brute_hull_member(a, b, 1.03 * r * d)


def test_lipschitz_needs_interval():
    with pytest.raises(ValueError):
        rhs_lipschitz(g7.best_inner_g7(1, CH))
