import math
import random

import pytest

from armkin import (
    ArmSpec,
    ChordMap,
    MapKind,
    SignPlan,
    config_distance,
    evaluate_ik,
    forward_kinematics,
    interval_sign,
    normalize_arm,
    triangle_angles,
)
from armkin.design import design_pair
from armkin.engine import all_plus_plan, chord_chain, const_map


def test_triangle_angles_right_triangle():
    ang = triangle_angles("+", 3.0, 5.0, 4.0)
    assert ang.theta == pytest.approx(math.acos(0.6))
    assert ang.phi == pytest.approx(math.acos(0.8))
    # the three angles of a 3-4-5 triangle close up
    apex = math.pi - ang.theta - ang.phi
    assert apex == pytest.approx(math.pi / 2)


def test_triangle_angles_degenerate_cases():
    stretched = triangle_angles("+", 2.0, 3.0, 1.0)  # x_p = x_prev + l
    assert (stretched.theta, stretched.phi) == (0.0, 0.0)
    folded = triangle_angles("+", 2.0, 1.0, 3.0)  # x_p = x_prev - l
    assert (folded.theta, folded.phi) == (math.pi, 0.0)
    # short-segment fold: law of cosines gives theta=0, phi=pi
    doubled = triangle_angles("+", 2.0, 1.0, 1.0)
    assert (doubled.theta, doubled.phi) == (0.0, math.pi)


def test_triangle_angles_negative_branch():
    plus = triangle_angles("+", 3.0, 5.0, 4.0)
    minus = triangle_angles("-", 3.0, 5.0, 4.0)
    assert minus.theta == pytest.approx(-plus.theta)
    assert minus.phi == pytest.approx(-plus.phi)
    # both branches coincide on the circle at a degenerate triangle
    folded_minus = triangle_angles("-", 2.0, 1.0, 3.0)
    assert folded_minus.theta == math.pi  # -pi canonicalizes to pi
    assert folded_minus.phi == 0.0


def test_triangle_angles_errors():
    with pytest.raises(ValueError):
        triangle_angles("+", 0.0, 1.0, 1.0)
    with pytest.raises(ValueError):
        triangle_angles("+", 1.0, -1.0, 1.0)
    with pytest.raises(ValueError):
        triangle_angles("+", 1.0, 5.0, 1.0)  # violates the triangle inequality
    with pytest.raises(ValueError):
        triangle_angles("x", 1.0, 1.0, 1.0)


def test_chord_map_min_max_step():
    m = ChordMap(kind=MapKind.MIN, seg=2.0, lo=0.0, hi=10.0, lo_prev=1.0, hi_prev=10.0)
    assert m(4.0) == pytest.approx(2.0)
    m = ChordMap(kind=MapKind.MAX, seg=2.0, lo=0.0, hi=10.0, lo_prev=0.5, hi_prev=3.0)
    assert m(0.5) == pytest.approx(2.5)
    m = ChordMap(
        kind=MapKind.STEP,
        seg=2.0,
        lo=0.0,
        hi=10.0,
        lo_prev=1.0,
        hi_prev=3.0,
        x1=2.0,
        x2=4.0,
    )
    assert m(3.0) == pytest.approx(2.0)  # midpoint of MAX(3)=3 and MIN(3)=1
    assert m(1.0) == pytest.approx(3.0)  # MAX side
    assert m(4.5) == pytest.approx(2.5)  # MIN side


def test_chord_map_domain_error():
    m = ChordMap(kind=MapKind.MIN, seg=2.0, lo=1.0, hi=5.0, lo_prev=1.0, hi_prev=4.0)
    with pytest.raises(ValueError):
        m(7.0)


def test_chord_map_stays_feasible_on_grid():
    rng = random.Random(2)
    for _ in range(200):
        arm = normalize_arm(
            ArmSpec([rng.uniform(0.2, 5.0) for _ in range(rng.randint(2, 7))])
        )
        pair = design_pair(arm)
        for k, m in enumerate(pair.maps):
            seg = m.seg if m.kind is not MapKind.CONST else None
            for i in range(50):
                x = m.lo + (m.hi - m.lo) * (i + 0.5) / 50
                v = m(x)
                assert v > 0.0
                assert pair.lo[k] - 1e-9 <= v <= pair.hi[k] + 1e-9
                if seg is not None:
                    assert abs(x - seg) - 1e-9 <= v <= x + seg + 1e-9


def test_interval_sign_examples():
    plan = SignPlan(switches=((2.0, "+"), (5.0, "-")))
    assert interval_sign(plan, 1.0) == "+"
    assert interval_sign(plan, 3.0) == "-"
    assert interval_sign(plan, 5.0) == "-"
    with pytest.raises(ValueError):
        interval_sign(plan, 6.0)
    with pytest.raises(ValueError):
        SignPlan(switches=((5.0, "+"), (2.0, "-")))


def _two_link_setup(l_base, l_tip):
    maps = [const_map(l_tip, abs(l_base - l_tip), l_base + l_tip)]
    plans = [None, all_plus_plan(l_base + l_tip)]
    return maps, plans


def test_evaluate_ik_examples():
    maps, plans = _two_link_setup(2.0, 1.0)
    out = evaluate_ik([2.0, 1.0], maps, plans, 3.0)
    assert config_distance(out.angles, (0.0, 0.0)) == 0.0

    out = evaluate_ik([2.0, 1.0], maps, plans, 1.0)
    assert config_distance(out.angles, (0.0, math.pi)) == 0.0

    maps, plans = _two_link_setup(2.0, 2.0)
    z = 2.0 * math.sqrt(2.0)
    out = evaluate_ik([2.0, 2.0], maps, plans, z)
    assert config_distance(out.angles, (math.pi / 4, -math.pi / 4)) < 1e-12
    fx, fy = forward_kinematics(ArmSpec([2, 2]), out)
    assert fx == pytest.approx(z) and abs(fy) < 1e-12


def test_evaluate_ik_errors():
    maps, plans = _two_link_setup(2.0, 1.0)
    with pytest.raises(ValueError):
        evaluate_ik([2.0, 1.0], maps, plans, 0.0)
    with pytest.raises(ValueError):
        evaluate_ik([2.0, 1.0], maps, plans, 5.0)
    with pytest.raises(ValueError):
        evaluate_ik([2.0], [], [None], 1.0)


def test_round_trip_on_random_arms():
    rng = random.Random(5)
    for _ in range(120):
        n = rng.randint(2, 8)
        arm = normalize_arm(ArmSpec([rng.uniform(0.2, 5.0) for _ in range(n)]))
        pair = design_pair(arm)
        reach = pair.reach
        spec = ArmSpec(arm.lengths)
        for i in range(40):
            z = reach.lo + (reach.hi - reach.lo) * (i + 0.5) / 40
            if z <= 0.0:
                continue
            for alt in (False, True):
                cfg = pair.evaluate(z, alt=alt)
                fx, fy = forward_kinematics(spec, cfg)
                assert abs(fx - z) <= 1e-9 * arm.total
                assert abs(fy) <= 1e-9 * arm.total


def _engine_branch_angles(pair, z, p, sign):
    """(theta, phi) for the level-p triangle exactly as evaluate_ik sees it."""
    from armkin.engine import chord_chain_with_snaps

    xs, snaps = chord_chain_with_snaps(pair.maps, z, tol=pair.tol)
    if snaps[p] is not None:
        return snaps[p]
    ltip = list(reversed(pair.lengths))
    ang = triangle_angles(sign, ltip[p], xs[p], xs[p - 1], tol=pair.tol)
    return ang.theta, ang.phi


def test_branch_angles_agree_at_every_switch():
    # continuity hinges on the affected triangle being collinear at a switch
    rng = random.Random(6)
    arms = [[3, 2.5, 2.5, 0.5], [4, 3, 2, 0.5], [2, 2, 1], [2, 1]]
    arms += [
        [rng.uniform(0.2, 5.0) for _ in range(rng.randint(2, 8))] for _ in range(200)
    ]
    for lengths in arms:
        arm = normalize_arm(ArmSpec(lengths))
        pair = design_pair(arm)
        for p in range(1, arm.n):
            plan = pair.plans_alt[p]
            if plan is None or len(plan.switches) == 1:
                continue
            for xi, _ in plan.switches[:-1]:
                if not (pair.reach.lo <= xi <= pair.reach.hi) or xi <= 0:
                    continue
                t_plus, f_plus = _engine_branch_angles(pair, xi, p, "+")
                t_minus, f_minus = _engine_branch_angles(pair, xi, p, "-")
                assert abs(math.remainder(t_plus - t_minus, 2 * math.pi)) < 1e-9
                assert abs(math.remainder(f_plus - f_minus, 2 * math.pi)) < 1e-9


def test_switch_chords_sit_on_degenerate_walls():
    for lengths in [[3, 2.5, 2.5, 0.5], [4, 3, 2, 0.5], [2, 2, 1]]:
        arm = normalize_arm(ArmSpec(lengths))
        pair = design_pair(arm)
        tol = 1e-9 * arm.total
        for p, xis in pair.switch_xs.items():
            f = pair.maps[p - 1]
            seg = f.seg if f.kind is not MapKind.CONST else arm.ascending()[p]
            for xi in xis:
                if not (f.lo - tol <= xi <= f.hi + tol):
                    continue
                v = f(min(max(xi, f.lo), f.hi))
                on_fold = abs(xi - abs(v - seg)) <= tol
                on_stretch = abs(xi - (v + seg)) <= tol
                assert on_fold or on_stretch, (lengths, p, xi)


def test_refinement_shrinks_steps():
    arm = normalize_arm(ArmSpec([3, 2.5, 2.5, 0.5]))
    pair = design_pair(arm)

    def max_step(steps):
        zs = [0.05 + (5.45 - 0.05) * i / (steps - 1) for i in range(steps)]
        worst = 0.0
        prev = None
        for z in zs:
            cfg = pair.evaluate(z, alt=True)
            if prev is not None:
                worst = max(worst, config_distance(prev.angles, cfg.angles))
            prev = cfg
        return worst

    coarse = max_step(500)
    fine = max_step(2000)
    assert fine < coarse
    assert coarse / fine >= 1.9


def test_chord_chain_positive_guard():
    # a crafted constant map returning zero must be rejected
    bad = const_map(0.0, 0.5, 1.5)
    with pytest.raises(ValueError):
        chord_chain([bad], 1.0)
