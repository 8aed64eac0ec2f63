"""Independent checks: component certificates and a brute-force census.

The census never touches the IK machinery: it enumerates chord chains on a
grid, expands them with every sign choice, and links states that are
provably connected - fixed-sign neighbours (the chord constraint region is
an intersection of half-planes, hence convex, so straight segments between
feasible chains stay feasible) and single sign flips through genuinely
feasible degenerate triangles.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence, Union

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from .core import (
    ArmSpec,
    Configuration,
    SortedArm,
    base_length,
    canonical_angle,
    config_distance,
    forward_kinematics,
)
from .design import SweepRow
from .reach import reach_closed, reach_recursive
from .topology import Variant, classify_connectivity


@dataclass(frozen=True)
class ComponentCertificate:
    verdict: str  # "Same" | "Different" | "Inconclusive"
    psi_a: float
    psi_b: float


def _ranked_side_angle(
    spec: ArmSpec, cfg: Configuration, rank: int
) -> float:
    """Orientation of the rank-th longest polygon side (0 = longest)."""
    x, y = forward_kinematics(spec, cfg)
    sides = [(l, i, a) for i, (l, a) in enumerate(zip(spec.lengths, cfg.angles))]
    sides.append((math.hypot(x, y), spec.n, math.atan2(-y, -x)))
    sides.sort(key=lambda t: (-t[0], t[1]))
    return sides[rank][2]


def polygon_side_angle_gap(spec: ArmSpec, cfg: Configuration) -> float:
    """Signed angle between the 2nd- and 3rd-longest polygon sides."""
    return canonical_angle(
        _ranked_side_angle(spec, cfg, 1) - _ranked_side_angle(spec, cfg, 2)
    )


def component_certificate(
    spec: ArmSpec,
    z: float,
    cfg_a: Configuration,
    cfg_b: Configuration,
    *,
    psi_tol: float = 1e-9,
) -> ComponentCertificate:
    """Decide whether two equal-base-length configurations are separated.

    When the constrained space has two pieces, opposite signs of the angle
    between the 2nd- and 3rd-longest polygon sides certify that the
    configurations sit in different pieces.
    """
    tol = 1e-6 * (spec.total + z)
    for cfg in (cfg_a, cfg_b):
        got = base_length(spec, cfg)
        if abs(got - z) > tol:
            raise ValueError(
                f"configuration base length {got:.9g} does not match z={z:.9g}"
            )
    psi_a = polygon_side_angle_gap(spec, cfg_a)
    psi_b = polygon_side_angle_gap(spec, cfg_b)
    if config_distance(cfg_a.angles, cfg_b.angles) <= 1e-9:
        return ComponentCertificate("Same", psi_a, psi_b)
    conn = classify_connectivity(spec, z)
    clear = all(
        min(abs(p), math.pi - abs(p)) > psi_tol for p in (psi_a, psi_b)
    )
    if conn.variant is Variant.TWO and clear and (psi_a > 0.0) != (psi_b > 0.0):
        return ComponentCertificate("Different", psi_a, psi_b)
    return ComponentCertificate("Inconclusive", psi_a, psi_b)


def _theta_phi(l: float, xp: np.ndarray, xprev: np.ndarray):
    theta = np.arccos(np.clip((xp * xp + l * l - xprev * xprev) / (2.0 * xp * l), -1, 1))
    phi = np.arccos(np.clip((xp * xp + xprev * xprev - l * l) / (2.0 * xp * xprev), -1, 1))
    return theta, phi


def brute_force_components(
    spec: Union[ArmSpec, SortedArm, Sequence[float]], z: float, resolution: int = 64
) -> int:
    """Count components of the constrained space by grid enumeration.

    Free chords x_1 .. x_{n-2} are sampled at cell centres of their reach
    boxes; feasible chains are expanded by all sign choices and linked as
    described in the module docstring.  Cost grows as resolution^(n-2) times
    2^(n-1), so arms are capped at five segments.
    """
    if isinstance(spec, SortedArm):
        arm = ArmSpec(spec.lengths)
    elif isinstance(spec, ArmSpec):
        arm = spec
    else:
        arm = ArmSpec(spec)
    n = arm.n
    if n > 5:
        raise ValueError("brute force census supports at most 5 segments")
    if resolution < 16:
        raise ValueError("resolution must be at least 16")
    reach = reach_closed(arm.lengths)
    tol = arm.tol()
    if not (z > 0.0) or not reach.contains(z, tol=tol):
        raise ValueError(f"z={z:.6g} outside reach [{reach.lo:.6g}, {reach.hi:.6g}]")

    l = list(reversed(arm.lengths))  # l[p]: segment of the level-p triangle
    bounds = reach_recursive(l)
    d = n - 2  # free chords x_1 .. x_{n-2}
    n_signs = 1 << (n - 1)  # sign choices for levels 1 .. n-1

    if d == 0:
        # two mirror configurations; they merge only at a degenerate triangle
        gap = min(abs(z - (l[0] + l[1])), abs(z - abs(l[0] - l[1])))
        return 1 if gap <= tol else 2

    axes = []
    for p in range(1, n - 1):
        lo_p, hi_p = bounds[p].lo, bounds[p].hi
        h = (hi_p - lo_p) / resolution
        axes.append(lo_p + (np.arange(resolution) + 0.5) * h)
    mesh = np.meshgrid(*axes, indexing="ij")
    chords = [np.full(mesh[0].shape, l[0])] + list(mesh) + [
        np.full(mesh[0].shape, z)
    ]  # chords[p] = x_p with x_0 and x_{n-1} pinned

    feasible = np.ones(mesh[0].shape, dtype=bool)
    for p in range(1, n):
        feasible &= np.abs(chords[p - 1] - l[p]) <= chords[p]
        feasible &= chords[p] <= chords[p - 1] + l[p]

    cell_id = -np.ones(mesh[0].shape, dtype=np.int64)
    n_cells = int(feasible.sum())
    if n_cells == 0:
        return 0
    cell_id[feasible] = np.arange(n_cells)

    slack = max(tol, 1e-12)

    def _fold_min(lo_i: float, hi_i: float, seg: float) -> float:
        if lo_i <= seg <= hi_i:
            return 0.0
        return min(abs(lo_i - seg), abs(hi_i - seg))

    def flip_possible(k: int) -> bool:
        """Whether a feasible chain with a degenerate level-k triangle exists.

        The chain constraints form a path, so the set of x_k values reachable
        from below is an interval, each degenerate wall maps it to an interval
        of x_k, and pushing that interval up to the base tells exactly whether
        the wall meets the feasible region; no grid quantisation is involved.
        """
        d_lo, d_hi = bounds[k - 1].lo, bounds[k - 1].hi
        seg = l[k]
        pieces: list[tuple[float, float]] = [(d_lo + seg, d_hi + seg)]
        if d_hi >= seg:
            pieces.append((max(d_lo, seg) - seg, d_hi - seg))
        if d_lo <= seg:
            pieces.append((seg - min(d_hi, seg), seg - d_lo))
        for lo_i, hi_i in pieces:
            lo_i = max(lo_i, slack)  # keep away from the zero-chord singularity
            if lo_i > hi_i:
                continue
            for q in range(k + 1, n):
                lo_i, hi_i = _fold_min(lo_i, hi_i, l[q]), hi_i + l[q]
            if lo_i - slack <= z <= hi_i + slack:
                return True
        return False

    flip_ok = {k: flip_possible(k) for k in range(1, n)}

    rows: list[np.ndarray] = []
    cols: list[np.ndarray] = []

    def add_edges(a: np.ndarray, b: np.ndarray) -> None:
        rows.append(a)
        cols.append(b)

    # fixed-sign edges between neighbouring feasible cells
    offsets = []
    for off in np.ndindex(*([3] * d)):
        delta = tuple(o - 1 for o in off)
        if delta > tuple([0] * d):
            offsets.append(delta)
    for delta in offsets:
        src = [slice(None)] * d
        dst = [slice(None)] * d
        for ax, dd in enumerate(delta):
            if dd == 1:
                src[ax] = slice(0, -1)
                dst[ax] = slice(1, None)
            elif dd == -1:
                src[ax] = slice(1, None)
                dst[ax] = slice(0, -1)
        both = feasible[tuple(src)] & feasible[tuple(dst)]
        ia = cell_id[tuple(src)][both]
        ib = cell_id[tuple(dst)][both]
        if ia.size:
            for s in range(n_signs):
                add_edges(ia * n_signs + s, ib * n_signs + s)

    # single-level sign flips: when the degenerate wall is reachable, every
    # cell can slide to it through the (convex) feasible region and back, so
    # the two sign layers merge wholesale
    all_cells = np.arange(n_cells)
    for k in range(1, n):
        if not flip_ok[k]:
            continue
        bit = 1 << (k - 1)
        for s in range(n_signs):
            if s & bit:
                continue  # pair each sign with its flipped partner once
            add_edges(all_cells * n_signs + s, all_cells * n_signs + (s | bit))

    n_nodes = n_cells * n_signs
    if rows:
        r = np.concatenate(rows)
        c = np.concatenate(cols)
    else:
        r = c = np.zeros(0, dtype=np.int64)
    graph = coo_matrix(
        (np.ones(r.size, dtype=np.int8), (r, c)), shape=(n_nodes, n_nodes)
    )
    count, _ = connected_components(graph, directed=False)
    return int(count)


@dataclass(frozen=True)
class ContinuityReport:
    max_step: float
    jump_locations: tuple[float, ...]
    refinement_ratio: float | None = None


def _max_step(rows: Sequence[SweepRow]) -> tuple[float, list[float]]:
    worst = 0.0
    jumps = []
    for prev, cur in zip(rows, rows[1:]):
        step = max(
            config_distance(prev.first.angles, cur.first.angles),
            config_distance(prev.second.angles, cur.second.angles),
        )
        if step >= 0.5:
            jumps.append(0.5 * (prev.z + cur.z))
        worst = max(worst, step)
    return worst, jumps


def continuity_report(
    rows: Sequence[SweepRow], refined: Sequence[SweepRow] | None = None
) -> ContinuityReport:
    """Largest per-step angular change of either IK over a sweep.

    With a refined sweep of the same range the ratio of the two maxima is
    reported; continuous maps drive it above 1 as the grid shrinks.
    """
    if len(rows) < 3:
        raise ValueError("need at least 3 sweep rows")
    worst, jumps = _max_step(rows)
    ratio = None
    if refined is not None:
        if len(refined) < 3:
            raise ValueError("need at least 3 refined sweep rows")
        fine, _ = _max_step(refined)
        ratio = math.inf if fine == 0.0 else worst / fine
    return ContinuityReport(
        max_step=worst, jump_locations=tuple(jumps), refinement_ratio=ratio
    )
