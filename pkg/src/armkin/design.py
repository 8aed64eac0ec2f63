"""Paired inverse kinematics: one configuration per connected component.

For each arm we build two IK maps over the same chord maps.  They share the
all-plus sign assignment except on the z bands where the constrained space
splits in two; there the alternate assignment mirrors one triangle, landing
the second output in the other component.  Every sign switch sits at a z
where the affected triangle degenerates, so both maps stay continuous and
they pass through the collinear critical configurations at the vital
critical values.
"""
from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from typing import Sequence, Union

from .core import (
    ArmSpec,
    Configuration,
    EndEffectorTarget,
    SortedArm,
    invert_permutation,
    normalize_arm,
    permute_configuration,
)
from .engine import (
    ChordMap,
    MapKind,
    SignPlan,
    all_plus_plan,
    chord_chain,
    const_map,
    evaluate_ik,
)
from .reach import ReachInterval, reach_closed, reach_recursive
from .topology import (
    PathClass,
    TransitionMark,
    Variant,
    block_label,
    classify_connectivity,
    path_class,
    state_block,
)


@dataclass(frozen=True)
class IKPair:
    """Chord maps plus the two sign assignments for one arm, longest-first."""

    lengths: tuple[float, ...]  # sorted descending, base-first
    path: PathClass
    lo: tuple[float, ...]  # chord bounds per level, outermost-first
    hi: tuple[float, ...]
    maps: tuple[ChordMap, ...]
    plans_primary: tuple[Union[SignPlan, None], ...]
    plans_alt: tuple[Union[SignPlan, None], ...]
    switch_xs: dict[int, tuple[float, ...]]  # per-level switch chords
    crit_chains: dict[str, tuple[float, ...]]  # chords at each vital value
    tol: float

    @property
    def n(self) -> int:
        return len(self.lengths)

    @property
    def reach(self) -> ReachInterval:
        return ReachInterval(self.lo[-1], self.hi[-1])

    def evaluate(self, z: float, alt: bool = False) -> Configuration:
        plans = self.plans_alt if alt else self.plans_primary
        return evaluate_ik(self.lengths, self.maps, plans, z, tol=self.tol)

    def evaluate_pair(self, z: float) -> tuple[Configuration, Configuration]:
        return self.evaluate(z, alt=False), self.evaluate(z, alt=True)

    def chords(self, z: float) -> list[float]:
        return chord_chain(self.maps, z, tol=self.tol)


def _g_chain(l: Sequence[float], z_g: float) -> tuple[float, ...]:
    n = len(l)
    xs = [0.0] * n
    xs[n - 1] = z_g
    xs[n - 2] = z_g + l[n - 1]
    for k in range(n - 2, 0, -1):
        xs[k - 1] = abs(xs[k] - l[k])
    return tuple(xs)


def _fold_chain(l: Sequence[float], z: float) -> tuple[float, ...]:
    # chains for A, D and F all fold segment n-1 back across the chord
    n = len(l)
    xs = [0.0] * n
    xs[n - 1] = z
    for k in range(n - 1, 0, -1):
        xs[k - 1] = abs(xs[k] - l[k])
    return tuple(xs)


@functools.lru_cache(maxsize=256)
def _pair_for(lengths_desc: tuple[float, ...]) -> IKPair:
    arm = normalize_arm(ArmSpec(lengths_desc))
    l = arm.ascending()  # l[j], outermost segment first
    n = arm.n
    tol = arm.tol()
    bounds = reach_recursive(l)
    lo = tuple(b.lo for b in bounds)
    hi = tuple(b.hi for b in bounds)
    pc = path_class(arm)
    z_a = pc.transitions["A"].z
    z_d = pc.transitions["D"].z
    z_f = pc.transitions["F"].z
    z_g = pc.transitions["G"].z
    top = hi[n - 1]

    maps: list[ChordMap] = [const_map(l[0], lo[1], hi[1])]
    for k in range(1, n - 1):
        maps.append(
            ChordMap(
                kind=MapKind.MAX,
                seg=l[k + 1],
                lo=lo[k + 1],
                hi=hi[k + 1],
                lo_prev=lo[k],
                hi_prev=hi[k],
            )
        )
    if n >= 3:
        top_kind = {"I": MapKind.MAX, "II": MapKind.STEP, "III": MapKind.MIN}[
            pc.variant
        ]
        maps[n - 2] = ChordMap(
            kind=top_kind,
            seg=l[n - 1],
            lo=lo[n - 1],
            hi=hi[n - 1],
            lo_prev=lo[n - 2],
            hi_prev=hi[n - 2],
            x1=z_g if top_kind is MapKind.STEP else math.nan,
            x2=z_d if top_kind is MapKind.STEP else math.nan,
        )
    if n >= 4 and pc.variant in ("I", "II"):
        inner_kind = MapKind.MIN if z_g > tol else MapKind.MAX
        maps[n - 3] = ChordMap(
            kind=inner_kind,
            seg=l[n - 2],
            lo=lo[n - 2],
            hi=hi[n - 2],
            lo_prev=lo[n - 3],
            hi_prev=hi[n - 3],
        )

    plans_primary: list[Union[SignPlan, None]] = [None] + [
        all_plus_plan(top) for _ in range(1, n)
    ]
    plans_alt = list(plans_primary)
    switch_xs: dict[int, tuple[float, ...]] = {
        p: (hi[p],) for p in range(1, n)
    }
    crit_chains: dict[str, tuple[float, ...]] = {}

    def g_reachable() -> bool:
        return z_g > tol  # z_g > 0 forces the fold minimum to 0, so it is in reach

    if pc.variant == "I":
        if g_reachable():
            plans_alt[n - 2] = SignPlan(((z_g, "-"), (top, "+")))
            switch_xs[n - 2] = (z_g + l[n - 1], hi[n - 2])
            crit_chains["G"] = _g_chain(l, z_g)
    elif pc.variant == "II":
        plans_alt[n - 1] = SignPlan(((z_d, "+"), (z_a, "-"), (top, "+")))
        switch_xs[n - 1] = (z_d, z_a, top)
        crit_chains["A"] = _fold_chain(l, z_a)
        crit_chains["D"] = _fold_chain(l, z_d)
        if g_reachable():
            plans_alt[n - 2] = SignPlan(((z_g, "-"), (top, "+")))
            switch_xs[n - 2] = (z_g + l[n - 1], hi[n - 2])
            crit_chains["G"] = _g_chain(l, z_g)
    else:  # class III, including every 2-segment arm
        plans_alt[n - 1] = SignPlan(((z_f, "+"), (z_a, "-"), (top, "+")))
        switch_xs[n - 1] = (z_f, z_a, top)
        crit_chains["A"] = _fold_chain(l, z_a)
        if n >= 3:
            plans_alt[n - 2] = SignPlan(((z_f, "-"), (top, "+")))
            switch_xs[n - 2] = (lo[n - 2], hi[n - 2])
            crit_chains["F"] = _fold_chain(l, z_f)

    return IKPair(
        lengths=arm.lengths,
        path=pc,
        lo=lo,
        hi=hi,
        maps=tuple(maps),
        plans_primary=tuple(plans_primary),
        plans_alt=tuple(plans_alt),
        switch_xs=switch_xs,
        crit_chains=crit_chains,
        tol=tol,
    )


def design_pair(arm: Union[ArmSpec, SortedArm, Sequence[float]]) -> IKPair:
    """Build (or fetch from cache) the IK pair for an arm."""
    if isinstance(arm, SortedArm):
        lengths = arm.lengths
    elif isinstance(arm, ArmSpec):
        lengths = normalize_arm(arm).lengths
    else:
        lengths = normalize_arm(ArmSpec(arm)).lengths
    return _pair_for(tuple(lengths))


def solve_restricted(
    arm: Union[ArmSpec, SortedArm], z: float
) -> list[Configuration]:
    """Configurations with the end effector at (z, 0), one per component.

    Returns a single configuration when the constrained space is connected
    (or z is within the critical band) and the ordered pair when it has two
    components; the primary-assignment output always comes first.
    """
    sarm = arm if isinstance(arm, SortedArm) else normalize_arm(arm)
    conn = classify_connectivity(sarm, z)
    if conn.variant is Variant.INFEASIBLE:
        reach = reach_closed(sarm.lengths)
        raise ValueError(
            f"base length {z:.6g} outside reach [{reach.lo:.6g}, {reach.hi:.6g}]"
        )
    pair = design_pair(sarm)
    first = pair.evaluate(z, alt=False)
    if conn.variant is Variant.TWO:
        return [first, pair.evaluate(z, alt=True)]
    return [first]


@dataclass(frozen=True)
class SolveResult:
    reachable: bool
    configurations: tuple[Configuration, ...]
    z: float
    rho: float
    reach: ReachInterval
    components: int


def solve(spec: ArmSpec, target: EndEffectorTarget) -> SolveResult:
    """Solve for an arbitrary target by reducing to the positive X axis.

    The sorted-arm solutions are re-indexed back to the user's segment order
    and the whole arm is rotated so the end effector lands on the target.
    """
    sarm = normalize_arm(spec)
    reach = reach_closed(spec.lengths)
    z, rho = target.z, target.rho
    if not reach.contains(z, tol=spec.tol()):
        return SolveResult(False, (), z, rho, reach, 0)
    restricted = solve_restricted(sarm, z)
    inv = invert_permutation(sarm.perm)
    lifted = []
    for cfg in restricted:
        cfg_user = permute_configuration(cfg, inv)
        lifted.append(Configuration([a + rho for a in cfg_user.angles]))
    return SolveResult(True, tuple(lifted), z, rho, reach, len(lifted))


@dataclass(frozen=True)
class SweepRow:
    z: float
    first: Configuration
    second: Configuration
    components: int
    block: str


def sweep(
    spec: Union[ArmSpec, SortedArm], z_from: float, z_to: float, steps: int
) -> list[SweepRow]:
    """Evaluate both IK outputs on a uniform z grid.

    Both outputs are recorded on every row (they coincide where the space is
    connected); rows also carry the component count and block label.
    """
    sarm = spec if isinstance(spec, SortedArm) else normalize_arm(spec)
    if steps < 2:
        raise ValueError("steps must be at least 2")
    if z_from == z_to:
        raise ValueError("z_from and z_to must differ")
    reach = reach_closed(sarm.lengths)
    tol = sarm.tol()
    for z in (z_from, z_to):
        if not (z > 0.0) or not reach.contains(z, tol=tol):
            raise ValueError(
                f"sweep bound {z:.6g} outside reach "
                f"[{reach.lo:.6g}, {reach.hi:.6g}]"
            )
    pair = design_pair(sarm)
    rows = []
    for i in range(steps):
        z = z_from + (z_to - z_from) * i / (steps - 1)
        z = min(max(z, reach.lo), reach.hi)
        first, second = pair.evaluate_pair(z)
        conn = classify_connectivity(sarm, z)
        rows.append(
            SweepRow(
                z=z,
                first=first,
                second=second,
                components=conn.components,
                block=block_label(state_block(sarm, z)),
            )
        )
    return rows
