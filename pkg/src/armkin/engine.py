"""Generic continuous inverse kinematics for a planar chain.

The chain is solved one triangle at a time.  Chord p runs from the base of
segment p to the end effector; each level p forms a triangle with sides
(l_p, x_p, x_{p-1}).  A chord map produces x_{p-1} from x_p while staying
inside the triangle-inequality region

    |x_{p-1} - l_p| <= x_p <= x_{p-1} + l_p

and a per-level sign plan picks which of the two mirror-image triangles to
use.  Sign plans are piecewise-constant in the base length z, switching only
where the affected triangle degenerates to a line, which keeps the assembled
map z -> configuration continuous.
"""
from __future__ import annotations

import dataclasses
import enum
import math
from dataclasses import dataclass
from typing import Sequence

from .core import Configuration, canonical_angle


def _clamped_acos(v: float) -> float:
    # absorbs round-off at degenerate triangles
    return math.acos(min(1.0, max(-1.0, v)))


@dataclass(frozen=True)
class TriangleAngles:
    """Signed angles of the level-p triangle.

    ``theta`` sits at the base of segment l_p, between the segment and chord
    x_p; ``phi`` sits at the end effector, between chords x_p and x_{p-1}.
    """

    theta: float
    phi: float


def _degenerate_angles(seg: float, x_p: float, x_prev: float) -> tuple[float, float] | None:
    """Exact angles when the stored side values satisfy degeneracy bit-exactly."""
    if x_p == x_prev + seg:
        return 0.0, 0.0
    if x_prev == x_p + seg or (x_prev >= seg and x_p == x_prev - seg):
        return math.pi, 0.0
    if x_prev < seg and x_p == seg - x_prev:
        return 0.0, math.pi
    return None


def triangle_angles(
    sign: str, seg: float, x_p: float, x_prev: float, *, tol: float = 0.0
) -> TriangleAngles:
    """Law-of-cosines angles for the triangle (seg, x_p, x_prev).

    The '+' branch returns values in [0, pi]; the '-' branch negates them
    (with -pi identified with pi).  Degenerate triangles land exactly on
    {0, pi}, where both branches agree on the circle.
    """
    if sign not in ("+", "-"):
        raise ValueError(f"sign must be '+' or '-', got {sign!r}")
    if seg <= 0.0 or x_p <= 0.0 or x_prev <= 0.0:
        raise ValueError("triangle sides must be strictly positive")
    slack = max(tol, 1e-12 * (seg + x_p + x_prev))
    if x_p > x_prev + seg + slack or x_p < abs(x_prev - seg) - slack:
        raise ValueError(
            f"triangle inequality violated: l={seg:.6g} x_p={x_p:.6g} x_prev={x_prev:.6g}"
        )
    exact = _degenerate_angles(seg, x_p, x_prev)
    if exact is not None:
        theta, phi = exact
    else:
        theta = _clamped_acos(
            (x_p * x_p + seg * seg - x_prev * x_prev) / (2.0 * x_p * seg)
        )
        phi = _clamped_acos(
            (x_p * x_p + x_prev * x_prev - seg * seg) / (2.0 * x_p * x_prev)
        )
    if sign == "-":
        theta = canonical_angle(-theta)
        phi = canonical_angle(-phi)
    return TriangleAngles(theta=theta, phi=phi)


class MapKind(str, enum.Enum):
    MIN = "min"
    MAX = "max"
    STEP = "step"
    CONST = "const"


@dataclass(frozen=True)
class ChordMap:
    """Continuous feasible map from chord x_p down to chord x_{p-1}.

    MIN hugs the lower feasibility boundary max(lo_prev, |x_p - seg|), MAX the
    upper one min(hi_prev, x_p + seg); STEP is MAX below x1, MIN above x2 and
    interpolates linearly in between; CONST returns a fixed innermost chord.
    """

    kind: MapKind
    seg: float
    lo: float  # domain in x_p
    hi: float
    lo_prev: float  # codomain bounds in x_{p-1}
    hi_prev: float
    x1: float = math.nan  # STEP parameters, x1 < x2
    x2: float = math.nan
    # a few ulps: wall hits that differ from a codomain bound only by
    # accumulated round-off are pinned onto the bound's exact float, so
    # later levels see bit-identical plateau values
    _snap_eps: float = dataclasses.field(init=False, repr=False, compare=False)
    _domain_slack: float = dataclasses.field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "_snap_eps", 64.0 * 2.220446049250313e-16 * (self.hi_prev + self.seg)
        )
        object.__setattr__(
            self, "_domain_slack", 1e-12 * (abs(self.hi) + self.seg)
        )

    def _pin(self, v: float) -> float:
        if self.hi_prev - v <= self._snap_eps:
            return self.hi_prev
        if v - self.lo_prev <= self._snap_eps:
            return self.lo_prev
        return v

    def _min(self, x: float) -> tuple[float, tuple[float, float] | None]:
        fold = abs(x - self.seg)
        if fold >= self.lo_prev - self._snap_eps:
            # on the lower wall the triangle is a line: either the segment
            # extends the inner chord, or it doubles back past the effector
            return self._pin(min(max(fold, self.lo_prev), self.hi_prev)), (
                (0.0, 0.0) if x >= self.seg else (0.0, math.pi)
            )
        return self.lo_prev, None

    def _max(self, x: float) -> tuple[float, tuple[float, float] | None]:
        stretch = x + self.seg
        if stretch <= self.hi_prev + self._snap_eps:
            return self._pin(min(max(stretch, self.lo_prev), self.hi_prev)), (
                math.pi,
                0.0,
            )
        return self.hi_prev, None

    def value_and_snap(
        self, x: float, *, tol: float = 0.0
    ) -> tuple[float, tuple[float, float] | None]:
        """Chord value plus the exact triangle angles on a degenerate branch.

        The snap, when present, is the (theta, phi) pair of the triangle at
        this level, exact because the boundary branch makes it collinear by
        construction.
        """
        slack = tol if tol > self._domain_slack else self._domain_slack
        if x < self.lo - slack or x > self.hi + slack:
            raise ValueError(
                f"chord {x:.6g} outside domain [{self.lo:.6g}, {self.hi:.6g}]"
            )
        if self.kind is MapKind.CONST:
            return self.lo_prev, None
        if self.kind is MapKind.MIN:
            return self._min(x)
        if self.kind is MapKind.MAX:
            return self._max(x)
        if x <= self.x1:
            return self._max(x)
        if x >= self.x2:
            return self._min(x)
        w = (self.x2 - x) / (self.x2 - self.x1)
        blend = w * self._max(x)[0] + (1.0 - w) * self._min(x)[0]
        return self._pin(min(max(blend, self.lo_prev), self.hi_prev)), None

    def __call__(self, x: float, *, tol: float = 0.0) -> float:
        return self.value_and_snap(x, tol=tol)[0]


def const_map(value: float, lo: float, hi: float) -> ChordMap:
    return ChordMap(
        kind=MapKind.CONST, seg=0.0, lo=lo, hi=hi, lo_prev=value, hi_prev=value
    )


@dataclass(frozen=True)
class SignPlan:
    """Piecewise-constant sign over a chord/base-length domain.

    ``switches`` is an ascending list of (xi, sign) pairs whose last entry is
    the top of the domain; each pair labels the half-open interval below its
    xi, and the last interval is closed.
    """

    switches: tuple[tuple[float, str], ...]

    def __post_init__(self) -> None:
        if not self.switches:
            raise ValueError("a sign plan needs at least one switch entry")
        xs = [x for x, _ in self.switches]
        if any(b < a for a, b in zip(xs, xs[1:])):
            raise ValueError("switch points must be ascending")
        if any(s not in ("+", "-") for _, s in self.switches):
            raise ValueError("signs must be '+' or '-'")

    @property
    def top(self) -> float:
        return self.switches[-1][0]


def all_plus_plan(top: float) -> SignPlan:
    return SignPlan(switches=((top, "+"),))


def interval_sign(plan: SignPlan, x: float, *, tol: float = 0.0) -> str:
    """Sign of the interval containing x; the last interval is closed."""
    if x > plan.top + max(tol, 1e-12 * abs(plan.top)):
        raise ValueError(f"{x:.6g} above the sign plan domain top {plan.top:.6g}")
    for xi, sign in plan.switches:
        if x < xi:
            return sign
    return plan.switches[-1][1]


def chord_chain(maps: Sequence[ChordMap], z: float, *, tol: float = 0.0) -> list[float]:
    """All chord values [x_0, ..., x_{m-1}] for base length z = x_{m-1}."""
    return chord_chain_with_snaps(maps, z, tol=tol)[0]


def chord_chain_with_snaps(
    maps: Sequence[ChordMap], z: float, *, tol: float = 0.0
) -> tuple[list[float], list[tuple[float, float] | None]]:
    """Chord values plus, per level, exact angles where a map hugs a wall.

    maps[k] produces x_k from x_{k+1}; raises if any chord comes out
    non-positive, which signals an ill-formed chord map.
    """
    m = len(maps) + 1
    xs = [0.0] * m
    snaps: list[tuple[float, float] | None] = [None] * m
    xs[m - 1] = z
    for k in range(m - 2, -1, -1):
        xs[k], snaps[k + 1] = maps[k].value_and_snap(xs[k + 1], tol=tol)
        if xs[k] <= 0.0:
            raise ValueError(f"chord x_{k} = {xs[k]:.6g} is not positive")
    return xs, snaps


def evaluate_ik(
    lengths: Sequence[float],
    maps: Sequence[ChordMap],
    plans: Sequence[SignPlan | None],
    z: float,
    *,
    tol: float = 0.0,
) -> Configuration:
    """Assemble the configuration for base length z.

    ``lengths`` are base-first; ``maps[k]`` is the chord map onto level k and
    ``plans[p]`` the sign plan for the level-p triangle (plans are looked up
    at z; entry 0 is unused).  The end effector of the result lies at (z, 0).
    """
    m = len(lengths)
    if m < 2:
        raise ValueError("need at least 2 segments")
    if len(maps) != m - 1 or len(plans) != m:
        raise ValueError("need m-1 chord maps and m sign plans")
    if not (z > 0.0):
        raise ValueError("base length must be positive")
    ltip = list(reversed(lengths))  # ltip[j] is the j-th segment counted from the tip
    xs, snaps = chord_chain_with_snaps(maps, z, tol=tol)

    # one triangle per level; the level-0 segment points straight at the
    # end effector, so its own angles vanish.  Wall-hugging levels take their
    # exact collinear angles, on which both sign branches agree.
    thetas_tri = [0.0] * m
    phis = [0.0] * m
    for p in range(1, m):
        if snaps[p] is not None:
            thetas_tri[p], phis[p] = snaps[p]
            continue
        sign = interval_sign(plans[p], z, tol=tol) if plans[p] is not None else "+"
        ang = triangle_angles(sign, ltip[p], xs[p], xs[p - 1], tol=tol)
        thetas_tri[p] = ang.theta
        phis[p] = ang.phi

    # orientation of segment q against the X axis; the tail of phi terms is
    # re-summed per joint as written, which costs O(m^2) adds overall
    out = [0.0] * m
    for q in range(m - 1, -1, -1):
        acc = 0.0
        for k in range(q + 1, m):
            acc += phis[k]
        out[q] = canonical_angle(thetas_tri[q] - acc)
    out.reverse()  # back to base-first storage order
    return Configuration(out)
