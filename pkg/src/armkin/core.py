"""Core domain types and the basic kinematic maps of a planar segment chain.

Segment lengths are stored base-first: ``lengths[0]`` is the segment attached
to the fixed base, ``lengths[-1]`` carries the end effector.  Angles are
absolute orientations against the positive X axis, one per segment, in the
same base-first order.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

TWO_PI = 2.0 * math.pi

# Relative tolerance (scaled by total arm length) used for geometric equality.
EPS_REL = 1e-9


def canonical_angle(a: float) -> float:
    """Wrap an angle into (-pi, pi]; -pi is identified with pi."""
    a = a % TWO_PI  # Python % keeps the result in [0, 2*pi)
    if a > math.pi:
        a -= TWO_PI
    return a


def angle_distance(a: float, b: float) -> float:
    """Distance between two angles on the circle, in [0, pi]."""
    return abs(canonical_angle(a - b))


def config_distance(a: Sequence[float], b: Sequence[float]) -> float:
    """Max per-joint circle distance between two angle lists."""
    if len(a) != len(b):
        raise ValueError("angle lists differ in length")
    return max((angle_distance(x, y) for x, y in zip(a, b)), default=0.0)


@dataclass(frozen=True)
class ArmSpec:
    """Segment lengths in user order, base-first."""

    lengths: tuple[float, ...]

    def __init__(self, lengths: Sequence[float]):
        vals = tuple(float(v) for v in lengths)
        if len(vals) < 2:
            raise ValueError("an arm needs at least 2 segments")
        if any(not (v > 0.0) or not math.isfinite(v) for v in vals):
            raise ValueError("segment lengths must be positive and finite")
        object.__setattr__(self, "lengths", vals)

    @property
    def n(self) -> int:
        return len(self.lengths)

    @property
    def total(self) -> float:
        return sum(self.lengths)

    def tol(self) -> float:
        """Absolute geometric tolerance for this arm."""
        return EPS_REL * self.total


@dataclass(frozen=True)
class SortedArm:
    """Arm with segments reordered longest-at-base plus the reordering map.

    ``perm[k]`` is the index in the original ArmSpec of the segment now at
    sorted position ``k``, so ``lengths[k] == original.lengths[perm[k]]``.
    """

    lengths: tuple[float, ...]
    perm: tuple[int, ...]
    original: ArmSpec

    @property
    def n(self) -> int:
        return len(self.lengths)

    @property
    def total(self) -> float:
        return sum(self.lengths)

    def tol(self) -> float:
        return EPS_REL * self.total

    def ascending(self) -> tuple[float, ...]:
        """Lengths outermost-first (shortest first for a sorted arm)."""
        return tuple(reversed(self.lengths))


@dataclass(frozen=True)
class Configuration:
    """Absolute segment orientations, base-first, each in (-pi, pi]."""

    angles: tuple[float, ...]

    def __init__(self, angles: Sequence[float]):
        object.__setattr__(
            self, "angles", tuple(canonical_angle(float(a)) for a in angles)
        )

    @property
    def n(self) -> int:
        return len(self.angles)


@dataclass(frozen=True)
class EndEffectorTarget:
    """A workspace point for the end effector; the base sits at the origin."""

    qx: float
    qy: float
    z: float = field(init=False)
    rho: float = field(init=False)

    def __post_init__(self) -> None:
        if self.qx == 0.0 and self.qy == 0.0:
            raise ValueError("target must not coincide with the base")
        if not (math.isfinite(self.qx) and math.isfinite(self.qy)):
            raise ValueError("target coordinates must be finite")
        object.__setattr__(self, "z", math.hypot(self.qx, self.qy))
        object.__setattr__(self, "rho", math.atan2(self.qy, self.qx))


def normalize_arm(spec: ArmSpec) -> SortedArm:
    """Reorder segments longest-at-base; stable for equal lengths."""
    order = sorted(range(spec.n), key=lambda i: -spec.lengths[i])
    return SortedArm(
        lengths=tuple(spec.lengths[i] for i in order),
        perm=tuple(order),
        original=spec,
    )


def _check_lengths_match(spec: ArmSpec, cfg: Configuration) -> None:
    if spec.n != cfg.n:
        raise ValueError(
            f"configuration has {cfg.n} angles for {spec.n} segments"
        )


def forward_kinematics(spec: ArmSpec, cfg: Configuration) -> tuple[float, float]:
    """End-effector position (x_e, y_e) for the given orientations."""
    _check_lengths_match(spec, cfg)
    x = 0.0
    y = 0.0
    for l, a in zip(spec.lengths, cfg.angles):
        x += l * math.cos(a)
        y += l * math.sin(a)
    return x, y


def base_length(spec: ArmSpec, cfg: Configuration) -> float:
    """Distance from the base to the end effector."""
    x, y = forward_kinematics(spec, cfg)
    return math.hypot(x, y)


def invert_permutation(perm: Sequence[int]) -> tuple[int, ...]:
    inv = [0] * len(perm)
    for k, i in enumerate(perm):
        inv[i] = k
    return tuple(inv)


def permute_configuration(cfg: Configuration, perm: Sequence[int]) -> Configuration:
    """Reindex angles by ``perm``: result angle k is ``cfg.angles[perm[k]]``."""
    idx = list(perm)
    if sorted(idx) != list(range(cfg.n)):
        raise ValueError("perm is not a bijection on the segment index set")
    return Configuration([cfg.angles[i] for i in idx])


def lift_rotation(
    spec: ArmSpec, cfg: Configuration, rho: float
) -> Configuration:
    """Rotate a configuration whose end effector lies on the positive X axis.

    The whole arm turns by ``rho`` about the base, moving the end effector
    from (z, 0) to (z cos rho, z sin rho).
    """
    x, y = forward_kinematics(spec, cfg)
    tol = spec.tol()
    if abs(y) > max(tol, 1e-12) or x <= 0.0:
        raise ValueError(
            f"configuration is not on the positive X axis (x_e={x:.6g}, y_e={y:.6g})"
        )
    return Configuration([a + rho for a in cfg.angles])
