"""Connectivity of the constrained configuration space as the base length varies.

For a fixed end-effector distance z, the closed chain {z} + segments behaves
like an (n+1)-gon.  With the side lengths sorted descending s[0] >= s[1] >= ...,
the space of configurations is connected exactly when

    s[0] + (s[3] + s[4] + ...) >= s[1] + s[2]

and otherwise splits into two pieces that are mirror images of each other.
The sign of that margin, together with where z ranks among the segment
lengths, partitions the feasible z range into six blocks; the boundary
values are where the topology can change.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Mapping, Sequence, Union

from .core import EPS_REL, ArmSpec, SortedArm, normalize_arm
from .reach import ReachInterval, reach_closed


class Variant(str, enum.Enum):
    ONE = "One"
    TWO = "Two"
    CRITICAL = "Critical"
    INFEASIBLE = "Infeasible"


@dataclass(frozen=True)
class Connectivity:
    variant: Variant
    sides: tuple[float, ...]  # {z} + lengths, sorted descending
    margin: float  # connected iff margin >= 0 (up to band)
    band: float

    @property
    def components(self) -> int:
        if self.variant is Variant.TWO:
            return 2
        if self.variant is Variant.INFEASIBLE:
            return 0
        return 1


class StateBlock(str, enum.Enum):
    GT_TOP = "GT_TOP"
    LT_TOP = "LT_TOP"
    GT_MID = "GT_MID"
    LT_MID = "LT_MID"
    GT_BOT = "GT_BOT"
    LT_BOT = "LT_BOT"


@dataclass(frozen=True)
class TransitionMark:
    """z sits on a block boundary; ``letter`` names the transition."""

    letter: str
    z: float

    @property
    def label(self) -> str:
        return f"transition:{self.letter}"


@dataclass(frozen=True)
class TransitionValue:
    z: float
    reachable: bool


@dataclass(frozen=True)
class PathClass:
    variant: str  # "I", "II" or "III"
    transitions: Mapping[str, TransitionValue]
    vital: tuple[float, ...]


def _as_sorted(arm: Union[ArmSpec, SortedArm]) -> SortedArm:
    return arm if isinstance(arm, SortedArm) else normalize_arm(arm)


def _tipward_lengths(arm: SortedArm) -> tuple[float, ...]:
    # index j counts from the outermost segment; the base is the largest
    return arm.ascending()


def _sum_upto(l: Sequence[float], k: int) -> float:
    return sum(l[: k + 1]) if k >= 0 else 0.0


def classify_connectivity(arm: Union[ArmSpec, SortedArm], z: float) -> Connectivity:
    """Count components of the space of configurations with base length z."""
    if not (z > 0.0):
        raise ValueError("base length must be positive")
    sarm = _as_sorted(arm)
    sides = tuple(sorted((z, *sarm.lengths), reverse=True))
    band = EPS_REL * (sarm.total + z)
    margin = sides[0] + sum(sides[3:]) - sides[1] - sides[2]
    reach = reach_closed(sarm.lengths)
    if not reach.contains(z, tol=band):
        return Connectivity(Variant.INFEASIBLE, sides, margin, band)
    if abs(margin) <= band:
        variant = Variant.CRITICAL
    elif margin > 0.0:
        variant = Variant.ONE
    else:
        variant = Variant.TWO
    return Connectivity(variant, sides, margin, band)


def transition_values(arm: Union[ArmSpec, SortedArm]) -> dict[str, TransitionValue]:
    """Boundary z for each block transition A..G, flagged reachable or not.

    For n=2 the third-longest length is taken as 0, which leaves only the
    A/C/F entries meaningful.
    """
    sarm = _as_sorted(arm)
    l = _tipward_lengths(sarm)
    n = sarm.n
    l_n1 = l[n - 1]
    l_n2 = l[n - 2]
    l_n3 = l[n - 3] if n >= 3 else 0.0
    s_n3 = _sum_upto(l, n - 3)
    s_n4 = _sum_upto(l, n - 4)
    reach = reach_closed(sarm.lengths)
    tol = sarm.tol()

    def tv(z: float) -> TransitionValue:
        return TransitionValue(z, bool(z > tol and reach.contains(z, tol=tol)))

    z_a = l_n1 + l_n2 - s_n3
    z_d = l_n1 - l_n2 + s_n3
    z_g = l_n2 + l_n3 - l_n1 - s_n4
    return {
        "A": tv(z_a),
        "B": tv(l_n1),
        "C": tv(l_n1),
        "D": tv(z_d),
        "E": tv(l_n3),
        "F": tv(l_n3),
        "G": tv(z_g),
    }


def path_class(arm: Union[ArmSpec, SortedArm]) -> PathClass:
    """Which of the three transition sequences this arm follows as z drops.

    I  (B E G):      second-longest segment no longer than the rest combined
                     (ties included: the rank transition wins the race).
    II (A C D E G):  second-longest dominates the rest, generic case.
    III(A C F):      second-longest dominates, n=3 with the two longest equal;
                     two-segment arms behave the same way with a phantom zero
                     third length.
    """
    sarm = _as_sorted(arm)
    l = _tipward_lengths(sarm)
    n = sarm.n
    tol = sarm.tol()
    s_n3 = _sum_upto(l, n - 3)
    if n >= 3 and l[n - 2] <= s_n3 + tol:
        variant = "I"
    elif n == 2 or (n == 3 and abs(l[n - 1] - l[n - 2]) <= tol):
        variant = "III"
    else:
        variant = "II"
    trans = transition_values(sarm)
    vital = vital_critical_values(sarm, _variant=variant, _transitions=trans)
    return PathClass(variant=variant, transitions=trans, vital=tuple(vital))


def vital_critical_values(
    arm: Union[ArmSpec, SortedArm],
    _variant: str | None = None,
    _transitions: Mapping[str, TransitionValue] | None = None,
) -> list[float]:
    """z values at which the component count actually changes, descending."""
    sarm = _as_sorted(arm)
    variant = _variant or path_class(sarm).variant
    trans = _transitions or transition_values(sarm)
    letters = {"I": ("G",), "II": ("A", "D", "G"), "III": ("A", "F")}[variant]
    reach = reach_closed(sarm.lengths)
    tol = sarm.tol()
    out = [
        trans[letter].z
        for letter in letters
        if trans[letter].z > tol and reach.contains(trans[letter].z, tol=tol)
    ]
    return sorted(out, reverse=True)


def state_block(
    arm: Union[ArmSpec, SortedArm], z: float
) -> Union[StateBlock, TransitionMark]:
    """Locate z among the six blocks, or name the boundary it sits on."""
    sarm = _as_sorted(arm)
    conn = classify_connectivity(sarm, z)
    if conn.variant is Variant.INFEASIBLE:
        reach = reach_closed(sarm.lengths)
        raise ValueError(
            f"base length {z:.6g} outside reach [{reach.lo:.6g}, {reach.hi:.6g}]"
        )
    l = _tipward_lengths(sarm)
    n = sarm.n
    l_n1 = l[n - 1]
    l_n3 = l[n - 3] if n >= 3 else 0.0
    band = conn.band
    margin = conn.margin

    if abs(z - l_n1) <= band:
        if l_n1 - l_n3 <= band:  # the mid range is empty
            if abs(margin) <= band:
                return TransitionMark("A", z)
            return TransitionMark("BE" if margin > 0.0 else "CF", z)
        # an exact tie between the rank boundary and the margin boundary is
        # the class-I edge case, where the rank transition happens
        return TransitionMark("B" if margin >= -band else "C", z)
    if n >= 3 and abs(z - l_n3) <= band:
        return TransitionMark("E" if margin > band else "F", z)
    if abs(margin) <= band:
        if z > l_n1:
            return TransitionMark("A", z)
        if z > l_n3:
            return TransitionMark("D", z)
        return TransitionMark("G", z)

    connected = margin > 0.0
    if z > l_n1:
        return StateBlock.GT_TOP if connected else StateBlock.LT_TOP
    if z > l_n3:
        return StateBlock.GT_MID if connected else StateBlock.LT_MID
    return StateBlock.GT_BOT if connected else StateBlock.LT_BOT


def block_label(block: Union[StateBlock, TransitionMark]) -> str:
    return block.value if isinstance(block, StateBlock) else block.label


def reach_of(arm: Union[ArmSpec, SortedArm]) -> ReachInterval:
    return reach_closed(_as_sorted(arm).lengths)
