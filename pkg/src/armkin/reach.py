"""Attainable base-length interval for a chain of segments.

Chord p is the distance from the base of segment p to the end effector;
prefixes accumulate from the outermost segment inward, so the input lists
here are ordered outermost-first.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence


@dataclass(frozen=True)
class ReachInterval:
    lo: float
    hi: float

    def __post_init__(self) -> None:
        if not (0.0 <= self.lo <= self.hi):
            raise ValueError(f"invalid reach interval [{self.lo}, {self.hi}]")

    def contains(self, z: float, tol: float = 0.0) -> bool:
        return self.lo - tol <= z <= self.hi + tol


def reach_closed(lengths: Iterable[float]) -> ReachInterval:
    """Closed-form reach: hi is the full stretch, lo the best fold."""
    vals = [float(v) for v in lengths]
    if not vals:
        raise ValueError("need at least one segment length")
    if any(not (v > 0.0) for v in vals):
        raise ValueError("segment lengths must be strictly positive")
    total = sum(vals)
    biggest = max(vals)
    return ReachInterval(lo=max(0.0, biggest - (total - biggest)), hi=total)


def reach_recursive(lengths: Sequence[float]) -> list[ReachInterval]:
    """Reach interval of every prefix, outermost segment first.

    Prefix 0 is the single outermost segment, [l_0, l_0]; each further
    segment extends the interval by the three-case recursion on the
    previous bounds.
    """
    vals = [float(v) for v in lengths]
    if not vals:
        raise ValueError("need at least one segment length")
    if any(not (v > 0.0) for v in vals):
        raise ValueError("segment lengths must be strictly positive")
    lo = hi = vals[0]
    out = [ReachInterval(lo, hi)]
    for l in vals[1:]:
        if l <= lo:
            lo_next = lo - l
        elif l <= hi:
            lo_next = 0.0
        else:
            lo_next = l - hi
        hi = hi + l
        lo = lo_next
        out.append(ReachInterval(lo, hi))
    return out
