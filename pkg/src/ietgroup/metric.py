"""Distances on the group of interval exchanges, computed exactly.

``distance`` is the integral of the circle distance between ``f(x)`` and
``g(x)``; ``sup_displacement`` is its uniform counterpart; ``koopman_l2_sq``
compares the Koopman operators ``phi -> phi o f^-1`` on a step function.
All three reduce to finite sums over a common refinement of breakpoints.
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass
from typing import Iterable, Sequence

from .iet import IntervalExchange, invert
from .scalar import Scalar, as_scalar

__all__ = [
    "StepFunction",
    "circle_distance",
    "circle_rep",
    "common_refinement",
    "distance",
    "sup_displacement",
    "koopman_l2_sq",
]

ZERO = Scalar(0)
ONE = Scalar(1)
HALF = Scalar(1) / 2


def circle_rep(c: Scalar) -> Scalar:
    """Representative of ``c`` modulo 1 in ``(-1/2, 1/2]``."""
    _, r = c.floor_frac()
    return r - 1 if r > HALF else r


def circle_distance(u, v) -> Scalar:
    """Shortest-path distance between two points of [0, 1) viewed as a circle."""
    u, v = as_scalar(u), as_scalar(v)
    for x in (u, v):
        if x < ZERO or x >= ONE:
            raise ValueError(f"point {x} is outside [0, 1)")
    gap = abs(u - v)
    return min(gap, ONE - gap)


def common_refinement(*breakpoint_lists: Sequence[Scalar]) -> list[Scalar]:
    """Sorted union of several breakpoint lists, duplicates removed exactly."""
    merged = sorted((x for bps in breakpoint_lists for x in bps))
    out: list[Scalar] = []
    for x in merged:
        if not out or out[-1] != x:
            out.append(x)
    return out


def _translation_pairs(f: IntervalExchange, g: IntervalExchange):
    """Yield ``(length, omega_f - omega_g)`` over the common refinement."""
    fb, fw = f.breakpoints, f.omega
    gb, gw = g.breakpoints, g.omega
    i = j = 0
    left = ZERO
    while left < ONE:
        right = min(fb[i + 1], gb[j + 1])
        yield right - left, fw[i] - gw[j]
        if fb[i + 1] == right:
            i += 1
        if gb[j + 1] == right:
            j += 1
        left = right


def distance(f: IntervalExchange, g: IntervalExchange) -> Scalar:
    total = ZERO
    for length, c in _translation_pairs(f, g):
        total = total + length * abs(circle_rep(c))
    return total


def sup_displacement(f: IntervalExchange, g: IntervalExchange) -> Scalar:
    return max(abs(circle_rep(c)) for _, c in _translation_pairs(f, g))


@dataclass(frozen=True)
class StepFunction:
    """A function on [0, 1) equal to ``values[k]`` on ``[breakpoints[k], breakpoints[k+1])``."""

    breakpoints: tuple[Scalar, ...]
    values: tuple[Scalar, ...]

    def __post_init__(self):
        bps = tuple(as_scalar(b) for b in self.breakpoints)
        vals = tuple(as_scalar(v) for v in self.values)
        if len(bps) != len(vals) + 1 or not vals:
            raise ValueError("a step function needs exactly one more breakpoint than values")
        if bps[0] != ZERO or bps[-1] != ONE:
            raise ValueError("breakpoints must start at 0 and end at 1")
        if any(b >= c for b, c in zip(bps, bps[1:])):
            raise ValueError("breakpoints must be strictly increasing")
        keep_b, keep_v = [bps[0]], [vals[0]]
        for b, v in zip(bps[1:-1], vals[1:]):
            if v != keep_v[-1]:
                keep_b.append(b)
                keep_v.append(v)
        keep_b.append(ONE)
        object.__setattr__(self, "breakpoints", tuple(keep_b))
        object.__setattr__(self, "values", tuple(keep_v))

    @classmethod
    def indicator(cls, a, b) -> "StepFunction":
        """Characteristic function of ``[a, b)``."""
        a, b = as_scalar(a), as_scalar(b)
        if not ZERO <= a < b <= ONE:
            raise ValueError(f"[{a}, {b}) is not a nonempty subinterval of [0, 1)")
        bps, vals = [ZERO], []
        if a > ZERO:
            bps.append(a)
            vals.append(ZERO)
        vals.append(ONE)
        if b < ONE:
            bps.append(b)
            vals.append(ZERO)
        bps.append(ONE)
        return cls(tuple(bps), tuple(vals))

    @classmethod
    def from_pieces(cls, pieces: Iterable[tuple[Scalar, Scalar, Scalar]]) -> "StepFunction":
        """Build from ``(left, right, value)`` triples covering [0, 1) in any order."""
        pieces = sorted(pieces, key=lambda p: p[0])
        return cls(tuple(p[0] for p in pieces) + (ONE,), tuple(p[2] for p in pieces))

    def __call__(self, x) -> Scalar:
        x = as_scalar(x)
        if x < ZERO or x >= ONE:
            raise ValueError(f"point {x} is outside [0, 1)")
        return self.values[bisect_right(self.breakpoints, x, 1, len(self.values)) - 1]

    def precompose(self, h: IntervalExchange) -> "StepFunction":
        """The step function ``x -> self(h(x))``."""
        pieces = []
        for lo, hi, w in h.pieces():
            # cut the image [lo + w, hi + w) at our breakpoints
            a, b = lo + w, hi + w
            k = bisect_right(self.breakpoints, a, 0, len(self.values)) - 1
            while a < b:
                end = min(b, self.breakpoints[k + 1])
                pieces.append((a - w, end - w, self.values[k]))
                a = end
                k += 1
        return StepFunction.from_pieces(pieces)

    def l2_sq_distance(self, other: "StepFunction") -> Scalar:
        total = ZERO
        bps = common_refinement(self.breakpoints, other.breakpoints)
        for lo, hi in zip(bps, bps[1:]):
            diff = self(lo) - other(lo)
            total = total + (hi - lo) * diff * diff
        return total


def koopman_l2_sq(f: IntervalExchange, g: IntervalExchange, phi: StepFunction) -> Scalar:
    """Squared L2 norm of ``phi o f^-1 - phi o g^-1``."""
    return phi.precompose(invert(f)).l2_sq_distance(phi.precompose(invert(g)))
