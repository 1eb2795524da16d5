"""Discontinuity growth of iterates ``h, h^2, ..., h^N``."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import ceil
from typing import Optional, Sequence

from .iet import IntervalExchange, compose, delta, identity

__all__ = ["CapacityError", "GrowthReport", "growth", "least_squares_slope"]


class CapacityError(RuntimeError):
    """An iterate outgrew the configured piece budget."""

    def __init__(self, n: int, pieces: int, limit: int):
        self.n = n
        super().__init__(f"h^{n} has {pieces} intervals, over the limit of {limit}")


def least_squares_slope(points: Sequence[tuple[int, int]]) -> Fraction:
    """Exact slope of the least-squares line through integer points."""
    if len(points) < 2:
        raise ValueError("need at least two points for a slope")
    m = len(points)
    mean_x = Fraction(sum(x for x, _ in points), m)
    mean_y = Fraction(sum(y for _, y in points), m)
    num = sum((x - mean_x) * (y - mean_y) for x, y in points)
    den = sum((x - mean_x) ** 2 for x, _ in points)
    return num / den


@dataclass(frozen=True)
class GrowthReport:
    powers: tuple[tuple[int, int], ...]
    first_differences: tuple[int, ...]
    # (C, n0): D_{n+1} - D_n == C for every n >= n0, over at least half the range
    eventually_constant_difference: Optional[tuple[int, int]]
    slope_estimate: Optional[Fraction]

    @property
    def values(self) -> tuple[int, ...]:
        return tuple(d for _, d in self.powers)

    def is_subadditive(self) -> bool:
        D = dict(self.powers)
        N = len(D)
        return all(D[n + m] <= D[n] + D[m] for n in range(1, N + 1) for m in range(1, N - n + 1))

    def to_tsv(self) -> str:
        lines = ["n\tdelta\tdifference"]
        diffs = ("",) + self.first_differences
        for (n, d), diff in zip(self.powers, diffs):
            lines.append(f"{n}\t{d}\t{diff}")
        return "\n".join(lines) + "\n"


def _constant_tail(diffs: Sequence[int]) -> Optional[tuple[int, int]]:
    if not diffs:
        return None
    last = diffs[-1]
    k = len(diffs)
    while k > 0 and diffs[k - 1] == last:
        k -= 1
    if len(diffs) - k < ceil(len(diffs) / 2):
        return None
    # diffs[k] is D_{k+2} - D_{k+1}
    return last, k + 1


def growth(h: IntervalExchange, N: int, max_pieces: Optional[int] = None) -> GrowthReport:
    """Record ``delta(h^n)`` for ``n = 1..N`` by iterated exact composition."""
    if N < 1:
        raise ValueError(f"N must be at least 1, got {N}")
    current = identity()
    powers = []
    for n in range(1, N + 1):
        current = compose(h, current)
        if max_pieces is not None and current.n > max_pieces:
            raise CapacityError(n, current.n, max_pieces)
        powers.append((n, delta(current)))
    values = [d for _, d in powers]
    diffs = tuple(b - a for a, b in zip(values, values[1:]))
    tail = powers[-ceil(N / 2):]
    slope = least_squares_slope(tail) if len(tail) >= 2 else None
    return GrowthReport(tuple(powers), diffs, _constant_tail(diffs), slope)
