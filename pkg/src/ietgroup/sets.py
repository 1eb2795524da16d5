"""Finite unions of half-open intervals ``[a, b)`` inside ``[0, 1)``.

These are the elements of the set algebra in which fixed sets of interval
exchanges live.  The representation is canonical: intervals are nonempty,
sorted, pairwise disjoint and never touching, so two unions denote the same
set exactly when their interval tuples are equal.
"""

from __future__ import annotations

from typing import Iterable

from .scalar import Scalar, as_scalar, format_scalar

__all__ = ["IntervalUnion"]

ZERO = Scalar(0)
ONE = Scalar(1)


class IntervalUnion:
    __slots__ = ("intervals",)

    def __init__(self, intervals: Iterable[tuple] = ()):
        pieces = sorted(
            ((as_scalar(a), as_scalar(b)) for a, b in intervals if as_scalar(a) < as_scalar(b)),
            key=lambda ab: ab[0],
        )
        merged: list[tuple[Scalar, Scalar]] = []
        for a, b in pieces:
            if a < ZERO or b > ONE:
                raise ValueError(f"interval [{a}, {b}) is not inside [0, 1)")
            if merged and a <= merged[-1][1]:
                if b > merged[-1][1]:
                    merged[-1] = (merged[-1][0], b)
            else:
                merged.append((a, b))
        self.intervals = tuple(merged)

    @classmethod
    def empty(cls) -> "IntervalUnion":
        return cls()

    @classmethod
    def full(cls) -> "IntervalUnion":
        return cls([(ZERO, ONE)])

    def measure(self) -> Scalar:
        total = ZERO
        for a, b in self.intervals:
            total = total + (b - a)
        return total

    def __contains__(self, x) -> bool:
        x = as_scalar(x)
        return any(a <= x < b for a, b in self.intervals)

    def __bool__(self) -> bool:
        return bool(self.intervals)

    def __iter__(self):
        return iter(self.intervals)

    def __len__(self) -> int:
        return len(self.intervals)

    def __eq__(self, other):
        if not isinstance(other, IntervalUnion):
            return NotImplemented
        return self.intervals == other.intervals

    def __hash__(self):
        return hash(self.intervals)

    def union(self, other: "IntervalUnion") -> "IntervalUnion":
        return IntervalUnion(self.intervals + other.intervals)

    __or__ = union

    def complement(self) -> "IntervalUnion":
        out = []
        cursor = ZERO
        for a, b in self.intervals:
            if cursor < a:
                out.append((cursor, a))
            cursor = b
        if cursor < ONE:
            out.append((cursor, ONE))
        return IntervalUnion(out)

    def intersection(self, other: "IntervalUnion") -> "IntervalUnion":
        out = []
        i = j = 0
        A, B = self.intervals, other.intervals
        while i < len(A) and j < len(B):
            lo = max(A[i][0], B[j][0])
            hi = min(A[i][1], B[j][1])
            if lo < hi:
                out.append((lo, hi))
            if A[i][1] < B[j][1]:
                i += 1
            else:
                j += 1
        return IntervalUnion(out)

    __and__ = intersection

    def issubset(self, other: "IntervalUnion") -> bool:
        return (self & other) == self

    __le__ = issubset

    def __ge__(self, other: "IntervalUnion") -> bool:
        return other.issubset(self)

    def __str__(self):
        if not self.intervals:
            return "empty"
        return " ".join(f"[{format_scalar(a)}, {format_scalar(b)})" for a, b in self.intervals)

    def __repr__(self):
        return f"IntervalUnion({str(self)})"

