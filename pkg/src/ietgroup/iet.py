"""Interval exchange transformations of [0, 1) in canonical coordinates.

An :class:`IntervalExchange` is stored as the unique pair (unpartitioned
permutation, strictly positive length vector).  Permutations are given by
their images in one-line notation, 1-based: ``perm[j-1]`` is the position of
the j-th domain interval after the exchange.  Every constructor that may
produce a non-canonical description goes through :func:`canonicalize`, so
``==`` on interval exchanges is equality of maps.
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .scalar import Scalar, as_scalar
from .sets import IntervalUnion

__all__ = [
    "Permutation",
    "IntervalExchange",
    "length_vector",
    "omega",
    "canonicalize",
    "compose",
    "invert",
    "apply",
    "delta",
    "fix_set",
    "identity",
    "rotation",
    "power",
    "image_of",
]

ZERO = Scalar(0)
ONE = Scalar(1)


@dataclass(frozen=True)
class Permutation:
    """A bijection of {1, ..., n} in one-line notation."""

    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(i) for i in self.images)
        object.__setattr__(self, "images", images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"not a permutation of 1..{len(images)}: {images}")

    def __len__(self):
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __iter__(self):
        return iter(self.images)

    @property
    def unpartitioned(self) -> bool:
        im = self.images
        return all(im[j + 1] != im[j] + 1 for j in range(len(im) - 1))

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.images)
        for j, k in enumerate(self.images, start=1):
            inv[k - 1] = j
        return Permutation(tuple(inv))

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def from_cycles(cls, n: int, cycles: Iterable[Sequence[int]]) -> "Permutation":
        """Build from disjoint cycles, e.g. ``from_cycles(4, [(1, 3)])`` gives images (3, 2, 1, 4)."""
        images = list(range(1, n + 1))
        for cycle in cycles:
            for a, b in zip(cycle, tuple(cycle[1:]) + (cycle[0],)):
                images[a - 1] = b
        return cls(tuple(images))

    def __str__(self):
        return " ".join(map(str, self.images))


def _as_perm(perm) -> Permutation:
    return perm if isinstance(perm, Permutation) else Permutation(tuple(perm))


def length_vector(values: Iterable, closed: bool = False) -> tuple[Scalar, ...]:
    """Validate a length vector: entries sum to exactly 1 and are positive (``>= 0`` when ``closed``)."""
    lengths = tuple(as_scalar(v) for v in values)
    if not lengths:
        raise ValueError("length vector is empty")
    for v in lengths:
        if v < ZERO or (not closed and v == ZERO):
            kind = "negative" if v < ZERO else "zero"
            raise ValueError(f"{kind} length {v} in length vector")
    total = sum(lengths, ZERO)
    if total != ONE:
        raise ValueError(f"lengths sum to {total}, not 1")
    return lengths


def omega(perm, lengths: Sequence) -> tuple[Scalar, ...]:
    """Translation vector: the j-th entry is the total length of intervals placed
    before interval j after the exchange, minus the left endpoint of interval j."""
    perm = _as_perm(perm)
    lengths = tuple(as_scalar(v) for v in lengths)
    if len(perm) != len(lengths):
        raise ValueError(f"permutation has {len(perm)} entries but there are {len(lengths)} lengths")
    n = len(perm)
    inv = perm.inverse().images
    # image start of each interval = cumulative length in image order
    image_start = [ZERO] * n
    acc = ZERO
    for k in range(n):
        j = inv[k] - 1
        image_start[j] = acc
        acc = acc + lengths[j]
    out = []
    left = ZERO
    for j in range(n):
        out.append(image_start[j] - left)
        left = left + lengths[j]
    return tuple(out)


class IntervalExchange:
    """A canonical interval exchange ``x -> x + omega[j]`` for ``x`` in the j-th interval.

    Construct with an unpartitioned permutation and strictly positive lengths;
    use :func:`canonicalize` for anything else.
    """

    def __init__(self, perm, lengths):
        perm = _as_perm(perm)
        lengths = length_vector(lengths)
        if len(perm) != len(lengths):
            raise ValueError(f"permutation has {len(perm)} entries but there are {len(lengths)} lengths")
        if not perm.unpartitioned:
            raise ValueError(f"permutation {perm} is partitioned; use canonicalize()")
        self.perm = perm
        self.lengths = lengths

    @classmethod
    def _trusted(cls, perm: Permutation, lengths: tuple[Scalar, ...]) -> "IntervalExchange":
        obj = object.__new__(cls)
        obj.perm = perm
        obj.lengths = lengths
        return obj

    @property
    def n(self) -> int:
        return len(self.lengths)

    @cached_property
    def breakpoints(self) -> tuple[Scalar, ...]:
        out = [ZERO]
        for v in self.lengths[:-1]:
            out.append(out[-1] + v)
        out.append(ONE)
        return tuple(out)

    @cached_property
    def omega(self) -> tuple[Scalar, ...]:
        return omega(self.perm, self.lengths)

    def pieces(self) -> list[tuple[Scalar, Scalar, Scalar]]:
        """``(left, right, translation)`` for each domain interval, in order."""
        b, w = self.breakpoints, self.omega
        return [(b[j], b[j + 1], w[j]) for j in range(self.n)]

    def image_pieces(self) -> list[tuple[Scalar, Scalar, int]]:
        """``(left, right, j)`` for the image of each interval, sorted by position (``j`` 0-based)."""
        b, w = self.breakpoints, self.omega
        inv = self.perm.inverse().images
        return [(b[j] + w[j], b[j + 1] + w[j], j) for j in (k - 1 for k in inv)]

    def interval_index(self, x) -> int:
        """0-based index of the domain interval containing ``x``."""
        x = as_scalar(x)
        if x < ZERO or x >= ONE:
            raise ValueError(f"point {x} is outside [0, 1)")
        return bisect_right(self.breakpoints, x, 1, self.n) - 1

    def __call__(self, x) -> Scalar:
        x = as_scalar(x)
        return x + self.omega[self.interval_index(x)]

    def __matmul__(self, other: "IntervalExchange") -> "IntervalExchange":
        """``f @ g`` is the composition ``f o g`` (apply ``g`` first)."""
        return compose(self, other)

    def __eq__(self, other):
        if not isinstance(other, IntervalExchange):
            return NotImplemented
        return self.perm == other.perm and self.lengths == other.lengths

    def __hash__(self):
        return hash((self.perm, self.lengths))

    def is_identity(self) -> bool:
        return self.n == 1

    def __repr__(self):
        lens = ", ".join(str(v) for v in self.lengths)
        return f"IntervalExchange(perm=({', '.join(map(str, self.perm.images))}), lengths=({lens}))"


def _from_pieces(pieces: Iterable[tuple[Scalar, Scalar]], image_order: Sequence[int] | None = None) -> IntervalExchange:
    """Canonical form of the map given by ``(length, translation)`` pieces in domain order.

    ``image_order`` may list the piece indices sorted by image position when the
    caller already knows it; otherwise the image starts are sorted.
    """
    pieces = list(pieces)
    group = [0] * len(pieces)
    kept: list[list[Scalar]] = []
    for i, (length, shift) in enumerate(pieces):
        if length == ZERO:
            group[i] = -1
            continue
        if kept and kept[-1][1] == shift:
            # equal translations on adjacent pieces means the map is continuous there
            kept[-1][0] = kept[-1][0] + length
        else:
            kept.append([length, shift])
        group[i] = len(kept) - 1
    lengths = tuple(p[0] for p in kept)
    if image_order is None:
        starts = []
        left = ZERO
        for length, shift in kept:
            starts.append(left + shift)
            left = left + length
        order = sorted(range(len(kept)), key=starts.__getitem__)
    else:
        order = []
        for i in image_order:
            g = group[i]
            # merged pieces have adjacent images, so only the first one counts
            if g >= 0 and (not order or order[-1] != g):
                order.append(g)
    images = [0] * len(kept)
    for pos, j in enumerate(order, start=1):
        images[j] = pos
    return IntervalExchange._trusted(Permutation(tuple(images)), lengths)


def canonicalize(perm, lengths) -> IntervalExchange:
    """Canonical form of ``f_(perm, lengths)`` for any permutation and any
    nonnegative lengths summing to 1: drops empty intervals and merges neighbours
    that are translated by the same amount."""
    perm = _as_perm(perm)
    lengths = length_vector(lengths, closed=True)
    w = omega(perm, lengths)
    return _from_pieces(zip(lengths, w))


def identity() -> IntervalExchange:
    return IntervalExchange._trusted(Permutation((1,)), (ONE,))


def rotation(t) -> IntervalExchange:
    """The rotation ``x -> x + t (mod 1)``."""
    _, r = as_scalar(t).floor_frac()
    if r == ZERO:
        return identity()
    return IntervalExchange._trusted(Permutation((2, 1)), (ONE - r, r))


def apply(f: IntervalExchange, x) -> Scalar:
    return f(x)


def compose(f: IntervalExchange, g: IntervalExchange) -> IntervalExchange:
    """Canonical form of ``f o g``.

    Each interval of ``g`` is cut at the preimages of ``f``'s breakpoints that
    fall inside it; the resulting pieces carry the sum of both translations.
    """
    fb, fw = f.breakpoints, f.omega
    gw = g.omega
    per_interval: list[list[tuple[Scalar, Scalar]]] = [[] for _ in range(g.n)]
    # (g interval, index within it) of the pieces landing in each interval of f,
    # in the order they are generated, which is left to right inside f's interval
    by_f_interval: list[list[tuple[int, int]]] = [[] for _ in range(f.n)]
    k = 0  # current interval of f
    for lo, hi, j in g.image_pieces():
        shift = gw[j]
        out = per_interval[j]
        cursor = lo
        while fb[k + 1] <= cursor:
            k += 1
        while True:
            end = fb[k + 1]
            by_f_interval[k].append((j, len(out)))
            if end >= hi:
                out.append((hi - cursor, shift + fw[k]))
                break
            out.append((end - cursor, shift + fw[k]))
            cursor = end
            k += 1
    offsets = [0] * g.n
    for j in range(1, g.n):
        offsets[j] = offsets[j - 1] + len(per_interval[j - 1])
    image_order = [offsets[j] + i for k in f.perm.inverse().images for j, i in by_f_interval[k - 1]]
    return _from_pieces((p for chunk in per_interval for p in chunk), image_order)


def invert(f: IntervalExchange) -> IntervalExchange:
    """The inverse map; images of ``f``'s intervals become its domain intervals."""
    inv = f.perm.inverse()
    lengths = tuple(f.lengths[j - 1] for j in inv.images)
    # inverse of an unpartitioned permutation is unpartitioned
    return IntervalExchange._trusted(inv, lengths)


def power(f: IntervalExchange, n: int) -> IntervalExchange:
    """``f`` composed with itself ``n`` times (negative ``n`` uses the inverse)."""
    if n < 0:
        f, n = invert(f), -n
    result = identity()
    base = f
    while n:
        if n & 1:
            result = compose(base, result)
        base = compose(base, base)
        n >>= 1
    return result


def delta(f: IntervalExchange) -> int:
    """Number of discontinuities of ``f``, counting 0 as one."""
    return f.n


def fix_set(f: IntervalExchange) -> IntervalUnion:
    """The set of points fixed by ``f``: the union of intervals with zero translation."""
    return IntervalUnion((lo, hi) for lo, hi, w in f.pieces() if w == ZERO)


def image_of(f: IntervalExchange, subset: IntervalUnion) -> IntervalUnion:
    """``f(subset)`` for a finite union of half-open intervals."""
    out = []
    for lo, hi, w in f.pieces():
        for a, b in subset:
            a, b = max(a, lo), min(b, hi)
            if a < b:
                out.append((a + w, b + w))
    return IntervalUnion(out)
