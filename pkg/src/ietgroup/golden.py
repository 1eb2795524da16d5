"""The two reference sequences of interval exchanges that converge to the identity
in the integral metric: ``golden_fn`` does so uniformly, ``golden_gn`` does not."""

from __future__ import annotations

from fractions import Fraction

from .iet import IntervalExchange, Permutation, canonicalize

__all__ = ["golden_fn", "golden_gn"]


def golden_fn(n: int) -> IntervalExchange:
    """Swap ``n`` adjacent pairs of intervals of length ``2**-(n+1)``; fix the rest.

    For ``n == 1`` this is the half-swap ``x -> x + 1/2 (mod 1)``.
    """
    if n < 1:
        raise ValueError(f"golden_fn needs n >= 1, got {n}")
    if n == 1:
        return canonicalize((2, 1), (Fraction(1, 2), Fraction(1, 2)))
    small = Fraction(1, 2 ** (n + 1))
    perm = Permutation.from_cycles(2 * n + 1, [(2 * j + 1, 2 * j + 2) for j in range(n)])
    return canonicalize(perm, [small] * (2 * n) + [1 - Fraction(n, 2 ** n)])


def golden_gn(n: int) -> IntervalExchange:
    """Exchange the first and third of four intervals of lengths
    ``(2**-n, 1/2 - 2**-n, 2**-n, 1/2 - 2**-n)``."""
    if n < 1:
        raise ValueError(f"golden_gn needs n >= 1, got {n}")
    a = Fraction(1, 2 ** n)
    b = Fraction(2 ** (n - 1) - 1, 2 ** n)
    return canonicalize(Permutation.from_cycles(4, [(1, 3)]), (a, b, a, b))
