"""Seeded random generators for interval exchanges and flow data.

Used by the test suite and the experiment scripts; every function takes an
explicit :class:`random.Random` so runs are reproducible.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Optional

from .flows import FlowSpec
from .iet import IntervalExchange, canonicalize
from .scalar import Scalar

ZERO = Scalar(0)
ONE = Scalar(1)


def random_lengths(rng: random.Random, n: int, denominator: int = 64, radicand: Optional[int] = None):
    """``n`` positive scalars summing to 1.

    Rational lengths use random integer weights; with ``radicand`` set, a random
    irrational perturbation is added that keeps every entry positive.
    """
    weights = [rng.randint(1, denominator) for _ in range(n)]
    total = sum(weights)
    lengths = [Scalar(Fraction(w, total)) for w in weights]
    if radicand is not None and n > 1:
        root = Scalar(0, 1, radicand)
        # shift mass between two entries by eps*(sqrt(d) - floor(sqrt(d)))
        eps = min(lengths) / 4
        i, j = rng.sample(range(n), 2)
        bump = eps * root.frac()
        lengths[i] = lengths[i] + bump
        lengths[j] = lengths[j] - bump
    return lengths


def random_iet(rng: random.Random, max_n: int = 8, denominator: int = 64,
               radicand: Optional[int] = None) -> IntervalExchange:
    """Canonical form of a random ``(permutation, lengths)`` pair with ``n <= max_n``."""
    n = rng.randint(1, max_n)
    perm = list(range(1, n + 1))
    rng.shuffle(perm)
    return canonicalize(perm, random_lengths(rng, n, denominator, radicand))


def random_torus_point(rng: random.Random, n: int, denominator: int = 32,
                       radicand: Optional[int] = None, zero_prob: float = 0.0):
    out = []
    for _ in range(n):
        if rng.random() < zero_prob:
            out.append(ZERO)
            continue
        a = Scalar(Fraction(rng.randrange(denominator), denominator))
        if radicand is not None and rng.random() < 0.5:
            a = (a + Scalar(0, Fraction(rng.randint(1, 5), rng.randint(1, 7)), radicand)).frac()
        out.append(a)
    return tuple(out)


def random_flow_spec(rng: random.Random, max_blocks: int = 3, radicand: Optional[int] = None,
                     conjugator: bool = False, max_conj_n: int = 5) -> FlowSpec:
    n = rng.randint(1, max_blocks)
    lengths = random_lengths(rng, n, 16)
    rates = []
    for _ in range(n):
        roll = rng.random()
        if roll < 0.2:
            rates.append(ZERO)
        else:
            r = Scalar(Fraction(rng.randint(-6, 6), rng.randint(1, 4)))
            if radicand is not None and roll > 0.6:
                r = r + Scalar(0, Fraction(rng.randint(-3, 3) or 1, rng.randint(1, 3)), radicand)
            rates.append(r)
    h = random_iet(rng, max_conj_n, 16) if conjugator else None
    return FlowSpec(tuple(lengths), tuple(rates), h)
