"""Torus actions, rotation flows and a finite-sample checker for rotation families.

A standard torus action attaches to a length vector ``lam`` the maps
``torus_element(lam, alpha)`` which rotate the j-th block of ``lam`` by
``lam[j] * alpha[j]`` modulo ``lam[j]``.  A rotation flow restricts this to a
line ``t -> frac(t * rates)`` and optionally conjugates by a fixed interval
exchange.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .iet import (
    IntervalExchange,
    Permutation,
    canonicalize,
    compose,
    delta,
    identity,
    image_of,
    invert,
    length_vector,
    rotation,
)
from .metric import circle_rep, common_refinement
from .scalar import Scalar, as_scalar
from .sets import IntervalUnion

__all__ = [
    "TorusPoint",
    "FlowSpec",
    "RotationDecomposition",
    "NotStandard",
    "ConsistentWithRotation",
    "NotRotation",
    "Inconclusive",
    "torus_element",
    "flow_at",
    "restricted_rotation",
    "flow_fixed_set",
    "decompose_standard",
    "verify_rotation_family",
    "GROWTH_RUN",
    "SMALL_WINDOW",
]

ZERO = Scalar(0)
ONE = Scalar(1)

# consecutive strict increases of delta along an arithmetic run of times that
# count as unbounded growth
GROWTH_RUN = 5
# how many of the smallest positive times enter the local-translation check
SMALL_WINDOW = 4


def TorusPoint(coords: Sequence) -> tuple[Scalar, ...]:
    """Validate a point of the n-torus given by coordinates in [0, 1)."""
    pt = tuple(as_scalar(c) for c in coords)
    for c in pt:
        if c < ZERO or c >= ONE:
            raise ValueError(f"torus coordinate {c} is outside [0, 1)")
    return pt


def torus_element(lam: Sequence, alpha: Sequence) -> IntervalExchange:
    """Rotate the j-th block of ``lam`` by ``lam[j] * alpha[j]`` modulo ``lam[j]``."""
    lam = length_vector(lam)
    alpha = TorusPoint(alpha)
    if len(lam) != len(alpha):
        raise ValueError(f"{len(lam)} block lengths but {len(alpha)} torus coordinates")
    n = len(lam)
    perm = Permutation.from_cycles(2 * n, [(2 * j + 1, 2 * j + 2) for j in range(n)])
    split = []
    for length, a in zip(lam, alpha):
        split.extend((length * (ONE - a), length * a))
    return canonicalize(perm, split)


@dataclass(frozen=True)
class FlowSpec:
    """The flow ``t -> h o torus_element(base_lengths, frac(t * rates)) o h^-1``."""

    base_lengths: tuple[Scalar, ...]
    rates: tuple[Scalar, ...]
    conjugator: Optional[IntervalExchange] = None

    def __post_init__(self):
        lam = length_vector(self.base_lengths)
        rates = tuple(as_scalar(r) for r in self.rates)
        if len(lam) != len(rates):
            raise ValueError(f"{len(lam)} block lengths but {len(rates)} rates")
        object.__setattr__(self, "base_lengths", lam)
        object.__setattr__(self, "rates", rates)

    def conjugated(self, k: IntervalExchange) -> "FlowSpec":
        """Same flow conjugated by ``k``: its maps are ``k o f_t o k^-1``."""
        h = k if self.conjugator is None else compose(k, self.conjugator)
        return FlowSpec(self.base_lengths, self.rates, h)


def flow_at(spec: FlowSpec, t) -> IntervalExchange:
    t = as_scalar(t)
    alpha = [(t * a).frac() for a in spec.rates]
    f = torus_element(spec.base_lengths, alpha)
    h = spec.conjugator
    if h is None:
        return f
    return compose(h, compose(f, invert(h)))


def restricted_rotation(s, delta_) -> IntervalExchange:
    """Rotation of ``[0, delta_)`` by ``frac(s) * delta_`` modulo ``delta_``; identity elsewhere."""
    s, d = as_scalar(s), as_scalar(delta_)
    if not ZERO < d <= ONE:
        raise ValueError(f"support length {d} is not in (0, 1]")
    if d == ONE:
        return rotation(s)
    return torus_element((d, ONE - d), (s.frac(), ZERO))


def flow_fixed_set(spec: FlowSpec) -> IntervalUnion:
    """Points fixed at every time: the zero-rate blocks, carried through the conjugator."""
    fixed = []
    left = ZERO
    for length, rate in zip(spec.base_lengths, spec.rates):
        if rate == ZERO:
            fixed.append((left, left + length))
        left = left + length
    fixed = IntervalUnion(fixed)
    if spec.conjugator is None:
        return fixed
    return image_of(spec.conjugator, fixed)


# -- recognising standard torus elements -----------------------------------


@dataclass(frozen=True)
class RotationDecomposition:
    """Invariant blocks ``[u, v)`` with the amount ``rho`` each is rotated by."""

    blocks: tuple[tuple[Scalar, Scalar, Scalar], ...]
    standard: bool = True

    def lengths(self) -> tuple[Scalar, ...]:
        return tuple(v - u for u, v, _ in self.blocks)

    def alphas(self) -> tuple[Scalar, ...]:
        return tuple(rho / (v - u) for u, v, rho in self.blocks)

    def regenerate(self) -> IntervalExchange:
        return torus_element(self.lengths(), self.alphas())


@dataclass(frozen=True)
class NotStandard:
    """``block`` is invariant but not a rotation; ``translations`` are its pieces' shifts."""

    block: tuple[Scalar, Scalar]
    translations: tuple[Scalar, ...]
    standard: bool = False


def decompose_standard(f: IntervalExchange):
    """Split ``f`` into its finest invariant prefix blocks and read each as a rotation.

    Returns a :class:`RotationDecomposition` with ``torus_element(lengths, alphas) == f``,
    or :class:`NotStandard` naming the first block that is not a rotation.
    """
    bps, w, images = f.breakpoints, f.omega, f.perm.images
    blocks = []
    start = 0
    reach = 0
    for j in range(f.n):
        reach = max(reach, images[j])
        if reach != j + 1:
            continue
        # intervals start..j map onto positions start+1..j+1
        u, v = bps[start], bps[j + 1]
        shifts = w[start : j + 1]
        if len(shifts) == 1:
            rho = ZERO
        elif len(shifts) == 2:
            # canonical two-piece invariant block is a swap: shifts rho and rho - (v - u)
            rho = shifts[0]
        else:
            return NotStandard((u, v), tuple(shifts))
        blocks.append((u, v, rho))
        start = j + 1
    return RotationDecomposition(tuple(blocks))


# -- finite-sample rotation family checker -------------------------------


@dataclass(frozen=True)
class ConsistentWithRotation:
    """Samples show no violation.  ``rates`` pairs each refinement interval with the
    reconstructed rate, or ``None`` on thin exceptional strips."""

    rates: tuple[tuple[Scalar, Scalar, Optional[Scalar]], ...]
    max_delta: int

    def uniform_rate(self) -> Optional[Scalar]:
        found = {r for _, _, r in self.rates if r is not None}
        if len(found) == 1 and all(r is not None for _, _, r in self.rates):
            return found.pop()
        return None


@dataclass(frozen=True)
class NotRotation:
    """Samples cannot come from a rotation subgroup; ``check`` names the failed test."""

    check: str
    witness: tuple
    max_delta: int = 0


@dataclass(frozen=True)
class Inconclusive:
    reason: str
    max_delta: int = 0


def verify_rotation_family(samples):
    """Check sampled ``(t, f_t)`` pairs against the behaviour of a rotation flow.

    Three exact checks run in order:

    * homomorphism: ``f_{s+t} == f_s o f_t`` whenever all three times are sampled;
    * bounded discontinuities: along any arithmetic run of sampled times, delta
      may not strictly increase ``GROWTH_RUN`` times in a row;
    * local translation: on each interval of the common refinement, the
      ``SMALL_WINDOW`` smallest positive times must displace points by
      ``t * rate`` modulo 1 for a single rate.  Failures are tolerated on thin
      strips, no wider than what the flow sweeps over in those times; a wider
      failure makes the verdict :class:`Inconclusive`, because coarse sampling
      of a fast genuine flow looks the same.

    Only the first two checks can refute.  Finite data never proves a family is
    a rotation flow, so a pass is reported as :class:`ConsistentWithRotation`.
    """
    table: dict[Scalar, IntervalExchange] = {}
    for t, f in samples:
        t = as_scalar(t)
        if t in table:
            raise ValueError(f"duplicate sample time {t}")
        table[t] = f
    if not table:
        raise ValueError("no samples")
    if ZERO in table and table[ZERO] != identity():
        return NotRotation("identity", (ZERO,))
    table.setdefault(ZERO, identity())
    times = sorted(table)
    max_delta = max(delta(f) for f in table.values())

    for i, s in enumerate(times):
        if s == ZERO:
            continue
        for t in times:
            if t == ZERO or s + t not in table:
                continue
            if compose(table[s], table[t]) != table[s + t]:
                return NotRotation("homomorphism", (s, t, s + t), max_delta)

    run = _growth_run(times, table)
    if run is not None:
        return NotRotation("growth", run, max_delta)

    positive = [t for t in times if t > ZERO][:SMALL_WINDOW]
    if len(positive) < 2:
        return Inconclusive("fewer than two positive sample times", max_delta)
    return _local_translation(positive, table, max_delta)


def _growth_run(times, table):
    """First arithmetic run of times along which delta strictly increases GROWTH_RUN times."""
    present = set(times)
    for i, start in enumerate(times):
        for nxt in times[i + 1 :]:
            step = nxt - start
            if start - step in present:
                continue
            run = [start]
            t = start
            while t + step in present:
                t = t + step
                if delta(table[t]) > delta(table[run[-1]]):
                    run.append(t)
                    if len(run) > GROWTH_RUN:
                        return tuple((x, delta(table[x])) for x in run)
                else:
                    run = [t]
    return None


def _local_translation(positive, table, max_delta):
    maps = [table[t] for t in positive]
    cuts = common_refinement(*(f.breakpoints for f in maps))
    t1 = positive[0]
    rates = []
    failing = []
    for lo, hi in zip(cuts, cuts[1:]):
        shifts = [f.omega[f.interval_index(lo)] for f in maps]
        rate = circle_rep(shifts[0]) / t1
        if all(circle_rep(t * rate - c) == ZERO for t, c in zip(positive, shifts)):
            rates.append((lo, hi, rate))
        else:
            rates.append((lo, hi, None))
            failing.append((lo, hi))
    if failing:
        top_speed = max((abs(r) for _, _, r in rates if r is not None), default=ZERO)
        sweep = positive[-1] * top_speed
        too_wide = [(lo, hi) for lo, hi in failing if hi - lo > sweep]
        if too_wide:
            # a genuine flow sampled coarsely relative to its speeds fails the same way,
            # so a wide failure cannot refute the family
            witness = max(too_wide, key=lambda J: J[1] - J[0])
            return Inconclusive(f"no single rate fits [{witness[0]}, {witness[1]})", max_delta)
    return ConsistentWithRotation(tuple(rates), max_delta)
