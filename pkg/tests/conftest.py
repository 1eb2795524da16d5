import random
from fractions import Fraction

from hypothesis import HealthCheck, settings, strategies as st

from ietgroup.sampling import random_flow_spec, random_iet
from ietgroup.scalar import Scalar

settings.register_profile("default", max_examples=200, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

fractions = st.fractions(min_value=-8, max_value=8, max_denominator=60)
rational_scalars = fractions.map(Scalar)
quadratic_scalars = st.builds(lambda a, b: Scalar(a, b, 2), fractions, fractions)
scalars = st.one_of(rational_scalars, quadratic_scalars)
seeds = st.integers(min_value=0, max_value=2**32 - 1)


def iets(max_n=8, radicand=None, denominator=64):
    return seeds.map(lambda s: random_iet(random.Random(s), max_n, denominator, radicand))


def unpartitioned_perm(rng, n):
    while True:
        images = list(range(1, n + 1))
        rng.shuffle(images)
        if all(images[j + 1] != images[j] + 1 for j in range(n - 1)):
            return tuple(images)


def perturbed_lengths(rng, lengths, eps):
    """A positive length vector summing to 1 whose entries are each within eps/n of ``lengths``."""
    n = len(lengths)
    u = [Fraction(rng.randint(-1000, 1000), 1000) for _ in range(n)]
    mean = sum(u) / n
    steps = [Scalar(x - mean) for x in u]  # each in [-2, 2], summing to 0
    scale = eps / (2 * n) * Fraction(999, 1000)
    while True:
        out = [lam + scale * s for lam, s in zip(lengths, steps)]
        if all(x > 0 for x in out):
            return out
        scale = scale / 2


def flow_specs(radicand=None, conjugator=None):
    def build(seed):
        rng = random.Random(seed)
        conj = rng.random() < 0.5 if conjugator is None else conjugator
        return random_flow_spec(rng, 3, radicand, conj)
    return seeds.map(build)


def half():
    return Scalar(Fraction(1, 2))
