"""The ten acceptance criteria, one test each.

Each test prints a single ``criterion N: PASS|FAIL ...`` line.  Run on its own
with ``pytest tests/test_acceptance.py -v`` or ``python tests/test_acceptance.py``.
"""

from __future__ import annotations

import random
import sys
import time
from fractions import Fraction
from pathlib import Path

import pytest

sys.path[:0] = [str(Path(__file__).parent), str(Path(__file__).parent.parent / "src")]

from conftest import perturbed_lengths, unpartitioned_perm  # noqa: E402
from oracles import ev, integral_distance, koopman, refining_points  # noqa: E402
from ietgroup.flows import (  # noqa: E402
    ConsistentWithRotation,
    NotRotation,
    NotStandard,
    RotationDecomposition,
    decompose_standard,
    flow_at,
    restricted_rotation,
    torus_element,
    verify_rotation_family,
)
from ietgroup.golden import golden_fn, golden_gn  # noqa: E402
from ietgroup.growth import growth, least_squares_slope  # noqa: E402
from ietgroup.iet import canonicalize, compose, delta, identity, invert, power, rotation  # noqa: E402
from ietgroup.metric import StepFunction, distance, koopman_l2_sq, sup_displacement  # noqa: E402
from ietgroup.sampling import random_flow_spec, random_iet, random_lengths, random_torus_point  # noqa: E402
from ietgroup.scalar import Scalar, sqrt  # noqa: E402

ID = identity()
R2 = sqrt(2)
SEED = 20261016

# D(h^n) for the growth map below, computed by the one-sided-limit oracle in
# tests/oracles.py (delta_by_limits), which never calls compose.
ORACLE_GROWTH = {50: 151, 100: 301, 200: 601}


def F(p, q=1):
    return Scalar(Fraction(p, q))


def growth_map():
    t = (R2 - 1) / 4
    s = (R2 - 1) / 3
    return compose(rotation(t), restricted_rotation(s, F(1, 2)))


def report(number: int, ok: bool, detail: str, elapsed: float, budget: float | None, capsys=None):
    within = budget is None or elapsed < budget
    status = "PASS" if ok and within else "FAIL"
    timing = f"{elapsed:.2f}s" + ("" if budget is None else f" (limit {budget:g}s)")
    line = f"criterion {number}: {status}  {detail}  [{timing}]"
    if capsys is not None:
        with capsys.disabled():
            print("\n" + line)
    else:
        print(line)
    return ok and within


def run(number, check, budget=None, capsys=None):
    start = time.perf_counter()
    try:
        ok, detail = check()
    except AssertionError as exc:
        ok, detail = False, f"assertion failed: {exc}"
    elapsed = time.perf_counter() - start
    return report(number, ok, detail, elapsed, budget, capsys)


def expect(cond, message):
    if not cond:
        raise AssertionError(message)


# -- the criteria ----------------------------------------------------------


def group_laws():
    rng = random.Random(SEED)
    maps = [random_iet(rng, 8, 64) for _ in range(1000)]
    equal_pairs = 0
    for i, f in enumerate(maps):
        g, h = maps[(i + 1) % 1000], maps[(i + 2) % 1000]
        expect(compose(compose(f, g), h) == compose(f, compose(g, h)), f"associativity at {i}")
        expect(compose(f, ID) == f == compose(ID, f), f"identity at {i}")
        fi = invert(f)
        expect(compose(f, fi) == ID == compose(fi, f), f"inverse at {i}")
        # uniqueness against an unrelated map and against a rebuilt copy of f
        rebuilt = _rebuild_from_points(f)
        for other in (g, rebuilt):
            pointwise = all(ev(f, x) == ev(other, x) for x in refining_points(f, other))
            expect((f == other) == pointwise, f"uniqueness at {i}")
            equal_pairs += f == other
    expect(equal_pairs >= 1000, "rebuilt copies should all compare equal")
    return True, "1000 random maps: associativity, identity, inverse, uniqueness exact"


def _rebuild_from_points(f):
    """Canonical form recovered from a split of each interval and its images only."""
    pieces = []
    for lo, hi, _ in f.pieces():
        mid = (lo + hi) / 2
        pieces += [(lo, mid), (mid, hi)]
    images = [ev(f, lo) for lo, _ in pieces]
    order = sorted(range(len(pieces)), key=lambda k: images[k])
    perm = [0] * len(pieces)
    for pos, k in enumerate(order, start=1):
        perm[k] = pos
    return canonicalize(perm, [hi - lo for lo, hi in pieces])


def metric_laws():
    rng = random.Random(SEED + 1)
    for i in range(500):
        f, g, h = (random_iet(rng, 8, 64, 2 if rng.random() < 0.3 else None) for _ in range(3))
        dfg = distance(f, g)
        expect(dfg >= 0 and dfg == distance(g, f), f"nonnegativity/symmetry at {i}")
        expect((dfg == 0) == (f == g) and distance(f, f) == 0, f"indiscernibles at {i}")
        expect(distance(f, h) <= dfg + distance(g, h), f"triangle at {i}")
        expect(distance(compose(f, h), compose(g, h)) == dfg, f"right invariance at {i}")
        expect(distance(f, ID) == distance(ID, invert(f)), f"inversion symmetry at {i}")
    return True, "500 random triples: metric axioms, right invariance, inversion symmetry exact"


def continuity_bound():
    rng = random.Random(SEED + 2)
    worst = Fraction(0)
    for i in range(200):
        n = rng.randint(1, 8)
        perm = unpartitioned_perm(rng, n)
        lam = random_lengths(rng, n, 32, 2 if rng.random() < 0.3 else None)
        eps = F(rng.randint(1, 100), rng.randint(100, 2000))
        lam2 = perturbed_lengths(rng, lam, eps)
        expect(max(abs(a - b) for a, b in zip(lam, lam2)) < eps / n, f"perturbation too large at {i}")
        d = distance(canonicalize(perm, lam), canonicalize(perm, lam2))
        expect(d <= (n + 1) * eps, f"bound violated at {i}")
        worst = max(worst, Fraction(float(d / ((n + 1) * eps))))
    return True, f"200 random perturbations within (n+1)eps; largest ratio {float(worst):.3f}"


def golden_sequences():
    fn = [distance(golden_fn(n), ID) for n in range(1, 9)]
    oracle = [integral_distance(golden_fn(n), ID) for n in range(1, 9)]
    expect([Fraction(x.a) for x in fn] == oracle and all(x.b == 0 for x in fn), "f_n distances differ from oracle")
    expect(all(a > b for a, b in zip(fn, fn[1:])), "f_n distances not strictly decreasing")
    expect(fn[-1] == F(8, 2 ** 17), "f_8 distance")
    for n in range(2, 11):
        g = golden_gn(n)
        expect(distance(g, ID) == F(1, 2 ** n), f"d(g_{n}, id)")
        expect(sup_displacement(g, ID) == F(1, 2), f"sup(g_{n}, id)")
    shown = ", ".join(str(x) for x in fn[:4])
    return True, f"d(f_n,id) = {shown}, ... matches oracle; d(g_n,id) = 2^-n with sup 1/2 for n=2..10"


def delta_inequalities():
    rng = random.Random(SEED + 3)
    for i in range(1000):
        f, g = random_iet(rng, 8, 64), random_iet(rng, 8, 64, 2 if rng.random() < 0.3 else None)
        d = delta(compose(f, g))
        expect(d <= delta(f) + delta(g), f"subadditivity at {i}")
        expect(d >= abs(delta(f) - delta(g)), f"lower bound at {i}")
    for i in range(1000):
        n = rng.randint(1, 8)
        lam = random_lengths(rng, n, 32)
        alpha = random_torus_point(rng, n, radicand=2, zero_prob=0.2)
        expect(delta(torus_element(lam, alpha)) <= 2 * n, f"torus bound at {i}")
    return True, "1000 random pairs satisfy both inequalities; 1000 torus elements have delta <= 2n"


def flow_laws():
    rng = random.Random(SEED + 4)
    kinds = {"Q": 0, "Q(sqrt2)": 0, "conjugated": 0}
    for i in range(200):
        radicand = 2 if i % 2 else None
        spec = random_flow_spec(rng, 3, radicand, conjugator=i % 4 >= 2)
        s, t = (F(rng.randint(-30, 30), rng.randint(1, 12)) for _ in range(2))
        if radicand:
            s = s + Scalar(0, Fraction(rng.randint(-5, 5), rng.randint(1, 5)), 2)
            t = t + Scalar(0, Fraction(rng.randint(-5, 5), rng.randint(1, 5)), 2)
        expect(compose(flow_at(spec, s), flow_at(spec, t)) == flow_at(spec, s + t), f"flow group law at {i}")
        kinds["Q(sqrt2)" if radicand else "Q"] += 1
        kinds["conjugated"] += spec.conjugator is not None
    for i in range(200):
        n = rng.randint(1, 6)
        lam = random_lengths(rng, n, 16, 2 if rng.random() < 0.5 else None)
        a = random_torus_point(rng, n, radicand=2, zero_prob=0.2)
        b = random_torus_point(rng, n, radicand=2, zero_prob=0.2)
        ab = tuple((x + y).frac() for x, y in zip(a, b))
        expect(compose(torus_element(lam, a), torus_element(lam, b)) == torus_element(lam, ab), f"torus law at {i}")
    return True, f"flow group law on 200 specs {kinds}; torus homomorphism on 200 triples"


def rotation_recognition():
    rng = random.Random(SEED + 5)
    for i in range(200):
        n = rng.randint(1, 6)
        lam = random_lengths(rng, n, 16, 2 if rng.random() < 0.5 else None)
        alpha = random_torus_point(rng, n, radicand=2, zero_prob=0.3)
        f = torus_element(lam, alpha)
        d = decompose_standard(f)
        expect(isinstance(d, RotationDecomposition) and d.regenerate() == f, f"round trip at {i}")
    w = decompose_standard(golden_gn(2))
    expect(isinstance(w, NotStandard), "g_2 should not be standard")
    expect(w.block == (F(0), F(3, 4)) and w.translations == (F(1, 2), F(0), F(-1, 2)), "g_2 witness")
    return True, "200 round trips; g_2 -> NotStandard on [0, 3/4) with shifts (1/2, 0, -1/2)"


def verifier():
    rng = random.Random(SEED + 6)
    tau = F(1, 512)
    passed = conjugated = 0
    for i in range(40):
        spec = random_flow_spec(rng, 3, 2, conjugator=i % 2 == 1)
        samples = [(k * tau, flow_at(spec, k * tau)) for k in range(9)]
        v = verify_rotation_family(samples)
        expect(isinstance(v, ConsistentWithRotation), f"genuine flow {i} gave {type(v).__name__}")
        passed += 1
        conjugated += spec.conjugator is not None
    v = verify_rotation_family([(F(k, 8), rotation(F(k, 8))) for k in range(4)])
    expect(isinstance(v, ConsistentWithRotation) and v.uniform_rate() == 1, "rotation samples")
    v = verify_rotation_family([(F(1, 4), rotation(F(1, 4))), (F(1, 2), rotation(F(1, 3)))])
    expect(isinstance(v, NotRotation) and v.check == "homomorphism", "doctored sample")
    expect(v.witness == (F(1, 4), F(1, 4), F(1, 2)), "doctored witness")
    h = growth_map()
    v = verify_rotation_family([(F(n), power(h, n)) for n in range(13)])
    expect(isinstance(v, NotRotation) and v.check == "growth", "powers of h")
    run_deltas = [d for _, d in v.witness]
    return True, (f"{passed} sampled flows consistent ({conjugated} conjugated); doctored -> homomorphism "
                  f"witness; powers of h -> growth along deltas {run_deltas}")


def growth_experiment():
    report_ = growth(growth_map(), 200)
    D = dict(report_.powers)
    for n, value in ORACLE_GROWTH.items():
        expect(D[n] == value, f"D_{n} = {D[n]}, oracle says {value}")
    tail = report_.eventually_constant_difference
    expect(tail is not None, "first differences are not eventually constant")
    C, onset = tail
    expect(C > 0, "constant difference is not positive")
    slope = least_squares_slope([(n, D[n]) for n in range(100, 201)])
    expect(slope > 0, "slope over [100, 200] is not positive")
    return True, f"D_200 = {D[200]}; differences constant = {C} from n = {onset}; slope over [100,200] = {slope}"


def koopman_witness():
    phi = StepFunction.indicator(0, F(1, 2))
    vals = [koopman_l2_sq(golden_fn(n), ID, phi) for n in range(1, 9)]
    oracle = [koopman(golden_fn(n), ID, [0, Fraction(1, 2), 1], [1, 0]) for n in range(1, 9)]
    expect([Fraction(v.a) for v in vals] == oracle, "Koopman values differ from oracle")
    expect(all(a >= b for a, b in zip(vals, vals[1:])), "not nonincreasing")
    expect(vals[-1] == 0, "does not reach 0")
    return True, "||T_fn chi - chi||^2 = " + ", ".join(str(v) for v in vals)


CRITERIA = [
    (1, group_laws, 10),
    (2, metric_laws, 10),
    (3, continuity_bound, None),
    (4, golden_sequences, 5),
    (5, delta_inequalities, None),
    (6, flow_laws, None),
    (7, rotation_recognition, None),
    (8, verifier, None),
    (9, growth_experiment, 60),
    (10, koopman_witness, None),
]


@pytest.mark.parametrize("number, check, budget", CRITERIA, ids=[f"criterion_{c[0]}" for c in CRITERIA])
def test_criterion(number, check, budget, capsys):
    assert run(number, check, budget, capsys)


if __name__ == "__main__":
    results = [run(number, check, budget) for number, check, budget in CRITERIA]
    sys.exit(0 if all(results) else 1)
