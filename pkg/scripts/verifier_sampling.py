#!/usr/bin/env python3
"""How often the rotation-family checker accepts genuine flows at a given sampling step.

Draws random flow specs (half of them conjugated), samples each at times
0, tau, ..., (count-1)*tau and tallies the verdicts.  Coarse steps can leave
the local-translation check undecided; they should never produce NotRotation.
"""

from __future__ import annotations

import argparse
import random
import sys
from collections import Counter

from ietgroup.flows import flow_at, verify_rotation_family
from ietgroup.sampling import random_flow_spec
from ietgroup.scalar import format_scalar, parse_scalar


def main(argv=None) -> int:
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--trials", type=int, default=200)
    p.add_argument("--count", type=int, default=9)
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--tau", nargs="+", default=["1/16", "1/64", "1/256", "1/1024"])
    a = p.parse_args(argv)
    print("tau\tconsistent\tinconclusive\tnot_rotation")
    for text in a.tau:
        tau = parse_scalar(text)
        rng = random.Random(a.seed)
        tally = Counter()
        for i in range(a.trials):
            spec = random_flow_spec(rng, 3, 2, conjugator=i % 2 == 1)
            samples = [(k * tau, flow_at(spec, k * tau)) for k in range(a.count)]
            tally[type(verify_rotation_family(samples)).__name__] += 1
        print(f"{format_scalar(tau)}\t{tally['ConsistentWithRotation']}\t{tally['Inconclusive']}\t{tally['NotRotation']}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
