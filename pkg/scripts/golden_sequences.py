#!/usr/bin/env python3
"""Distances of the two reference sequences from the identity.

For each n prints delta, the integral distance, the sup displacement and the
Koopman distance on the indicator of [0, 1/2), both exactly and as decimals.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from ietgroup.golden import golden_fn, golden_gn
from ietgroup.iet import delta, identity
from ietgroup.metric import StepFunction, distance, koopman_l2_sq, sup_displacement
from ietgroup.scalar import Scalar, format_scalar


def rows(maker, n_max):
    phi = StepFunction.indicator(0, Scalar(1) / 2)
    ident = identity()
    for n in range(1, n_max + 1):
        f = maker(n)
        yield n, delta(f), distance(f, ident), sup_displacement(f, ident), koopman_l2_sq(f, ident, phi)


def main(argv=None) -> int:
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--n-max", type=int, default=10)
    p.add_argument("--out-dir", type=Path, default=Path("results"))
    a = p.parse_args(argv)
    a.out_dir.mkdir(parents=True, exist_ok=True)
    for name, maker in (("fn", golden_fn), ("gn", golden_gn)):
        lines = ["n\tdelta\tdist\tsup\tkoopman\tdist_dec"]
        for n, dl, d, s, k in rows(maker, a.n_max):
            lines.append("\t".join([str(n), str(dl)] + [format_scalar(x) for x in (d, s, k)] + [d.decimal(12)]))
        text = "\n".join(lines) + "\n"
        (a.out_dir / f"golden_{name}.tsv").write_text(text)
        print(f"# {name}")
        print(text, end="")
    return 0


if __name__ == "__main__":
    sys.exit(main())
