#!/usr/bin/env python3
"""Predicted vs actual zeros of slice products on a sphere.

Reproduces the classification-shift ("camshaft") examples and then runs a
randomized survey: for random factor pairs over a chosen algebra, predict the
product's zeros on the unit sphere from the factor data and compare with the
direct classification.

Usage: python3 scripts/camshaft_demo.py [--algebra R4] [--trials 40] [--seed 0]
"""

import argparse
import random
from fractions import Fraction

import slicealg as sa
from slicealg.sampling import random_tame_poly


SHOWCASE = [
    ("R4", "e1", "x^2+1"),
    ("R4", "e1", "x-e2"),
    ("R4", "x-e1", "x-e2"),
    ("SO_ALT", "x-2*l", "x-i"),
    ("SO", "x*i-j", "l"),
    ("SO", "x*l-i*l", "x-i"),
]


def show(alg_id, f_expr, g_expr):
    alg = sa.make_builtin(alg_id)
    f = sa.parse_poly(f_expr, alg)
    g = sa.parse_poly(g_expr, alg)
    s = sa.SphereRef(Fraction(0), Fraction(1))
    r = sa.product_zero_predict(f, g, s)
    pw = ", ".join(str(w) for w in r.predicted.witnesses) or "-"
    aw = ", ".join(str(w) for w in r.actual.witnesses) or "-"
    print(f"[{alg_id:>6}] ({f_expr}) . ({g_expr})")
    print(f"         case {r.case}: predicted {r.predicted.kind} [{pw}] | "
          f"actual {r.actual.kind} [{aw}] | agrees {r.agrees}")


def survey(alg_id, trials, seed):
    alg = sa.make_builtin(alg_id)
    rng = random.Random(seed)
    s = sa.SphereRef(Fraction(0), Fraction(1))
    counts = {}
    disagreements = 0
    for _ in range(trials):
        f = random_tame_poly(alg, rng, max_degree=2)
        g = random_tame_poly(alg, rng, max_degree=2)
        r = sa.product_zero_predict(f, g, s)
        counts[r.case] = counts.get(r.case, 0) + 1
        if r.agrees is False:
            disagreements += 1
            print(f"  DISAGREEMENT: f={f} g={g}")
    print(f"\nsurvey over {alg_id} ({trials} random tame pairs):")
    for case, n in sorted(counts.items()):
        print(f"  {case:>16}: {n}")
    print(f"  disagreements: {disagreements}")


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--algebra", default="R4")
    ap.add_argument("--trials", type=int, default=40)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    print("== showcase ==")
    for alg_id, fe, ge in SHOWCASE:
        show(alg_id, fe, ge)
    print("\n== randomized survey ==")
    survey(args.algebra, args.trials, args.seed)


if __name__ == "__main__":
    main()
