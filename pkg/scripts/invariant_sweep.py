"""Sweep the invariant panel over the built-in fixtures and print a table.

Usage: python scripts/invariant_sweep.py [--random N] [--seed S]

With --random N, also sweeps N random face-closed complexes and reports
how many of them admit a fundamental class at all (most do not), as a
quick robustness check of the guard rails.
"""

import argparse
import random

from topinv import catalog, intersection
from topinv.complexes import TopologyError


def fmt(v):
    if v is None:
        return "-"
    if isinstance(v, bool):
        return "y" if v else "n"
    return str(v)


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--random", type=int, default=0, metavar="N")
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    cols = ["name", "dim", "orient", "kmax", "spin", "spin_c",
            "de_rham", "even", "sig", "sig8", "null_cob"]
    rows = []
    for name, K in catalog.manifold_fixtures().items():
        p = intersection.panel(K)
        rows.append([
            name, p.dim, fmt(p.orientable), p.k_orientable_max,
            fmt(p.spin), fmt(p.spin_c), fmt(p.de_rham), fmt(p.even_form),
            fmt(p.signature), fmt(p.signature_mod8),
            fmt(all(v == 0 for v in p.sw_numbers.values())),
        ])
    widths = [max(len(str(r[i])) for r in rows + [cols])
              for i in range(len(cols))]
    print("  ".join(c.ljust(w) for c, w in zip(cols, widths)))
    for r in rows:
        print("  ".join(str(v).ljust(w) for v, w in zip(r, widths)))

    if args.random:
        rng = random.Random(args.seed)
        ok = 0
        for _ in range(args.random):
            K = catalog.random_complex(rng)
            try:
                K.fundamental_class_f2()
            except TopologyError:
                continue
            ok += 1
        print(f"\nrandom complexes with an F2 fundamental class: "
              f"{ok}/{args.random}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
