"""Write the built-in triangulations and Gram matrices as CLI-ready files.

Usage: python scripts/export_fixtures.py [outdir]

Produces <name>.cx complex files and <name>.qf Gram files that the
`topinv` verbs accept, so the command line can be exercised against the
same fixtures the test suite uses.
"""

import sys
from pathlib import Path

from topinv import catalog
from topinv.complexes import complex_text
from topinv.quadforms import QuadraticForm, gram_text


def main() -> int:
    outdir = Path(sys.argv[1]) if len(sys.argv) > 1 else Path("fixtures")
    outdir.mkdir(parents=True, exist_ok=True)
    for name, K in catalog.manifold_fixtures().items():
        path = outdir / f"{name}.cx"
        path.write_text(complex_text(K))
        print(f"wrote {path}  (dim {K.dimension}, "
              f"{K.n_simplices(K.dimension)} top simplices)")
    grams = {
        "I2": catalog.identity_gram(2),
        "I8": catalog.identity_gram(8),
        "E8": catalog.e8_gram(),
        "hyperbolic": catalog.hyperbolic_gram(),
        "diag_1_3": [[1, 0], [0, 3]],
        "diag_1_m1": [[1, 0], [0, -1]],
    }
    for name, gram in grams.items():
        path = outdir / f"{name}.qf"
        path.write_text(gram_text(QuadraticForm(gram)))
        print(f"wrote {path}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
