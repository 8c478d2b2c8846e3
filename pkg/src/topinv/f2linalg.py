"""Linear algebra over F2 on bitmask-encoded vectors.

A vector in F2^n is an int whose bit i is the i-th coordinate.  A linear
map is given by the list of images of the domain basis vectors, i.e. a
list of column masks.  Addition is xor, scalar multiplication is trivial,
and the dot product is the parity of the bitwise and.
"""

from __future__ import annotations


def dot(a: int, b: int) -> int:
    return (a & b).bit_count() & 1


class Echelon:
    """Incremental echelon basis with expression tracking.

    Rows are kept with distinct leading bits.  Each stored row r satisfies
    r = xor of the generator vectors named by its expression mask, so a
    vector that reduces to zero yields an explicit linear combination.
    """

    def __init__(self):
        self._rows: dict[int, int] = {}
        self._expr: dict[int, int] = {}

    def residue(self, v: int, expr: int = 0) -> tuple[int, int]:
        """Reduce v against the stored rows; return (residue, expression)."""
        rows = self._rows
        while v:
            b = v.bit_length() - 1
            row = rows.get(b)
            if row is None:
                break
            v ^= row
            expr ^= self._expr[b]
        return v, expr

    def insert(self, v: int, expr: int = 0) -> int | None:
        """Insert a generator; return its expression mask if dependent.

        `expr` names the generator (typically 1 << j for the j-th one).
        Returns None when v enlarges the span, otherwise the expression of
        v over previously inserted generators, including `expr` itself.
        """
        res, expr = self.residue(v, expr)
        if res == 0:
            return expr
        self._rows[res.bit_length() - 1] = res
        self._expr[res.bit_length() - 1] = expr
        return None

    def contains(self, v: int) -> bool:
        return self.residue(v)[0] == 0

    @property
    def rank(self) -> int:
        return len(self._rows)


def rank(vectors: list[int]) -> int:
    ech = Echelon()
    for v in vectors:
        ech.insert(v)
    return ech.rank


def kernel_basis(columns: list[int]) -> list[int]:
    """Kernel of the map with the given columns, as masks over column indices."""
    ech = Echelon()
    ker = []
    for j, c in enumerate(columns):
        combo = ech.insert(c, 1 << j)
        if combo is not None:
            ker.append(combo)
    return ker


def solve(columns: list[int], b: int) -> int | None:
    """One solution mask x with xor of columns[i] over bits of x equal to b.

    Returns None when b is outside the column span.  Free coordinates are
    set to zero.
    """
    ech = Echelon()
    for j, c in enumerate(columns):
        ech.insert(c, 1 << j)
    res, expr = ech.residue(b)
    if res != 0:
        return None
    return expr


def solve_square(rows: list[int], b_bits: list[int]) -> int | None:
    """Solve A x = b for a square system given as row masks.

    Returns None when the system is inconsistent; with A invertible the
    solution is unique.  Free variables, if any, are set to zero.
    """
    n = len(rows)
    mask = (1 << n) - 1
    store: dict[int, int] = {}
    for i in range(n):
        v = rows[i] | (b_bits[i] << n)
        while v & mask:
            b = (v & mask).bit_length() - 1
            if b in store:
                v ^= store[b]
                continue
            # clear lower pivot bits, then keep every stored row free of b
            for p in list(store):
                if (v >> p) & 1:
                    v ^= store[p]
            for p, r in list(store.items()):
                if (r >> b) & 1:
                    store[p] = r ^ v
            store[b] = v
            v = 0
        if v:
            return None
    x = 0
    for b, r in store.items():
        if (r >> n) & 1:
            x |= 1 << b
    return x
