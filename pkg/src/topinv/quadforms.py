"""Rational quadratic forms and their p-adic invariants.

A form is a nonsingular symmetric matrix over Q.  Its local data at each
prime is read off a rational diagonalization: split each diagonal entry
as p^a * b with b prime to p, count antisquares, and sum the unit parts
mod 8.  The resulting p-signatures, oddity, and p-excesses satisfy the
mod-8 reciprocity identity, and together with dimension, determinant
square class and real signature they decide rational equivalence.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import sympy


class FormError(ValueError):
    pass


class QuadraticForm:
    """Nonsingular symmetric rational Gram matrix with cached exact data.

    The rational diagonalization and determinant are computed eagerly at
    construction, so instances are immutable and safe to share.
    """

    def __init__(self, rows):
        gram = tuple(tuple(Fraction(x) for x in row) for row in rows)
        n = len(gram)
        if any(len(row) != n for row in gram):
            raise FormError("gram matrix not square")
        for i in range(n):
            for j in range(i):
                if gram[i][j] != gram[j][i]:
                    raise FormError("gram matrix not symmetric")
        self.gram = gram
        self.dim = n
        self.det = _det(gram)
        if self.det == 0:
            raise FormError("singular form")
        self.diagonal: tuple[Fraction, ...] = tuple(_diagonalize(gram))

    @property
    def is_integral(self) -> bool:
        return all(x.denominator == 1 for row in self.gram for x in row)

    def __repr__(self):
        return f"QuadraticForm(dim={self.dim}, det={self.det})"


def _det(gram) -> Fraction:
    a = [list(row) for row in gram]
    n = len(a)
    d = Fraction(1)
    for k in range(n):
        piv = next((i for i in range(k, n) if a[i][k] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            d = -d
        d *= a[k][k]
        for i in range(k + 1, n):
            f = a[i][k] / a[k][k]
            if f:
                a[i] = [x - f * y for x, y in zip(a[i], a[k])]
    return d


def _diagonalize(gram) -> list[Fraction]:
    """Symmetric congruence diagonalization over Q.

    The pivot is the first nonzero diagonal entry of the remaining block;
    when the whole block diagonal vanishes, a variable substitution
    x_k -> x_k + x_j with a[k][j] != 0 creates one.
    """
    a = [list(row) for row in gram]
    n = len(a)

    def swap(i, j):
        a[i], a[j] = a[j], a[i]
        for row in a:
            row[i], row[j] = row[j], row[i]

    def add_into(k, j):
        # x_k -> x_k + x_j
        a[k] = [x + y for x, y in zip(a[k], a[j])]
        for row in a:
            row[k] += row[j]

    diag = []
    for k in range(n):
        if a[k][k] == 0:
            piv = next((i for i in range(k + 1, n) if a[i][i] != 0), None)
            if piv is not None:
                swap(k, piv)
            else:
                off = next(((r, c) for r in range(k, n)
                            for c in range(r + 1, n) if a[r][c] != 0), None)
                if off is None:
                    raise FormError("singular form")
                r, c = off
                if r != k:
                    swap(k, r)
                add_into(k, c)
        d = a[k][k]
        diag.append(d)
        for i in range(k + 1, n):
            f = a[i][k] / d
            if f:
                a[i] = [x - f * y for x, y in zip(a[i], a[k])]
                for row in a:
                    row[i] -= f * row[k]
    return diag


def rational_diagonalize(form: QuadraticForm) -> tuple[Fraction, ...]:
    """Diagonal of a congruent diagonal form (exact, deterministic)."""
    return form.diagonal


def p_split(r, p: int) -> tuple[int, Fraction]:
    """Write a nonzero rational as p^a * b with b prime to p."""
    r = Fraction(r)
    if r == 0:
        raise FormError("p_split of zero")
    a = 0
    num, den = r.numerator, r.denominator
    while num % p == 0:
        num //= p
        a += 1
    while den % p == 0:
        den //= p
        a -= 1
    return a, Fraction(num, den)


def _unit_mod8(b: Fraction) -> int:
    # b has odd numerator and denominator here
    return b.numerator * pow(b.denominator, -1, 8) % 8


def _legendre(b: Fraction, p: int) -> int:
    x = b.numerator * pow(b.denominator, -1, p) % p
    return 1 if pow(x, (p - 1) // 2, p) == 1 else -1


def is_antisquare(r, p: int) -> bool:
    """Whether r is a p-adic antisquare: odd valuation and non-square unit.

    At p = 2 the unit part must be +-3 mod 8; at odd p it must be a
    quadratic non-residue.
    """
    a, b = p_split(r, p)
    if a % 2 == 0:
        return False
    if p == 2:
        return _unit_mod8(b) in (3, 5)
    return _legendre(b, p) == -1


@dataclass(frozen=True)
class LocalInvariants:
    p: int
    p_signature: int
    p_excess: int
    antisquare_count: int


def local_invariants(form: QuadraticForm, p: int) -> LocalInvariants:
    """p-signature (oddity at p = 2), p-excess, and antisquare count."""
    m = sum(1 for d in form.diagonal if is_antisquare(d, p))
    total = 4 * m
    for d in form.diagonal:
        a, b = p_split(d, p)
        if p == 2:
            total += _unit_mod8(b)
        else:
            # odd squares are 1 mod 8, so p^a mod 8 only sees a mod 2
            total += p % 8 if a % 2 else 1
    sig = total % 8
    if p == 2:
        excess = (form.dim - sig) % 8
    else:
        excess = (sig - form.dim) % 8
    return LocalInvariants(p, sig, excess, m)


def oddity(form: QuadraticForm) -> int:
    return local_invariants(form, 2).p_signature


def real_signature(form: QuadraticForm) -> int:
    """Sylvester signature: positive minus negative diagonal entries."""
    return sum(1 if d > 0 else -1 for d in form.diagonal)


def relevant_odd_primes(form: QuadraticForm) -> list[int]:
    """Odd primes at which the form can have nonzero p-excess."""
    ps: set[int] = set()
    for d in form.diagonal:
        for part in (d.numerator, d.denominator):
            ps.update(sympy.factorint(abs(part)))
    ps.discard(2)
    return sorted(ps)


def reciprocity_residual(form: QuadraticForm) -> int:
    """(signature + sum of odd p-excesses - oddity) mod 8; always zero."""
    total = real_signature(form) - oddity(form)
    for p in relevant_odd_primes(form):
        total += local_invariants(form, p).p_excess
    return total % 8


def signature_mod8_from_local(form: QuadraticForm) -> int:
    """Real signature mod 8 recovered from the 2-adic and odd local data."""
    total = oddity(form)
    for p in relevant_odd_primes(form):
        total -= local_invariants(form, p).p_excess
    return total % 8


def _is_square(r: Fraction) -> bool:
    if r <= 0:
        return False
    num, den = r.numerator, r.denominator
    return math.isqrt(num) ** 2 == num and math.isqrt(den) ** 2 == den


@dataclass(frozen=True)
class EquivalenceResult:
    equivalent: bool
    failing: str | None

    def __bool__(self) -> bool:
        return self.equivalent


def rationally_equivalent(f: QuadraticForm, g: QuadraticForm) -> EquivalenceResult:
    """Rational equivalence test via the complete invariant set.

    Checks dimension, real signature, oddity, every odd p-excess, and
    the determinant square class; reports the first failing criterion.
    """
    if f.dim != g.dim:
        return EquivalenceResult(False, "dimension")
    if real_signature(f) != real_signature(g):
        return EquivalenceResult(False, "signature")
    if oddity(f) != oddity(g):
        return EquivalenceResult(False, "oddity")
    for p in sorted(set(relevant_odd_primes(f)) | set(relevant_odd_primes(g))):
        if local_invariants(f, p).p_excess != local_invariants(g, p).p_excess:
            return EquivalenceResult(False, f"p-excess at {p}")
    if not _is_square(f.det / g.det):
        return EquivalenceResult(False, "determinant")
    return EquivalenceResult(True, None)


def is_even(form: QuadraticForm) -> bool:
    """Whether an integral form takes only even values on the diagonal."""
    if not form.is_integral:
        raise FormError("form not integral")
    return all(form.gram[i][i] % 2 == 0 for i in range(form.dim))


def direct_sum(f: QuadraticForm, g: QuadraticForm) -> QuadraticForm:
    rows = []
    for i, row in enumerate(f.gram):
        rows.append(list(row) + [Fraction(0)] * g.dim)
    for i, row in enumerate(g.gram):
        rows.append([Fraction(0)] * f.dim + list(row))
    return QuadraticForm(rows)


def parse_gram(text: str) -> QuadraticForm:
    """Parse the Gram file format: a 'dim d' header, then d rows of d
    exact rational entries."""
    lines = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    if not lines:
        raise FormError("empty gram file")
    head = lines[0].split()
    if len(head) != 2 or head[0] != "dim" or not head[1].isdigit():
        raise FormError(f"malformed dimension header: {lines[0]!r}")
    n = int(head[1])
    if len(lines) - 1 != n:
        raise FormError(f"expected {n} matrix rows, found {len(lines) - 1}")
    rows = []
    for line in lines[1:]:
        parts = line.split()
        if len(parts) != n:
            raise FormError(f"expected {n} entries per row: {line!r}")
        try:
            rows.append([Fraction(p) for p in parts])
        except (ValueError, ZeroDivisionError) as e:
            raise FormError(f"bad rational entry in row {line!r}: {e}")
    return QuadraticForm(rows)


def gram_text(form: QuadraticForm) -> str:
    lines = [f"dim {form.dim}"]
    for row in form.gram:
        lines.append(" ".join(str(x) for x in row))
    return "\n".join(lines) + "\n"
