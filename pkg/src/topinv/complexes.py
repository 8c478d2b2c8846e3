"""Finite simplicial complexes with exact F2 and integral (co)homology.

A complex is stored by its maximal simplices; every face is implied.
Cochains over F2 are bitmasks over the lexicographically sorted list of
k-simplices, cochains over Z are integer tuples over the same basis.
All arithmetic is exact.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from . import f2linalg, zlinalg


class ParseError(ValueError):
    pass


class TopologyError(ValueError):
    pass


class SimplicialComplex:
    """A finite abstract simplicial complex given by maximal simplices."""

    def __init__(self, simplices):
        cleaned = []
        for s in simplices:
            t = tuple(sorted(s))
            if len(set(t)) != len(t):
                raise ParseError("duplicate vertex in simplex")
            if not t:
                raise ParseError("empty simplex")
            cleaned.append(t)
        if not cleaned:
            raise ParseError("complex has no simplices")
        # drop faces of other listed simplices, then dedupe
        maximal = []
        for s in cleaned:
            if any(set(s) < set(t) for t in cleaned):
                continue
            if s not in maximal:
                maximal.append(s)
        self.maximal_simplices: tuple[tuple[int, ...], ...] = tuple(sorted(maximal))
        self.dimension: int = max(len(s) for s in maximal) - 1
        self.vertices: tuple[int, ...] = tuple(
            sorted({v for s in maximal for v in s}))
        self._cache: dict = {}

    def _memo(self, key, build):
        if key not in self._cache:
            self._cache[key] = build()
        return self._cache[key]

    def simplices(self, k: int) -> tuple[tuple[int, ...], ...]:
        """All k-simplices in lexicographic order."""
        def build():
            if k < 0 or k > self.dimension:
                return ()
            out = set()
            for s in self.maximal_simplices:
                if len(s) >= k + 1:
                    out.update(itertools.combinations(s, k + 1))
            return tuple(sorted(out))
        return self._memo(("simp", k), build)

    def simplex_index(self, k: int) -> dict[tuple[int, ...], int]:
        return self._memo(
            ("idx", k), lambda: {s: i for i, s in enumerate(self.simplices(k))})

    def n_simplices(self, k: int) -> int:
        return len(self.simplices(k))

    def euler_characteristic(self) -> int:
        return sum((-1) ** k * self.n_simplices(k)
                   for k in range(self.dimension + 1))

    # ---- boundary and coboundary matrices ----

    def boundary_z(self, k: int) -> list[list[int]]:
        """Matrix of the boundary C_k -> C_{k-1}, rows over (k-1)-simplices."""
        def build():
            rows = [[0] * self.n_simplices(k)
                    for _ in range(self.n_simplices(k - 1))]
            if k <= 0:
                return rows
            idx = self.simplex_index(k - 1)
            for j, s in enumerate(self.simplices(k)):
                for i in range(k + 1):
                    face = s[:i] + s[i + 1:]
                    rows[idx[face]][j] += (-1) ** i
            return rows
        return self._memo(("bdz", k), build)

    def coboundary_z(self, k: int) -> list[list[int]]:
        """Matrix of delta: C^k -> C^{k+1}, the transpose of boundary_z(k+1)."""
        def build():
            b = self.boundary_z(k + 1)
            nk = self.n_simplices(k)
            return [[b[i][j] for i in range(nk)]
                    for j in range(self.n_simplices(k + 1))]
        return self._memo(("cbz", k), build)

    def coboundary_f2(self, k: int) -> list[int]:
        """Columns of delta over F2: one mask over (k+1)-simplices per k-simplex."""
        def build():
            if k < 0:
                return []
            cols = [0] * self.n_simplices(k)
            idx = self.simplex_index(k)
            for t, s in enumerate(self.simplices(k + 1)):
                for i in range(k + 2):
                    cols[idx[s[:i] + s[i + 1:]]] ^= 1 << t
            return cols
        return self._memo(("cbf2", k), build)

    def coboundary_apply_f2(self, k: int, x: int) -> int:
        """delta(x) for an F2 k-cochain mask."""
        out = 0
        cols = self.coboundary_f2(k)
        while x:
            b = x & -x
            out ^= cols[b.bit_length() - 1]
            x ^= b
        return out

    def coboundary_apply_z(self, k: int, x: tuple[int, ...]) -> tuple[int, ...]:
        return tuple(zlinalg.matvec(self.coboundary_z(k), list(x)))

    # ---- cohomology structures ----

    def cohomology_f2(self, k: int) -> "F2Cohomology":
        return self._memo(("hf2", k), lambda: F2Cohomology(self, k))

    def cohomology_z(self, k: int) -> "ZCohomology":
        return self._memo(("hz", k), lambda: ZCohomology(self, k))

    def fundamental_class_f2(self) -> int:
        """Mask of the F2 fundamental cycle over top simplices."""
        def build():
            n = self.dimension
            cols = [0] * self.n_simplices(n)
            if n > 0:
                idx = self.simplex_index(n - 1)
                for j, s in enumerate(self.simplices(n)):
                    for i in range(n + 1):
                        cols[j] ^= 1 << idx[s[:i] + s[i + 1:]]
            ker = f2linalg.kernel_basis(cols)
            if len(ker) != 1:
                raise TopologyError(
                    "not a pseudo-manifold / top homology not rank 1")
            return ker[0]
        return self._memo(("fcf2",), build)

    def fundamental_class_z(self) -> tuple[int, ...]:
        """Integral fundamental cycle, +1 on the lex-first top simplex."""
        def build():
            n = self.dimension
            ker = zlinalg.kernel_basis(self.boundary_z(n), self.n_simplices(n))
            if len(ker) != 1:
                raise TopologyError(
                    "not a pseudo-manifold / top homology not rank 1")
            gen = ker[0]
            lead = next((x for x in gen if x), 0)
            if lead < 0:
                gen = [-x for x in gen]
            return tuple(gen)
        return self._memo(("fcz",), build)


class F2Cohomology:
    """H^k(K; F2) with a fixed cocycle basis and coordinate reduction."""

    def __init__(self, K: SimplicialComplex, k: int):
        self.complex = K
        self.degree = k
        brows: dict[int, int] = {}
        for c in (K.coboundary_f2(k - 1) if k >= 1 else []):
            v = c
            while v:
                b = v.bit_length() - 1
                if b in brows:
                    v ^= brows[b]
                else:
                    brows[b] = v
                    break
        hrows: dict[int, tuple[int, int]] = {}
        basis: list[int] = []
        for z in f2linalg.kernel_basis(K.coboundary_f2(k)):
            v = z
            while v:
                b = v.bit_length() - 1
                if b in brows:
                    v ^= brows[b]
                elif b in hrows:
                    v ^= hrows[b][0]
                else:
                    break
            if v:
                hrows[v.bit_length() - 1] = (v, 1 << len(basis))
                basis.append(v)
        self._brows = brows
        self._hrows = hrows
        self.basis = basis

    @property
    def dim(self) -> int:
        return len(self.basis)

    def coords(self, z: int) -> int:
        """Coordinates of a cocycle mask over the basis, as a mask."""
        v, expr = z, 0
        while v:
            b = v.bit_length() - 1
            if b in self._brows:
                v ^= self._brows[b]
            elif b in self._hrows:
                row, e = self._hrows[b]
                v ^= row
                expr ^= e
            else:
                raise ValueError("not a cocycle")
        return expr

    def rep(self, coords: int) -> int:
        out = 0
        for i, b in enumerate(self.basis):
            if (coords >> i) & 1:
                out ^= b
        return out


class ZCohomology:
    """H^k(K; Z) presented as cyclic summands with coordinate reduction.

    summands lists the orders: d > 1 for torsion summands, 0 for free
    ones.  Coordinates are normalized, torsion entries reduced mod d, so
    a class is zero exactly when all its coordinates vanish.
    """

    def __init__(self, K: SimplicialComplex, k: int):
        self.complex = K
        self.degree = k
        nk = K.n_simplices(k)
        zbasis = zlinalg.kernel_basis(K.coboundary_z(k), nk) if nk else []
        zmat = [[col[i] for col in zbasis] for i in range(nk)]
        self._zmat = zmat
        self._zdz = zlinalg.diagonalize(zmat) if zbasis else None
        r = len(zbasis)
        prev = K.coboundary_z(k - 1) if k >= 1 else \
            [[0] * 0 for _ in range(nk)]
        s = len(prev[0]) if prev else 0
        rel_cols = []
        for j in range(s):
            b = [prev[i][j] for i in range(nk)]
            c = zlinalg.solve(zmat, b, self._zdz)
            assert c is not None
            rel_cols.append(c)
        relmat = [[col[i] for col in rel_cols] for i in range(r)]
        self._cdz = zlinalg.diagonalize(relmat) if r else None
        summands = []
        kept = []
        for i in range(r):
            di = self._cdz.diag[i] if i < len(self._cdz.diag) else 0
            if di != 1:
                summands.append(di)
                kept.append(i)
        self.summands: tuple[int, ...] = tuple(summands)
        self._kept = kept

    @property
    def dim(self) -> int:
        return len(self.summands)

    def coords(self, z) -> tuple[int, ...]:
        """Normalized coordinates of an integral cocycle over the summands."""
        z = list(z)
        if not self._zmat or not self._zmat[0]:
            if any(z):
                raise ValueError("not a cocycle")
            return ()
        c = zlinalg.solve(self._zmat, z, self._zdz)
        if c is None:
            raise ValueError("not a cocycle")
        y = zlinalg.matvec(self._cdz.u, c)
        out = []
        for i in self._kept:
            d = self.summands[len(out)]
            out.append(y[i] % d if d else y[i])
        return tuple(out)

    def rep(self, i: int) -> tuple[int, ...]:
        """Cocycle representative of the i-th summand generator."""
        col = self._kept[i]
        c = [self._cdz.uinv[row][col] for row in range(len(self._cdz.uinv))]
        return tuple(zlinalg.matvec(self._zmat, c))

    def is_zero(self, z) -> bool:
        return all(v == 0 for v in self.coords(z))


@dataclass
class CohomologyClass:
    """A cohomology class: representative cocycle plus basis coordinates.

    Over F2 the cocycle and coords are bitmasks; over Z they are integer
    tuples, coords normalized per summand.
    """

    ring: str
    degree: int
    cocycle: object
    coords: object
    complex: SimplicialComplex = field(repr=False)

    @property
    def is_zero(self) -> bool:
        if self.ring == "F2":
            return self.coords == 0
        return all(v == 0 for v in self.coords)

    def support(self) -> list[tuple[int, ...]]:
        """Simplices where the representative cocycle is nonzero."""
        simp = self.complex.simplices(self.degree)
        if self.ring == "F2":
            return [simp[i] for i in range(len(simp))
                    if (self.cocycle >> i) & 1]
        return [simp[i] for i, v in enumerate(self.cocycle) if v]


def f2_class(K: SimplicialComplex, k: int, mask: int) -> CohomologyClass:
    return CohomologyClass("F2", k, mask, K.cohomology_f2(k).coords(mask), K)


def z_class(K: SimplicialComplex, k: int, vec) -> CohomologyClass:
    vec = tuple(vec)
    return CohomologyClass("Z", k, vec, K.cohomology_z(k).coords(vec), K)


def reduce_mod2(x: CohomologyClass) -> CohomologyClass:
    """Coefficient reduction of an integral class to F2."""
    if x.ring != "Z":
        raise ValueError("reduce_mod2 expects an integral class")
    mask = 0
    for i, v in enumerate(x.cocycle):
        if v & 1:
            mask |= 1 << i
    return f2_class(x.complex, x.degree, mask)


# ---- module-level operations ----

@dataclass(frozen=True)
class HomologySummary:
    degree: int
    betti: int
    torsion: tuple[int, ...]


def homology(K: SimplicialComplex, ring: str = "Z") -> list[HomologySummary]:
    """Homology of K in all degrees 0..dim, exact."""
    ring = _norm_ring(ring)
    out = []
    n = K.dimension
    if ring == "F2":
        for k in range(n + 1):
            rk_in = f2linalg.rank(K.coboundary_f2(k - 1)) if k >= 1 else 0
            rk_out = f2linalg.rank(K.coboundary_f2(k))
            out.append(HomologySummary(k, K.n_simplices(k) - rk_in - rk_out, ()))
        return out
    dzs = {k: zlinalg.diagonalize(K.boundary_z(k)) for k in range(1, n + 2)}
    for k in range(n + 1):
        rk_k = dzs[k].rank if k >= 1 else 0
        rk_up = dzs[k + 1].rank if k + 1 <= n else 0
        betti = K.n_simplices(k) - rk_k - rk_up
        torsion = ()
        if k + 1 <= n:
            torsion = tuple(
                f for f in zlinalg.invariant_factors(dzs[k + 1].diag) if f > 1)
        out.append(HomologySummary(k, betti, torsion))
    return out


def _norm_ring(ring: str) -> str:
    r = ring.strip().upper()
    if r in ("F2", "GF2", "Z/2"):
        return "F2"
    if r == "Z":
        return "Z"
    raise ValueError(f"unknown ring: {ring!r}")


@dataclass
class FundamentalCycle:
    ring: str
    chain: object
    complex: SimplicialComplex = field(repr=False)


def fundamental_class(K: SimplicialComplex, ring: str = "F2") -> FundamentalCycle:
    """Top-degree fundamental cycle; errors if top homology is not rank 1."""
    ring = _norm_ring(ring)
    if ring == "F2":
        return FundamentalCycle("F2", K.fundamental_class_f2(), K)
    return FundamentalCycle("Z", K.fundamental_class_z(), K)


def cup_cochain_f2(K: SimplicialComplex, p: int, q: int, x: int, y: int) -> int:
    """Cochain-level cup product of an F2 p-cochain and q-cochain."""
    n = p + q
    if n > K.dimension:
        return 0
    ip = K.simplex_index(p)
    iq = K.simplex_index(q)
    out = 0
    for s_i, s in enumerate(K.simplices(n)):
        front = ip.get(s[:p + 1])
        back = iq.get(s[p:])
        if front is None or back is None:
            continue
        if (x >> front) & (y >> back) & 1:
            out ^= 1 << s_i
    return out


def cup_cochain_z(K: SimplicialComplex, p: int, q: int, x, y) -> tuple[int, ...]:
    """Cochain-level cup product over Z (front face times back face)."""
    n = p + q
    if n > K.dimension:
        return ()
    ip = K.simplex_index(p)
    iq = K.simplex_index(q)
    out = []
    for s in K.simplices(n):
        front = ip.get(s[:p + 1])
        back = iq.get(s[p:])
        out.append(0 if front is None or back is None
                   else x[front] * y[back])
    return tuple(out)


def cup_product(K: SimplicialComplex, x: CohomologyClass,
                y: CohomologyClass) -> CohomologyClass:
    """Cup product of cohomology classes over a common ring."""
    if x.ring != y.ring:
        raise ValueError("cup product operands over different rings")
    if x.ring == "F2":
        mask = cup_cochain_f2(K, x.degree, y.degree, x.cocycle, y.cocycle)
        return f2_class(K, x.degree + y.degree, mask)
    vec = cup_cochain_z(K, x.degree, y.degree, x.cocycle, y.cocycle)
    return z_class(K, x.degree + y.degree, vec)


def pairing(K: SimplicialComplex, x: CohomologyClass) -> int:
    """Evaluation of a top-degree class against the fundamental cycle."""
    n = K.dimension
    if x.degree != n:
        raise ValueError("pairing requires a top-degree class")
    if x.ring == "F2":
        return f2linalg.dot(x.cocycle, K.fundamental_class_f2())
    fc = K.fundamental_class_z()
    return sum(a * b for a, b in zip(x.cocycle, fc))


@dataclass
class PoincareReport:
    """Ranks of the cup-product pairing matrices against the F2 fundamental
    cycle, one per degree; perfect means every pairing is unimodular."""

    perfect: bool
    ranks: tuple[int, ...]
    dims: tuple[int, ...]
    first_degenerate: int | None

    def __bool__(self) -> bool:
        return self.perfect


def is_poincare_f2(K: SimplicialComplex) -> PoincareReport:
    """Whether the F2 cup pairing H^k x H^(n-k) -> F2 is perfect in all degrees."""
    n = K.dimension
    fc = K.fundamental_class_f2()
    ranks = []
    dims = []
    first_bad = None
    for k in range(n + 1):
        hk = K.cohomology_f2(k)
        hc = K.cohomology_f2(n - k)
        rows = []
        for xb in hk.basis:
            mask = 0
            for j, yb in enumerate(hc.basis):
                cup = cup_cochain_f2(K, k, n - k, xb, yb)
                if f2linalg.dot(cup, fc):
                    mask |= 1 << j
            rows.append(mask)
        r = f2linalg.rank(rows)
        ranks.append(r)
        dims.append(hk.dim)
        if (hk.dim != hc.dim or r != hk.dim) and first_bad is None:
            first_bad = k
    return PoincareReport(first_bad is None, tuple(ranks), tuple(dims), first_bad)


# ---- construction helpers ----

def parse_complex(text: str) -> SimplicialComplex:
    """Parse the complex file format: a dimension hint line, then one
    maximal simplex per line as space-separated vertex labels."""
    lines = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    if not lines:
        raise ParseError("empty complex file")
    head = lines[0].split()
    if len(head) != 1 or not _is_int(head[0]):
        raise ParseError(f"malformed dimension hint line: {lines[0]!r}")
    simplices = []
    for line in lines[1:]:
        parts = line.split()
        if not all(_is_int(p) for p in parts):
            raise ParseError(f"malformed simplex line: {line!r}")
        simplices.append(tuple(int(p) for p in parts))
    if not simplices:
        raise ParseError("complex file lists no simplices")
    return SimplicialComplex(simplices)


def _is_int(tok: str) -> bool:
    try:
        int(tok)
    except ValueError:
        return False
    return True


def complex_text(K: SimplicialComplex) -> str:
    lines = [str(K.dimension)]
    lines += [" ".join(str(v) for v in s) for s in K.maximal_simplices]
    return "\n".join(lines) + "\n"


def relabel(K: SimplicialComplex, mapping: dict[int, int]) -> SimplicialComplex:
    """The same complex with vertices renamed by an injective mapping."""
    if len(set(mapping.values())) != len(mapping):
        raise ValueError("relabeling not injective")
    return SimplicialComplex(
        tuple(mapping[v] for v in s) for s in K.maximal_simplices)


def transport_f2_cochain(src: SimplicialComplex, dst: SimplicialComplex,
                         k: int, mask: int, mapping: dict[int, int]) -> int:
    """Push an F2 cochain through a vertex relabeling."""
    idx = dst.simplex_index(k)
    out = 0
    for i, s in enumerate(src.simplices(k)):
        if (mask >> i) & 1:
            out ^= 1 << idx[tuple(sorted(mapping[v] for v in s))]
    return out


def product_complex(K: SimplicialComplex, L: SimplicialComplex) -> SimplicialComplex:
    """Staircase triangulation of the product of the underlying spaces.

    Vertices are the pairs (v, w) relabeled by their lexicographic rank;
    each pair of maximal simplices contributes one facet per monotone
    staircase path.
    """
    pairs = sorted((a, b) for a in K.vertices for b in L.vertices)
    lab = {pr: i for i, pr in enumerate(pairs)}
    facets = []
    for s in K.maximal_simplices:
        p = len(s) - 1
        for t in L.maximal_simplices:
            q = len(t) - 1
            for ks in itertools.combinations(range(p + q), p):
                kset = set(ks)
                i = j = 0
                path = [(s[0], t[0])]
                for step in range(p + q):
                    if step in kset:
                        i += 1
                    else:
                        j += 1
                    path.append((s[i], t[j]))
                facets.append(tuple(lab[pr] for pr in path))
    return SimplicialComplex(facets)
