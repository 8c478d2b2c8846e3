"""Wu and Stiefel-Whitney classes of triangulated F2-Poincare complexes.

The Wu class v_k is the unique solution of <v_k cup x, [M]> = <Sq^k x, [M]>
over the duality pairing; the total Stiefel-Whitney class is Sq applied to
the total Wu class.  Everything downstream (numbers, orientations, spin
conditions, cobordism) is derived from these.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import f2linalg, steenrod
from .complexes import (CohomologyClass, SimplicialComplex, TopologyError,
                        cup_cochain_f2, f2_class, is_poincare_f2)


def partitions(n: int) -> list[tuple[int, ...]]:
    """Partitions of n as descending tuples, lexicographically decreasing."""
    out: list[tuple[int, ...]] = []

    def rec(rem, cap, prefix):
        if rem == 0:
            out.append(tuple(prefix))
            return
        for part in range(min(rem, cap), 0, -1):
            rec(rem - part, part, prefix + [part])

    rec(n, n, [])
    return out


def wu_classes(K: SimplicialComplex) -> list[CohomologyClass]:
    """Wu classes v_0..v_n, solved degree by degree from the pairing."""
    def build():
        if not is_poincare_f2(K):
            raise TopologyError("duality pairing singular")
        fc = K.fundamental_class_f2()
        n = K.dimension
        out = []
        for k in range(n + 1):
            hk = K.cohomology_f2(k)
            hc = K.cohomology_f2(n - k)
            m = hk.dim
            rows = []
            rhs = []
            for c in hc.basis:
                row = 0
                for i, b in enumerate(hk.basis):
                    cup = cup_cochain_f2(K, k, n - k, b, c)
                    if f2linalg.dot(cup, fc):
                        row |= 1 << i
                rows.append(row)
                sqc = steenrod.sq_on_mask(K, k, n - k, c)
                rhs.append(f2linalg.dot(sqc, fc) if sqc else 0)
            sol = f2linalg.solve_square(rows, rhs)
            if sol is None or len(rows) != m:
                raise TopologyError("duality pairing singular")
            out.append(f2_class(K, k, hk.rep(sol)))
        return out
    return K._memo(("wu",), build)


def sw_classes(K: SimplicialComplex) -> list[CohomologyClass]:
    """Stiefel-Whitney classes w_0..w_n via the total-square formula."""
    def build():
        vs = wu_classes(K)
        n = K.dimension
        out = []
        for k in range(n + 1):
            mask = 0
            for i in range(k + 1):
                mask ^= steenrod.sq_on_mask(K, k - i, i, vs[i].cocycle)
            out.append(f2_class(K, k, mask))
        return out
    return K._memo(("sw",), build)


def sw_numbers(K: SimplicialComplex) -> dict[tuple[int, ...], int]:
    """All Stiefel-Whitney numbers of K, keyed by descending partitions."""
    ws = sw_classes(K)
    fc = K.fundamental_class_f2()
    n = K.dimension
    out = {}
    for part in partitions(n):
        mask = ws[part[0]].cocycle
        deg = part[0]
        for p in part[1:]:
            mask = cup_cochain_f2(K, deg, p, mask, ws[p].cocycle)
            deg += p
        out[part] = f2linalg.dot(mask, fc)
    return out


def integral_sw(K: SimplicialComplex) -> list[bool]:
    """Nonzero flags for the integral classes W_1..W_(n+1).

    W_(k+1) is the Bockstein of w_k; entry k of the result is the flag
    for W_(k+1).
    """
    flags = []
    for w in sw_classes(K):
        _, zero = steenrod.bockstein(K, w)
        flags.append(not zero)
    return flags


@dataclass
class ObstructionReport:
    orientable: bool
    k_orientable_max: int
    spin: bool
    spin_c: bool
    de_rham: int | None
    null_cobordant: bool


def obstructions(K: SimplicialComplex) -> ObstructionReport:
    """Orientation-flavoured obstructions readable from w and beta(w)."""
    ws = sw_classes(K)
    n = K.dimension

    def w_zero(j):
        return j > n or ws[j].is_zero

    k_max = 0
    while 2 ** k_max - 1 < n and all(
            w_zero(j) for j in range(1, 2 ** (k_max + 1))):
        k_max += 1
    orientable = w_zero(1)
    spin = orientable and w_zero(2)
    if orientable:
        _, w3_zero = steenrod.bockstein(K, ws[2]) if n >= 2 else (None, True)
        spin_c = w3_zero
    else:
        spin_c = False
    de_rham = None
    if n >= 5 and n % 4 == 1:
        mask = cup_cochain_f2(K, 2, n - 2, ws[2].cocycle, ws[n - 2].cocycle)
        de_rham = f2linalg.dot(mask, K.fundamental_class_f2())
    return ObstructionReport(
        orientable=orientable,
        k_orientable_max=k_max,
        spin=spin,
        spin_c=spin_c,
        de_rham=de_rham,
        null_cobordant=all(v == 0 for v in sw_numbers(K).values()),
    )


def cobordant(K1: SimplicialComplex, K2: SimplicialComplex
              ) -> tuple[bool, tuple[int, ...] | None]:
    """Whether all Stiefel-Whitney numbers agree; if not, the first
    differing partition in enumeration order."""
    if K1.dimension != K2.dimension:
        raise TopologyError("dimension mismatch")
    a = sw_numbers(K1)
    b = sw_numbers(K2)
    for part in partitions(K1.dimension):
        if a[part] != b[part]:
            return False, part
    return True, None


@dataclass
class CharClassProfile:
    """Wu classes, Stiefel-Whitney classes, numbers, and integral flags."""

    n: int
    wu: list[CohomologyClass]
    sw: list[CohomologyClass]
    sw_numbers: dict[tuple[int, ...], int]
    integral_sw_nonzero: list[bool]

    @property
    def wu_nonzero_degrees(self) -> list[int]:
        return [k for k, v in enumerate(self.wu) if not v.is_zero]

    @property
    def sw_nonzero_degrees(self) -> list[int]:
        return [k for k, v in enumerate(self.sw) if not v.is_zero]


def profile(K: SimplicialComplex) -> CharClassProfile:
    return CharClassProfile(
        n=K.dimension,
        wu=wu_classes(K),
        sw=sw_classes(K),
        sw_numbers=sw_numbers(K),
        integral_sw_nonzero=integral_sw(K),
    )
