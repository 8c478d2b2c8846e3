"""Middle-degree intersection forms and the invariant panel.

For an orientable 4m-dimensional Poincare complex the cup product on the
torsion-free part of H^(2m)(K;Z), evaluated on the oriented fundamental
cycle, is a symmetric nonsingular integer form.  The panel bundles its
signature data with the characteristic-class invariants; the comparator
reports whether any implemented obstruction separates two complexes.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import charclasses, quadforms, zlinalg
from .complexes import (SimplicialComplex, TopologyError, cup_cochain_z,
                        is_poincare_f2)


class NonOrientableError(TopologyError):
    pass


@dataclass
class IntersectionForm:
    m: int
    basis: list[tuple[int, ...]]
    gram: list[list[int]]
    orientation_tag: str

    @property
    def rank(self) -> int:
        return len(self.gram)


def intersection_form(K: SimplicialComplex) -> IntersectionForm:
    """Integral intersection form on the torsion-free part of H^(2m)."""
    def build():
        n = K.dimension
        if n % 4 != 0 or n == 0:
            raise TopologyError("dimension not 4m")
        try:
            fc = K.fundamental_class_z()
        except TopologyError:
            raise NonOrientableError(
                "non-orientable (no integral fundamental class)")
        if not is_poincare_f2(K):
            raise TopologyError("duality pairing singular")
        m = n // 4
        h = K.cohomology_z(2 * m)
        free = [i for i, d in enumerate(h.summands) if d == 0]
        basis = [h.rep(i) for i in free]
        gram = []
        for x in basis:
            row = []
            for y in basis:
                cup = cup_cochain_z(K, 2 * m, 2 * m, x, y)
                row.append(sum(a * b for a, b in zip(cup, fc)))
            gram.append(row)
        for i in range(len(gram)):
            for j in range(i):
                if gram[i][j] != gram[j][i]:
                    raise TopologyError(
                        "intersection gram not symmetric (internal error)")
        if basis and zlinalg.det(gram) == 0:
            raise TopologyError("pairing singular on torsion-free part")
        top = K.simplices(n)[0]
        tag = "+1 on " + " ".join(str(v) for v in top)
        return IntersectionForm(m, basis, gram, tag)
    return K._memo(("iform",), build)


def signature(K: SimplicialComplex) -> int:
    """Sylvester signature of the intersection form, exact."""
    form = intersection_form(K)
    if not form.gram:
        return 0
    return quadforms.real_signature(quadforms.QuadraticForm(form.gram))


def signature_mod8(K: SimplicialComplex) -> int:
    """Signature mod 8, cross-checked through the local invariants."""
    sig = signature(K)
    form = intersection_form(K)
    if form.gram:
        local = quadforms.signature_mod8_from_local(
            quadforms.QuadraticForm(form.gram))
        if local != sig % 8:
            raise TopologyError(
                "signature mod 8 routes disagree (local vs Sylvester)")
    return sig % 8


def form_even(K: SimplicialComplex) -> bool:
    """Evenness of the intersection form, verified both ways.

    The Gram diagonal test must agree with the vanishing of the middle
    Wu class; a mismatch raises.
    """
    form = intersection_form(K)
    gram_even = (True if not form.gram else
                 quadforms.is_even(quadforms.QuadraticForm(form.gram)))
    v2m_zero = charclasses.wu_classes(K)[2 * form.m].is_zero
    if gram_even != v2m_zero:
        raise TopologyError(
            "evenness criteria disagree (gram vs middle Wu class)")
    return gram_even


@dataclass
class InvariantPanel:
    """The comparison panel: cobordism, spin flavours, and signature data.

    Form fields are None unless the dimension is a positive multiple of 4
    and the complex is orientable; de_rham is None unless dim = 4k+1 >= 5.
    """

    dim: int
    sw_numbers: dict[tuple[int, ...], int]
    orientable: bool
    k_orientable_max: int
    spin: bool
    spin_c: bool
    de_rham: int | None
    even_form: bool | None
    signature_mod8: int | None
    signature: int | None


def panel(K: SimplicialComplex) -> InvariantPanel:
    ob = charclasses.obstructions(K)
    numbers = charclasses.sw_numbers(K)
    even = sig8 = sig = None
    if K.dimension % 4 == 0 and K.dimension > 0 and ob.orientable:
        try:
            intersection_form(K)
        except NonOrientableError:
            pass
        else:
            even = form_even(K)
            sig = signature(K)
            sig8 = signature_mod8(K)
    return InvariantPanel(
        dim=K.dimension,
        sw_numbers=numbers,
        orientable=ob.orientable,
        k_orientable_max=ob.k_orientable_max,
        spin=ob.spin,
        spin_c=ob.spin_c,
        de_rham=ob.de_rham,
        even_form=even,
        signature_mod8=sig8,
        signature=sig,
    )


def forms_rationally_equivalent(
        k1: SimplicialComplex, k2: SimplicialComplex
) -> tuple[quadforms.EquivalenceResult, quadforms.EquivalenceResult]:
    """Rational equivalence of the two extracted intersection forms.

    The orientation convention fixes each gram only up to a global sign,
    so the comparison is reported twice: against the second form as-is
    and against its negation.
    """
    f = quadforms.QuadraticForm(intersection_form(k1).gram)
    gram2 = intersection_form(k2).gram
    g = quadforms.QuadraticForm(gram2)
    gneg = quadforms.QuadraticForm([[-v for v in row] for row in gram2])
    return (quadforms.rationally_equivalent(f, g),
            quadforms.rationally_equivalent(f, gneg))


@dataclass
class PanelComparison:
    verdict: str
    differing: list[str]

    @property
    def consistent(self) -> bool:
        return self.verdict == "consistent-with-profinite-isomorphism"


def compare_panel_values(a: InvariantPanel, b: InvariantPanel) -> PanelComparison:
    """Comparator semantics: the verdict follows the cobordism, spin,
    spin_c, and signature-mod-8 obstructions; the differing list records
    every panel field that disagrees.

    Signatures are compared up to sign, since the orientation convention
    is not a relabeling invariant.  A consistent verdict never asserts
    that the profinite completions agree; it only means no implemented
    obstruction separates the inputs.
    """
    if a.dim != b.dim:
        return PanelComparison("distinguished by dimension", ["dim"])
    differing = []
    if a.sw_numbers != b.sw_numbers:
        differing.append("sw_numbers")
    for name in ("orientable", "k_orientable_max", "spin", "spin_c",
                 "de_rham", "even_form"):
        if getattr(a, name) != getattr(b, name):
            differing.append(name)
    sig8_differs = False
    if a.signature_mod8 is not None and b.signature_mod8 is not None:
        sig8_differs = (a.signature_mod8 != b.signature_mod8
                        and a.signature_mod8 != (-b.signature_mod8) % 8)
    elif (a.signature_mod8 is None) != (b.signature_mod8 is None):
        sig8_differs = True
    if sig8_differs:
        differing.append("signature_mod8")
    if (a.signature is None) != (b.signature is None) or (
            a.signature is not None and abs(a.signature) != abs(b.signature)):
        differing.append("signature")
    decisive = {"sw_numbers", "spin", "spin_c", "signature_mod8"}
    if decisive & set(differing):
        return PanelComparison("distinguished", differing)
    return PanelComparison("consistent-with-profinite-isomorphism", differing)


def compare_panels(k1: SimplicialComplex, k2: SimplicialComplex) -> PanelComparison:
    return compare_panel_values(panel(k1), panel(k2))
