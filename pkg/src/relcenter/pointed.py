"""Pointed braided fusion categories C(G, q), represented by their pre-metric data.

For a pointed category every simple object is invertible, so Frobenius-Perron
dimensions are plain counts of group elements and everything below is exact
integer or rational arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import NotCentral
from .groups import FiniteGroup, GroupHom
from .phase import Phase
from .premetric import (
    PreMetricGroup,
    PremetricMorphism,
    antidiagonal,
    check_embedding,
    descend_form,
    product_premetric,
    radical,
    reverse,
    validate_form,
)


@dataclass(frozen=True)
class PointedBraidedCategory:
    data: PreMetricGroup

    @property
    def group(self) -> FiniteGroup:
        return self.data.group

    @property
    def fpdim(self) -> int:
        return self.data.order


@dataclass(frozen=True)
class BraidingData:
    square: Phase
    twist: Phase


def braiding_data(C: PointedBraidedCategory, g: int, h: int) -> BraidingData:
    """Double braiding ``c_{Y,X} c_{X,Y}`` on degrees ``g, h`` and the twist on ``g``."""
    G = C.group
    g, h = G.check_index(g), G.check_index(h)
    return BraidingData(C.data.b(g, h), C.data.q(g))


def mueger_center(C: PointedBraidedCategory) -> PointedBraidedCategory:
    """Restriction of the category to the radical of the bilinear form."""
    return PointedBraidedCategory(_radical_embedding(C)[0])


def _check_central(iota: PremetricMorphism, which: int) -> None:
    rad = radical(iota.target)
    for x in iota.source.group.elements():
        if iota(x) not in rad:
            tgt = iota.target
            y = next(y for y in tgt.group.elements() if not tgt.b(iota(x), y).is_zero())
            raise NotCentral(
                f"image of {iota.source.group.labels[x]} in factor {which} is not in the "
                f"Mueger center: b({tgt.group.labels[iota(x)]}, {tgt.group.labels[y]}) = "
                f"{tgt.b(iota(x), y)}",
                (which, x, y),
            )


def relative_tensor(C1: PointedBraidedCategory, C2: PointedBraidedCategory, D: PreMetricGroup,
                    iota1: GroupHom, iota2: GroupHom) -> PointedBraidedCategory:
    """``C1 ⊠_D C2`` for ``D`` embedded in both Mueger centers.

    Realized as the orthogonal sum of the two forms pushed down to the quotient
    by the antidiagonal copy of ``D``.
    """
    e1 = PremetricMorphism(D, C1.data, iota1)
    e2 = PremetricMorphism(D, C2.data, iota2)
    check_embedding(e1)
    check_embedding(e2)
    _check_central(e1, 1)
    _check_central(e2, 2)
    P = product_premetric(C1.data, C2.data)
    N = antidiagonal(e1, e2)
    # cannot fail once the embeddings land in the radicals
    result = PointedBraidedCategory(descend_form(P, N))
    assert result.fpdim * D.order == C1.fpdim * C2.fpdim
    return result


def _radical_embedding(C: PointedBraidedCategory) -> tuple[PreMetricGroup, GroupHom]:
    H, inc = radical(C.data).as_group()
    return PreMetricGroup(H, validate_form(H, [C.data.q(x) for x in inc.image])), inc


def tilde(C: PointedBraidedCategory) -> PointedBraidedCategory:
    """``C ⊠_{C'} C^rev``."""
    D, inc = _radical_embedding(C)
    # 2q = 0 on the radical, so q and -q agree there
    assert all((2 * D.q(x)).is_zero() for x in D.group.elements())
    return relative_tensor(C, PointedBraidedCategory(reverse(C.data)), D, inc, inc)


@dataclass(frozen=True)
class FpdimReport:
    category: int
    center: int
    mueger: int
    tilde: int
    remainder: Fraction
    split_identity: bool
    remainder_identity: bool
    nondegenerate: bool
    remainder_vanishes: bool

    def as_dict(self) -> dict:
        return {
            "fpdim_C": self.category,
            "fpdim_Z(C)": self.center,
            "fpdim_C'": self.mueger,
            "fpdim_C~": self.tilde,
            "fpdim_R": str(self.remainder),
            "Z(C) = C~ * C'": self.split_identity,
            "R = |C|^2 (1 - 1/|C'|)": self.remainder_identity,
            "non-degenerate": self.nondegenerate,
            "R vanishes iff non-degenerate": self.remainder_vanishes,
        }


def center_fpdim_report(C: PointedBraidedCategory) -> FpdimReport:
    n = C.fpdim
    center = n * n
    mu = mueger_center(C).fpdim
    t = tilde(C).fpdim
    rem = Fraction(center) * (1 - Fraction(1, mu))
    nondeg = mu == 1
    return FpdimReport(
        category=n,
        center=center,
        mueger=mu,
        tilde=t,
        remainder=rem,
        split_identity=center == t * mu,
        remainder_identity=rem == center - t,
        nondegenerate=nondeg,
        remainder_vanishes=(rem == 0) == nondeg,
    )


@dataclass(frozen=True)
class AdjointCheck:
    i_of_unit_fpdim: int
    relative_fpdim: int
    deligne_fpdim: int
    identity_holds: bool


def adjoint_fpdim_check(C1: PointedBraidedCategory, C2: PointedBraidedCategory, D: PreMetricGroup,
                        iota1: GroupHom, iota2: GroupHom) -> AdjointCheck:
    """FPdim bookkeeping for the balanced functor ``C1 ⊠ C2 -> C1 ⊠_D C2``.

    ``I(1)`` is counted directly as the simples ``(x, y)`` of ``C1 ⊠ C2`` sent
    to the unit, i.e. the antidiagonal subgroup.
    """
    rel = relative_tensor(C1, C2, D, iota1, iota2)
    N = antidiagonal(PremetricMorphism(D, C1.data, iota1), PremetricMorphism(D, C2.data, iota2))
    i1 = len(N)
    deligne = C1.fpdim * C2.fpdim
    return AdjointCheck(i1, rel.fpdim, deligne, deligne == rel.fpdim * i1)
