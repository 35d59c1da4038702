"""Quadratic forms on finite abelian groups with values in Q/Z.

Group elements are written additively here even though the underlying
:class:`~relcenter.groups.FiniteGroup` calls its operation ``mul``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Mapping, Sequence

import numpy as np

from .errors import (
    FormNotPreserved,
    MalformedSpec,
    NonzeroAtIdentity,
    NotAbelian,
    NotBiadditive,
    NotConstantOnCosets,
    NotInjective,
    NotSubgroup,
    NotSymmetricUnderInversion,
)
from .groups import FiniteGroup, GroupHom, Subgroup, direct_product, quotient
from .phase import ZERO, Phase


@dataclass(frozen=True)
class QuadraticForm:
    group: FiniteGroup
    values: tuple[Phase, ...]

    def __call__(self, g: int) -> Phase:
        return self.values[g]


@dataclass(frozen=True)
class BilinearForm:
    group: FiniteGroup
    values: tuple[tuple[Phase, ...], ...]

    def __call__(self, g: int, h: int) -> Phase:
        return self.values[g][h]


@dataclass(frozen=True)
class PreMetricGroup:
    """A finite abelian group together with a validated quadratic form.

    ``factors`` is set by :func:`product_premetric` so that descent diagnostics
    can be reported per factor.  ``bicharacter`` is an optional annotation and
    is never checked.
    """

    group: FiniteGroup
    form: QuadraticForm
    factors: tuple[PreMetricGroup, ...] | None = field(default=None, compare=False)
    bicharacter: object = field(default=None, compare=False)

    def __post_init__(self):
        if self.form.group != self.group:
            raise MalformedSpec("form is defined on a different group")
        if not self.group.is_abelian:
            raise NotAbelian("pre-metric groups must be abelian")

    @property
    def order(self) -> int:
        return self.group.order

    def q(self, g: int) -> Phase:
        return self.form.values[g]

    @cached_property
    def bilinear(self) -> BilinearForm:
        return bilinear_form(self.form)

    def b(self, g: int, h: int) -> Phase:
        return self.bilinear.values[g][h]

    def values_by_label(self) -> dict[str, str]:
        return {lab: str(v) for lab, v in zip(self.group.labels, self.form.values)}

    @classmethod
    def from_values(cls, G: FiniteGroup, values, bicharacter=None) -> PreMetricGroup:
        return cls(G, validate_form(G, values), bicharacter=bicharacter)

    @classmethod
    def from_function(cls, G: FiniteGroup, fn: Callable[[int], Phase]) -> PreMetricGroup:
        return cls(G, validate_form(G, [fn(g) for g in G.elements()]))

    @classmethod
    def zero(cls, G: FiniteGroup) -> PreMetricGroup:
        return cls(G, validate_form(G, [ZERO] * G.order))


def _coerce_values(G: FiniteGroup, values) -> tuple[Phase, ...]:
    if isinstance(values, Mapping):
        out = [None] * G.order
        for key, v in values.items():
            idx = G.index(key) if isinstance(key, str) else G.check_index(key)
            out[idx] = v if isinstance(v, Phase) else Phase.parse(v) if isinstance(v, str) else Phase(v)
        missing = [G.labels[i] for i, v in enumerate(out) if v is None]
        if missing:
            raise MalformedSpec(f"form values missing for {missing}")
        return tuple(out)
    values = list(values)
    if len(values) != G.order:
        raise MalformedSpec(f"expected {G.order} form values, got {len(values)}")
    return tuple(v if isinstance(v, Phase) else Phase.parse(v) if isinstance(v, str) else Phase(v)
                 for v in values)


def _scaled(q: Sequence[Phase]) -> tuple[int, np.ndarray]:
    """Common denominator ``L`` and the integer numerators ``L*q`` (exact)."""
    L = math.lcm(*(v.denominator for v in q))
    dtype = np.int64 if L < 2**40 else object
    return L, np.array([v.numerator * (L // v.denominator) for v in q], dtype=dtype)


def _polarize_scaled(G: FiniteGroup, q: Sequence[Phase]) -> tuple[int, np.ndarray]:
    L, Q = _scaled(q)
    return L, (Q[G.array] - Q[:, None] - Q[None, :]) % L


def _polarize(G: FiniteGroup, q: Sequence[Phase]) -> tuple[tuple[Phase, ...], ...]:
    L, B = _polarize_scaled(G, q)
    return tuple(tuple(Phase(int(v), L) for v in row) for row in B)


def validate_form(G: FiniteGroup, values) -> QuadraticForm:
    """Check that ``values`` is a quadratic form on ``G`` and wrap it.

    ``values`` is either a sequence indexed by element or a mapping keyed by
    element index or label.  Checks run exhaustively: ``q(0) = 0``,
    ``q(-g) = q(g)`` and biadditivity of the polarization.
    """
    if not G.is_abelian:
        raise NotAbelian("quadratic forms need an abelian group")
    q = _coerce_values(G, values)
    if not q[0].is_zero():
        raise NonzeroAtIdentity(f"q(0) = {q[0]}, expected 0", 0)
    for g in G.elements():
        if q[G.inv(g)] != q[g]:
            raise NotSymmetricUnderInversion(
                f"q({G.labels[g]}) = {q[g]} but q(-{G.labels[g]}) = {q[G.inv(g)]}", g
            )
    L, B = _polarize_scaled(G, q)
    T = G.array
    for g in G.elements():
        # b(g + g2, h) - b(g, h) - b(g2, h) for all g2, h
        bad = np.argwhere((B[T[g]] - B[g][None, :] - B) % L != 0)
        if len(bad):
            g2, h = (int(v) for v in bad[0])
            raise NotBiadditive(
                f"b({G.labels[g]}+{G.labels[g2]}, {G.labels[h]}) != "
                f"b({G.labels[g]}, {G.labels[h]}) + b({G.labels[g2]}, {G.labels[h]})",
                (g, g2, h),
            )
    # consequence of the axioms; a failure here is a bug, not bad input
    _, Q = _scaled(q)
    assert all((B[g, g] - 2 * Q[g]) % L == 0 for g in G.elements())
    return QuadraticForm(G, q)


def bilinear_form(q: QuadraticForm) -> BilinearForm:
    """``b(g, h) = q(g + h) - q(g) - q(h)``."""
    return BilinearForm(q.group, _polarize(q.group, q.values))


def radical(q: QuadraticForm | PreMetricGroup) -> Subgroup:
    """Elements pairing trivially with everything under the associated form."""
    if isinstance(q, PreMetricGroup):
        b = q.bilinear
    else:
        b = bilinear_form(q)
    G = b.group
    return Subgroup(G, tuple(g for g in G.elements() if all(v.is_zero() for v in b.values[g])))


def product_premetric(M1: PreMetricGroup, M2: PreMetricGroup) -> PreMetricGroup:
    """Orthogonal sum: ``p(g, h) = q1(g) + q2(h)`` on ``G1 x G2``."""
    P, _, _ = direct_product(M1.group, M2.group)
    m = M2.order
    values = [M1.q(i // m) + M2.q(i % m) for i in P.elements()]
    return PreMetricGroup(P, validate_form(P, values), factors=(M1, M2))


def reverse(M: PreMetricGroup) -> PreMetricGroup:
    """Same group, form negated (the pointed shadow of reversing the braiding)."""
    return PreMetricGroup(M.group, QuadraticForm(M.group, tuple(-v for v in M.form.values)),
                          bicharacter=None)


@dataclass(frozen=True)
class PremetricMorphism:
    """A group homomorphism between the underlying groups of two pre-metric groups.

    Whether it preserves the forms is checked where it matters
    (:func:`antidiagonal`), so that the failure can carry a witness.
    """

    source: PreMetricGroup
    target: PreMetricGroup
    hom: GroupHom

    def __post_init__(self):
        if self.hom.source != self.source.group or self.hom.target != self.target.group:
            raise MalformedSpec("homomorphism does not match the pre-metric groups")

    def __call__(self, g: int) -> int:
        return self.hom(g)

    def form_violations(self) -> list[int]:
        return [x for x in self.source.group.elements()
                if self.target.q(self.hom(x)) != self.source.q(x)]


def check_embedding(iota: PremetricMorphism) -> None:
    if not iota.hom.is_injective():
        raise NotInjective("embedding is not injective")
    bad = iota.form_violations()
    if bad:
        x = bad[0]
        raise FormNotPreserved(
            f"q_target(iota({iota.source.group.labels[x]})) = {iota.target.q(iota(x))} "
            f"!= q({iota.source.group.labels[x]}) = {iota.source.q(x)}",
            x,
        )


def antidiagonal(iota1: PremetricMorphism, iota2: PremetricMorphism) -> Subgroup:
    """``{(iota1(x), -iota2(x))}`` inside ``G1 x G2`` (as built by :func:`direct_product`)."""
    if iota1.source != iota2.source:
        raise MalformedSpec("the two embeddings must start from the same pre-metric group")
    check_embedding(iota1)
    check_embedding(iota2)
    G1, G2 = iota1.target.group, iota2.target.group
    P, _, _ = direct_product(G1, G2)
    m = G2.order
    members = tuple(iota1(x) * m + G2.inv(iota2(x)) for x in iota1.source.group.elements())
    return Subgroup(P, members)


@dataclass
class DescentReport:
    """Outcome of trying to push a form down to ``M.group / N``.

    ``coset_witness`` is ``(coset_label, g, h)`` with ``g, h`` in the same coset
    but ``p(g) != p(h)``.  ``pairing_witnesses`` lists ``(n, x, b(n, x))`` with
    ``n`` in ``N`` and ``b(n, x) != 0``; ``factor_witnesses`` does the same per
    factor of a product, as ``(factor, n_i, x, b_i(n_i, x))``.  All entries are
    element labels or phase strings.
    """

    constant_on_cosets: bool
    coset_witness: tuple[str, str, str, str, str] | None
    pairing_witnesses: list[tuple[str, str, str]]
    factor_witnesses: list[tuple[int, str, str, str]]

    @property
    def pairing_condition_holds(self) -> bool:
        return not self.pairing_witnesses and not self.factor_witnesses

    def as_dict(self) -> dict:
        return {
            "constant_on_cosets": self.constant_on_cosets,
            "coset_witness": list(self.coset_witness) if self.coset_witness else None,
            "pairing_condition_holds": self.pairing_condition_holds,
            "pairing_witnesses": [list(w) for w in self.pairing_witnesses],
            "factor_witnesses": [list(w) for w in self.factor_witnesses],
        }


def descent_report(M: PreMetricGroup, N: Subgroup) -> DescentReport:
    G = M.group
    if N.parent != G:
        raise NotSubgroup("subgroup belongs to a different group")
    witness = None
    seen = set()
    for g in G.elements():
        if g in seen:
            continue
        coset = sorted(G.mul(g, n) for n in N.members)
        seen.update(coset)
        base = coset[0]
        for h in coset[1:]:
            if M.q(h) != M.q(base):
                witness = ("{" + ",".join(G.labels[c] for c in coset) + "}",
                           G.labels[base], G.labels[h], str(M.q(base)), str(M.q(h)))
                break
        if witness:
            break
    pairing = [(G.labels[n], G.labels[x], str(M.b(n, x)))
               for n in N.members for x in G.elements() if not M.b(n, x).is_zero()]
    factor_w: list[tuple[int, str, str, str]] = []
    if M.factors:
        M1, M2 = M.factors
        m = M2.order
        for i, (Mi, comp) in enumerate(((M1, lambda p: p // m), (M2, lambda p: p % m)), start=1):
            Gi = Mi.group
            gens = sorted({comp(n) for n in N.members})
            for g in gens:
                for x in Gi.elements():
                    v = Mi.b(g, x)
                    if not v.is_zero():
                        factor_w.append((i, Gi.labels[g], Gi.labels[x], str(v)))
    return DescentReport(witness is None, witness, pairing, factor_w)


def descend_form(M: PreMetricGroup, N: Subgroup) -> PreMetricGroup:
    """The form induced on ``M.group / N``.

    Constancy on cosets is checked directly.  On failure
    :class:`NotConstantOnCosets` is raised carrying the full
    :class:`DescentReport`.
    """
    report = descent_report(M, N)
    if not report.constant_on_cosets:
        lab, g, h, vg, vh = report.coset_witness
        raise NotConstantOnCosets(
            f"form is not constant on coset {lab}: p({g}) = {vg}, p({h}) = {vh}",
            witness=report.coset_witness,
            report=report,
        )
    Q, proj = quotient(M.group, N)
    values = [None] * Q.order
    for g in M.group.elements():
        if values[proj(g)] is None:
            values[proj(g)] = M.q(g)
    return PreMetricGroup(Q, validate_form(Q, values))
