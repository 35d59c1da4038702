"""Every identity the library promises, run over groups and forms as verdicts."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .center import (
    EquivariantBundle,
    centralizer_characters,
    class_vector,
    component_product_via_convolution,
    decompose_center,
    graded_convolution,
    induce_center_object,
    irrep_degrees,
    rep_fibre_fpdim_check,
    simple_objects,
    validate_bundle,
)
from .classring import build_ring, verify_ring_axioms
from .corpus import (
    corpus_forms,
    corpus_groups,
    failing_descent_example,
    fibre_examples,
    klein_tensor_example,
)
from .errors import AlgebraError, NotConstantOnCosets
from .groups import (
    FiniteGroup,
    centralizer,
    class_index,
    commutator_subgroup,
    conjugacy_classes,
)
from .phase import HALF, ZERO, Phase
from .pointed import (
    PointedBraidedCategory,
    adjoint_fpdim_check,
    braiding_data,
    center_fpdim_report,
    mueger_center,
    relative_tensor,
)
from .premetric import (
    PreMetricGroup,
    PremetricMorphism,
    antidiagonal,
    descend_form,
    product_premetric,
    radical,
    reverse,
)

ANCHORS = {
    "classes": "sum over classes |a| = |G|",
    "orbit": "|a| |Z(a)| = |G|",
    "census": "sum_r |r|^2 |Z(r)| = |G|^2 = FPdim Z(Rep(G))",
    "simples": "FPdim(V^G) = |a| dim(V)",
    "degrees": "sum d^2 = |H|, #linear = |H/[H,H]|",
    "ring": "structure of the center of the group ring Z[G]",
    "pairs": "N^{ab}_s = |{(x,y) in a x b | xy in s}|",
    "conv": "(+)_{xy=g} (xV (x) yW) = (+)_r N^{ab}_r (r, V (x) W)",
    "cocycle": "pi_{gh,x} = pi_{g,x} o pi_{h,g^-1 x g}",
    "quadratic": "q(g^-1) = q(g), b(g,h) = q(gh)/q(g)q(h) bimultiplicative",
    "braiding": "c_{X,Y} c_{Y,X} = b(g,h) id",
    "mueger": "c_{Y,X} o c_{X,Y} = id",
    "dimension_split": "FPdim(Z(C)) = FPdim(C~) FPdim(C')",
    "remainder": "FPdim(C)^2 (1 - FPdim(C')^-1) = FPdim(R)",
    "nondeg": "C non-degenerate => Z(C) = C_+ v C_-",
    "tensor": "C(G1 x G2 / G~, p) = C(G1,q1) [x]_{C(G,q)} C(G2,q2)",
    "adjoint": "FPdim(C) = FPdim(D) FPdim(I(1))",
    "descent": "b_i(g, x) = 1",
    "fibre": "FPdim(Rep(G1 x_G G2)) = |G1||G2|/|G|",
    "form_file": "q(g^-1) = q(g), b(g,h) = q(gh)/q(g)q(h) bimultiplicative",
}


@dataclass(frozen=True)
class Verdict:
    subject: str
    name: str
    anchor: str
    passed: bool
    witness: str | None = None

    def as_dict(self) -> dict:
        return {"subject": self.subject, "name": self.name, "anchor": self.anchor,
                "passed": self.passed, "witness": self.witness}

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        tail = f"  witness: {self.witness}" if self.witness else ""
        return f"{status}  {self.subject}: {self.name}  [{self.anchor}]{tail}"


def _v(subject: str, name: str, key: str, passed: bool, witness=None) -> Verdict:
    return Verdict(subject, name, ANCHORS[key], bool(passed), None if witness is None else str(witness))


def _guard(subject: str, name: str, key: str, fn) -> Verdict:
    try:
        result = fn()
    except (AlgebraError, AssertionError) as exc:
        return _v(subject, name, key, False, f"{type(exc).__name__}: {exc}")
    if isinstance(result, tuple):
        return _v(subject, name, key, *result)
    return _v(subject, name, key, result)


# -- groups ------------------------------------------------------------------


def group_verdicts(name: str, G: FiniteGroup, seed: int = 0) -> list[Verdict]:
    out = []
    classes = conjugacy_classes(G)
    out.append(_v(name, "class sizes sum to |G|", "classes", sum(c.size for c in classes) == G.order))

    def orbit():
        for a in G.elements():
            size = len(classes[class_index(G)[a]].members)
            if size * centralizer(G, a).order != G.order:
                return False, G.labels[a]
        return True
    out.append(_guard(name, "|class(a)| |Z(a)| = |G| for every a", "orbit", orbit))

    def census():
        comps = decompose_center(G)
        total = sum(c.fpdim for c in comps)
        independent = sum(c.cls.size ** 2 * centralizer(G, c.cls.representative).order for c in comps)
        return total == independent == G.order ** 2, f"total {total}"
    out.append(_guard(name, "component FPdims sum to |G|^2", "census", census))

    def simples():
        sims = simple_objects(G, seed)
        for comp in decompose_center(G):
            mine = [s for s in sims if s.cls == comp.cls]
            if len(mine) != comp.num_simples:
                return False, f"class {G.labels[comp.cls.representative]}: count"
            if sum(s.irrep_degree ** 2 for s in mine) != comp.centralizer.order:
                return False, f"class {G.labels[comp.cls.representative]}: degrees"
            if sum(s.fpdim ** 2 for s in mine) != comp.fpdim:
                return False, f"class {G.labels[comp.cls.representative]}: fpdim"
        return sum(s.fpdim ** 2 for s in sims) == G.order ** 2
    out.append(_guard(name, "simple census matches components", "simples", simples))

    def degrees():
        d = irrep_degrees(G, seed)
        return (len(d) == len(classes) and sum(x * x for x in d) == G.order
                and d.count(1) == G.order // commutator_subgroup(G).order), d
    out.append(_guard(name, "irreducible degrees recovered", "degrees", degrees))

    ring = build_ring(G)
    rep = verify_ring_axioms(ring)
    out.append(_v(name, "class ring commutative", "ring", rep.commutative, rep.witnesses.get("commutative")))
    out.append(_v(name, "class ring associative", "ring", rep.associative, rep.witnesses.get("associative")))
    out.append(_v(name, "identity class is the unit", "ring", rep.unit, rep.witnesses.get("unit")))
    out.append(_v(name, "pair counts divisible by |s|", "pairs", rep.divisible, rep.witnesses.get("divisible")))
    out.append(_v(name, "pair counts total |a||b|", "pairs", rep.pair_count_total,
                  rep.witnesses.get("pair_count_total")))

    if G.is_abelian:
        def group_ring():
            for a, ca in enumerate(ring.classes):
                for b, cb in enumerate(ring.classes):
                    s = class_index(G)[G.mul(ca.representative, cb.representative)]
                    want = tuple(1 if t == s else 0 for t in range(ring.rank))
                    if ring.coefficients[a][b] != want:
                        return False, (a, b)
            return True
        out.append(_guard(name, "abelian: class ring is the group ring", "ring", group_ring))

    def convolution():
        for a, ca in enumerate(ring.classes):
            for b, cb in enumerate(ring.classes):
                for dv, dw in ((1, 1), (2, 3)):
                    mult = component_product_via_convolution(G, ca.representative, cb.representative, dv, dw)
                    if [mult[c.representative] for c in ring.classes] != list(ring.coefficients[a][b]):
                        return False, (G.labels[ca.representative], G.labels[cb.representative])
                    total = sum(m * c.size for m, c in zip(mult.values(), ring.classes)) * dv * dw
                    if total != ca.size * dv * cb.size * dw:
                        return False, "graded dimension not conserved"
        return True
    out.append(_guard(name, "convolution multiplicities equal class coefficients", "conv", convolution))

    def class_constant():
        for ca in ring.classes:
            for cb in ring.classes:
                conv = graded_convolution(class_vector(G, ca.representative), class_vector(G, cb.representative), G)
                for c in ring.classes:
                    if len({conv[x] for x in c.members}) != 1:
                        return False, (ca.representative, cb.representative)
        return True
    out.append(_guard(name, "convolution of class vectors is class constant", "conv", class_constant))

    def unit_component():
        for cb in ring.classes:
            m = component_product_via_convolution(G, 0, cb.representative)
            if {r: v for r, v in m.items() if v} != {cb.representative: 1}:
                return False, G.labels[cb.representative]
        return True
    out.append(_guard(name, "identity component is the unit", "conv", unit_component))

    def cocycles():
        count = 0
        for c in classes:
            for chi in centralizer_characters(G, c.representative):
                verdict = validate_bundle(induce_center_object(G, c.representative, chi))
                if not verdict:
                    return False, verdict.witness
                count += 1
        return True, f"{count} bundles"
    out.append(_guard(name, "induced rank-one bundles satisfy the cocycle rule", "cocycle", cocycles))

    def perturbed():
        c = classes[-1]
        chi = centralizer_characters(G, c.representative)[0]
        B = induce_center_object(G, c.representative, chi)
        key = (G.order - 1, c.representative)
        pi = dict(B.pi)
        pi[key] = pi[key] + Phase(1, 3)
        verdict = validate_bundle(EquivariantBundle(G, B.support, B.fiber_dim, pi))
        return not verdict.ok, verdict.witness
    out.append(_guard(name, "perturbed bundle is rejected", "cocycle", perturbed))
    return out


# -- forms -------------------------------------------------------------------


def form_verdicts(name: str, M: PreMetricGroup) -> list[Verdict]:
    G = M.group
    out = []

    def powers():
        for g in G.elements():
            x = 0
            for n in range(G.element_order(g)):
                if M.q(x) != (n * n) * M.q(g):
                    return False, (G.labels[g], n)
                x = G.mul(x, g)
        return True
    out.append(_guard(name, "q(n g) = n^2 q(g)", "quadratic", powers))
    out.append(_guard(name, "b(g, g) = 2 q(g)", "quadratic",
                      lambda: all(M.b(g, g) == 2 * M.q(g) for g in G.elements())))

    R = radical(M)
    out.append(_v(name, "radical values in {0, 1/2}", "mueger",
                  all(M.q(g) in (ZERO, HALF) for g in R.members)))

    C = PointedBraidedCategory(M)

    def braiding():
        for g in G.elements():
            for h in G.elements():
                if braiding_data(C, g, h).square != braiding_data(C, h, g).square:
                    return False, ("symmetry", g, h)
                for k in G.elements():
                    if braiding_data(C, G.mul(g, k), h).square != (
                            braiding_data(C, g, h).square + braiding_data(C, k, h).square):
                        return False, ("additivity", g, k, h)
        return True
    out.append(_guard(name, "double braiding symmetric and biadditive", "braiding", braiding))

    def mueger_idem():
        Z = mueger_center(C)
        return mueger_center(Z).fpdim == Z.fpdim == len(R)
    out.append(_guard(name, "Mueger center is symmetric (idempotent)", "mueger", mueger_idem))

    def product_radical():
        P = product_premetric(M, M)
        return len(radical(P)) == len(R) ** 2
    out.append(_guard(name, "radical of a product is the product of radicals", "mueger", product_radical))

    out.append(_v(name, "reverse twice is the identity", "braiding", reverse(reverse(M)).form == M.form))

    rep = center_fpdim_report(C)
    out.append(_v(name, "|G|^2 = FPdim(C~) |radical|", "dimension_split",
                  rep.split_identity and rep.center == G.order ** 2 and rep.mueger == len(R),
                  f"{rep.center} vs {rep.tilde}*{rep.mueger}"))
    out.append(_v(name, "FPdim(R) = |G|^2 (1 - 1/|radical|)", "remainder",
                  rep.remainder_identity and rep.remainder == Fraction(G.order ** 2) * (1 - Fraction(1, len(R))),
                  f"R = {rep.remainder}"))
    out.append(_v(name, "R vanishes iff non-degenerate", "nondeg", rep.remainder_vanishes))
    return out


# -- worked examples ---------------------------------------------------------


def example_verdicts() -> list[Verdict]:
    out = []
    ex = klein_tensor_example()

    def tensor():
        C = relative_tensor(ex.C1, ex.C2, ex.D, ex.iota1, ex.iota2)
        expected = ex.C1.fpdim * ex.C2.fpdim // ex.D.order
        return C.fpdim == expected == 8, f"fpdim {C.fpdim}"
    out.append(_guard("C(Z2xZ2,a/2)^2 over C(Z2,1/2)", "relative tensor has FPdim 8", "tensor", tensor))

    def adjoint():
        chk = adjoint_fpdim_check(ex.C1, ex.C2, ex.D, ex.iota1, ex.iota2)
        return chk.identity_holds and chk.i_of_unit_fpdim == 2, f"I(1) = {chk.i_of_unit_fpdim}"
    out.append(_guard("C(Z2xZ2,a/2)^2 over C(Z2,1/2)", "16 = 8 * FPdim(I(1)), FPdim(I(1)) = 2",
                      "adjoint", adjoint))

    bad = failing_descent_example()

    def failing():
        P = product_premetric(bad.C1.data, bad.C2.data)
        N = antidiagonal(PremetricMorphism(bad.D, bad.C1.data, bad.iota1),
                         PremetricMorphism(bad.D, bad.C2.data, bad.iota2))
        try:
            descend_form(P, N)
        except NotConstantOnCosets as exc:
            rep = exc.report
            ok = rep.coset_witness is not None and any(
                w[0] == 1 and w[1] == "2" for w in rep.factor_witnesses)
            return ok, f"coset {rep.coset_witness[0]}; b_1(2, {rep.factor_witnesses[0][2]}) = {rep.factor_witnesses[0][3]}"
        return False, "descent unexpectedly succeeded"
    out.append(_guard("C(Z4,x^2/8)^2 over 2Z4", "descent rejected with witness", "descent", failing))

    for fx in fibre_examples():
        def fibre(fx=fx):
            chk = rep_fibre_fpdim_check(fx.pi1, fx.pi2, fx.phi)
            return chk.holds and chk.order == fx.expected_order, f"order {chk.order}"
        out.append(_guard(fx.name, "fibre product order", "fibre", fibre))
    return out


def run_suite(groups: dict[str, FiniteGroup] | None = None,
              forms: dict[str, PreMetricGroup] | None = None,
              examples: bool = True, seed: int = 0) -> list[Verdict]:
    groups = corpus_groups() if groups is None else groups
    forms = corpus_forms() if forms is None else forms
    out: list[Verdict] = []
    for name, G in groups.items():
        out.extend(group_verdicts(name, G, seed))
    for name, M in forms.items():
        out.extend(form_verdicts(name, M))
    if examples:
        out.extend(example_verdicts())
    return out


def all_passed(verdicts: Iterable[Verdict]) -> bool:
    return all(v.passed for v in verdicts)
