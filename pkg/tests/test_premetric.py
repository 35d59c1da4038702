import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import FORMS
from relcenter.corpus import failing_descent_example, klein_tensor_example
from relcenter.errors import (
    FormNotPreserved,
    FormNotValid,
    NonzeroAtIdentity,
    NotAbelian,
    NotBiadditive,
    NotConstantOnCosets,
    NotInjective,
    NotSymmetricUnderInversion,
)
from relcenter.groups import GroupHom, build_group, cyclic, symmetric
from relcenter.phase import HALF, ZERO, Phase
from relcenter.premetric import (
    PreMetricGroup,
    PremetricMorphism,
    antidiagonal,
    check_embedding,
    descend_form,
    descent_report,
    product_premetric,
    radical,
    reverse,
    validate_form,
)

FORM_NAMES = sorted(FORMS)


def brute_b(M, g, h):
    G = M.group
    return M.q(G.mul(g, h)) - M.q(g) - M.q(h)


@pytest.mark.parametrize("name", FORM_NAMES)
def test_bilinear_matches_polarization(name):
    M = FORMS[name]
    for g, h in itertools.product(M.group.elements(), repeat=2):
        assert M.b(g, h) == brute_b(M, g, h) == M.b(h, g)


@pytest.mark.parametrize("name", FORM_NAMES)
def test_radical_matches_brute_force(name):
    M = FORMS[name]
    G = M.group
    brute = {g for g in G.elements() if all(brute_b(M, g, h).is_zero() for h in G.elements())}
    assert set(radical(M).members) == brute
    for r in brute:
        assert M.q(r) in (ZERO, HALF)


def test_validate_accepts_z4_x2_over_8():
    q = validate_form(cyclic(4), ["0", "1/8", "1/2", "1/8"])
    assert [str(v) for v in q.values] == ["0", "1/8", "1/2", "1/8"]


def test_validate_rejects_each_failure_kind():
    Z4 = cyclic(4)
    with pytest.raises(NonzeroAtIdentity):
        validate_form(Z4, ["1/2", "0", "0", "0"])
    with pytest.raises(NotSymmetricUnderInversion) as info:
        validate_form(Z4, ["0", "1/8", "1/2", "3/8"])
    assert info.value.witness == 1
    with pytest.raises(NotBiadditive):
        validate_form(Z4, ["0", "1/8", "1/4", "1/8"])
    with pytest.raises(NotAbelian):
        validate_form(symmetric(3), [0] * 6)
    assert issubclass(NotBiadditive, FormNotValid)


def test_product_with_trivial_is_a_relabeling():
    M = FORMS["Z4/x^2/8"]
    P = product_premetric(M, FORMS["Z1/zero"])
    assert [P.q(g) for g in P.group.elements()] == [M.q(g) for g in M.group.elements()]


def test_product_is_orthogonal():
    M1, M2 = FORMS["Z2/x^2/4"], FORMS["Z3/x^2/3"]
    P = product_premetric(M1, M2)
    for g, h in itertools.product(M1.group.elements(), M2.group.elements()):
        assert P.q(g * 3 + h) == M1.q(g) + M2.q(h)


def test_reverse_negates():
    M = FORMS["Z4/x^2/8"]
    R = reverse(M)
    assert all(R.q(g) == -M.q(g) for g in M.group.elements())
    assert set(radical(R).members) == set(radical(M).members)


def test_embedding_checks():
    M = FORMS["Z4/x^2/8"]
    D = PreMetricGroup.from_values(cyclic(2), ["0", "1/4"])
    with pytest.raises(FormNotPreserved):
        check_embedding(PremetricMorphism(D, M, GroupHom(D.group, M.group, (0, 2))))
    D0 = PreMetricGroup.zero(cyclic(2))
    with pytest.raises(NotInjective):
        check_embedding(PremetricMorphism(D0, M, GroupHom(D0.group, M.group, (0, 0))))


def test_antidiagonal_is_graph_of_x_to_minus_x():
    ex = klein_tensor_example()
    e1 = PremetricMorphism(ex.D, ex.C1.data, ex.iota1)
    e2 = PremetricMorphism(ex.D, ex.C2.data, ex.iota2)
    N = antidiagonal(e1, e2)
    G2 = ex.C2.data.group
    expected = {ex.iota1(x) * G2.order + G2.inv(ex.iota2(x)) for x in ex.D.group.elements()}
    assert set(N.members) == expected and N.order == 2


def brute_constant_on_cosets(P, N):
    G = P.group
    return all(P.q(G.mul(g, n)) == P.q(g) for g in G.elements() for n in N.members)


def test_klein_descent_succeeds():
    ex = klein_tensor_example()
    P = product_premetric(ex.C1.data, ex.C2.data)
    N = antidiagonal(PremetricMorphism(ex.D, ex.C1.data, ex.iota1),
                     PremetricMorphism(ex.D, ex.C2.data, ex.iota2))
    assert brute_constant_on_cosets(P, N)
    Q = descend_form(P, N)
    assert Q.order == 8
    report = descent_report(P, N)
    assert report.constant_on_cosets and report.pairing_condition_holds


def test_failing_descent_has_coset_and_pairing_witnesses():
    ex = failing_descent_example()
    P = product_premetric(ex.C1.data, ex.C2.data)
    N = antidiagonal(PremetricMorphism(ex.D, ex.C1.data, ex.iota1),
                     PremetricMorphism(ex.D, ex.C2.data, ex.iota2))
    assert not brute_constant_on_cosets(P, N)
    with pytest.raises(NotConstantOnCosets) as info:
        descend_form(P, N)
    report = info.value.report
    assert info.value.witness == ("{(0,1),(2,3)}", "(0,1)", "(2,3)", "1/8", "5/8")
    assert (1, "2", "1", "1/2") in report.factor_witnesses
    assert not report.pairing_condition_holds


@st.composite
def diagonal_forms(draw):
    """q(x) = sum c_i x_i^2 / (2 n_i) on Z_{n_1} x ... with n_i even, or / n_i for odd n_i."""
    orders = draw(st.lists(st.integers(1, 6), min_size=1, max_size=2))
    coeffs = [draw(st.integers(0, 11)) for _ in orders]
    G = build_group({"kind": "abelian", "orders": orders})

    def coords(i):
        out = []
        for d in reversed(orders):
            out.append(i % d)
            i //= d
        return list(reversed(out))

    def q(i):
        total = Phase(0)
        for x, n, c in zip(coords(i), orders, coeffs):
            den = 2 * n if n % 2 == 0 else n
            total = total + Phase(c * x * x, den)
        return total

    return PreMetricGroup.from_function(G, q)


@settings(max_examples=40, deadline=None)
@given(diagonal_forms())
def test_random_forms_satisfy_quadratic_identities(M):
    G = M.group
    for g in G.elements():
        assert M.b(g, g) == M.q(g) * 2
        for n in range(5):
            assert M.q(G.power(g, n)) == M.q(g) * (n * n)
    for r in radical(M).members:
        assert M.q(r) in (ZERO, HALF)


@settings(max_examples=25, deadline=None)
@given(diagonal_forms(), diagonal_forms())
def test_radical_of_product_is_product_of_radicals(M1, M2):
    P = product_premetric(M1, M2)
    m = M2.order
    expected = {a * m + b for a in radical(M1).members for b in radical(M2).members}
    assert set(radical(P).members) == expected
