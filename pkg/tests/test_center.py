import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import GROUPS
from relcenter.center import (
    EquivariantBundle,
    centralizer_characters,
    class_vector,
    component_product_via_convolution,
    decompose_center,
    graded_convolution,
    induce_center_object,
    irrep_degrees,
    linear_characters,
    rep_fibre_fpdim_check,
    simple_objects,
    transversal,
    validate_bundle,
)
from relcenter.classring import build_ring
from relcenter.corpus import fibre_examples
from relcenter.errors import NotCharacter
from relcenter.groups import centralizer, commutator_subgroup, conjugacy_classes, symmetric
from relcenter.phase import HALF, Phase

NAMES = sorted(GROUPS)

KNOWN_DEGREES = {
    "Z1": [1], "Z2": [1, 1], "Z4": [1] * 4, "Z2xZ2": [1] * 4, "Z6": [1] * 6,
    "S3": [1, 1, 2], "D4": [1, 1, 1, 1, 2], "Q8": [1, 1, 1, 1, 2],
    "A4": [1, 1, 1, 3], "S4": [1, 1, 2, 3, 3],
}


@pytest.mark.parametrize("name", NAMES)
def test_degrees_match_known_tables(name):
    assert irrep_degrees(GROUPS[name]) == KNOWN_DEGREES[name]


@pytest.mark.parametrize("seed", [0, 1, 7, 12345])
def test_degrees_do_not_depend_on_seed(seed):
    for name in ("S3", "Q8", "S4"):
        assert irrep_degrees(GROUPS[name], seed) == KNOWN_DEGREES[name]


@pytest.mark.parametrize("name", NAMES)
def test_census(name):
    G = GROUPS[name]
    comps = decompose_center(G)
    assert sum(c.fpdim for c in comps) == G.order ** 2
    for c in comps:
        assert c.fpdim == c.cls.size ** 2 * centralizer(G, c.cls.representative).order
        assert c.num_simples == len(conjugacy_classes(c.centralizer.as_group()[0]))
    assert [c.is_unit_copy for c in comps].count(True) == 1


def test_s3_components_and_simples():
    S3 = symmetric(3)
    assert [c.fpdim for c in decompose_center(S3)] == [6, 18, 12]
    sims = simple_objects(S3)
    assert len(sims) == 8
    assert sorted(s.fpdim for s in sims) == [1, 1, 2, 2, 2, 2, 3, 3]
    for s in sims:
        assert s.fpdim == s.cls.size * s.irrep_degree


@pytest.mark.parametrize("name", NAMES)
def test_simple_fpdims_square_sum(name):
    G = GROUPS[name]
    total = sum(s.fpdim ** 2 for s in simple_objects(G))
    # FPdim of the center is |G|^2 and every simple contributes fpdim^2
    assert total == G.order ** 2


@pytest.mark.parametrize("name", NAMES)
def test_linear_characters_are_homomorphisms(name):
    H = GROUPS[name]
    chars = linear_characters(H)
    assert len(chars) == H.order // commutator_subgroup(H).order
    assert len(set(chars)) == len(chars)
    for chi in chars:
        for g, h in itertools.product(H.elements(), repeat=2):
            assert chi[H.mul(g, h)] == chi[g] + chi[h]


def brute_cocycle_ok(G, B):
    for g, h in itertools.product(G.elements(), repeat=2):
        for x in B.support:
            y = G.mul(G.mul(G.inv(g), x), g)
            if B.pi[(G.mul(g, h), x)] != B.pi[(g, x)] + B.pi[(h, y)]:
                return False
    return True


@pytest.mark.parametrize("name", NAMES)
def test_every_induced_bundle_is_valid(name):
    G = GROUPS[name]
    for c in conjugacy_classes(G):
        for chi in centralizer_characters(G, c.representative):
            B = induce_center_object(G, c.representative, chi)
            assert set(B.support) == set(c.members)
            assert validate_bundle(B).ok
            assert brute_cocycle_ok(G, B)


def test_identity_class_trivial_character_gives_constant_bundle():
    S3 = symmetric(3)
    chi = {g: Phase(0) for g in S3.elements()}
    B = induce_center_object(S3, 0, chi)
    assert B.support == (0,)
    assert all(v.is_zero() for v in B.pi.values())


def test_perturbed_bundle_fails_with_witness():
    S3 = symmetric(3)
    t = S3.index("(0 1)")
    (chi,) = [c for c in centralizer_characters(S3, t) if all(v.is_zero() for v in c.values())]
    B = induce_center_object(S3, t, chi)
    pi = dict(B.pi)
    g = S3.index("(0 1 2)")
    pi[(g, t)] = pi[(g, t)] + HALF
    bad = EquivariantBundle(S3, B.support, B.fiber_dim, pi)
    verdict = validate_bundle(bad)
    assert not verdict.ok and verdict.witness is not None
    assert not brute_cocycle_ok(S3, bad)


def test_non_character_rejected():
    S3 = symmetric(3)
    c = S3.index("(0 1 2)")
    chi = {z: Phase(1, 2) if z else Phase(0) for z in centralizer(S3, c).members}
    with pytest.raises(NotCharacter):
        induce_center_object(S3, c, chi)


def test_transversal_is_minimal():
    S3 = symmetric(3)
    t = S3.index("(0 1)")
    T = transversal(S3, t)
    for x, r in T.items():
        assert S3.conj(r, t) == x
        assert all(S3.conj(s, t) != x for s in range(r))


@pytest.mark.parametrize("name", NAMES)
def test_convolution_agrees_with_class_ring(name):
    G = GROUPS[name]
    R = build_ring(G)
    reps = [c.representative for c in R.classes]
    for (i, a), (j, b) in itertools.product(enumerate(reps), repeat=2):
        for dims in ((1, 1), (2, 3)):
            got = component_product_via_convolution(G, a, b, *dims)
            assert got == dict(zip(reps, R.coefficients[i][j]))
            conv = graded_convolution(class_vector(G, a, dims[0]), class_vector(G, b, dims[1]), G)
            assert sum(conv) == R.classes[i].size * dims[0] * R.classes[j].size * dims[1]


def test_s3_convolution_example():
    S3 = symmetric(3)
    t, c = S3.index("(0 1)"), S3.index("(0 1 2)")
    tr, cr = min(conjugacy_classes(S3)[1].members), min(conjugacy_classes(S3)[2].members)
    out = component_product_via_convolution(S3, t, t)
    assert out[0] == 3 and out[cr] == 3 and out[tr] == 0
    assert component_product_via_convolution(S3, t, c)[tr] == 2


@pytest.mark.parametrize("ex", fibre_examples(), ids=lambda e: e.name)
def test_fibre_product_orders(ex):
    chk = rep_fibre_fpdim_check(ex.pi1, ex.pi2, ex.phi)
    brute = sum(1 for g in ex.pi1.source.elements() for h in ex.pi2.source.elements()
                if ex.pi1(g) == ex.phi(ex.pi2(h)))
    assert chk.order == brute == ex.expected_order
    assert chk.holds


@settings(max_examples=30, deadline=None)
@given(st.sampled_from(NAMES), st.data())
def test_convolution_is_associative(name, data):
    G = GROUPS[name]
    vec = st.lists(st.integers(0, 3), min_size=G.order, max_size=G.order)
    A, B, C = data.draw(vec), data.draw(vec), data.draw(vec)
    assert graded_convolution(graded_convolution(A, B, G), C, G) == \
        graded_convolution(A, graded_convolution(B, C, G), G)
    assert sum(graded_convolution(A, B, G)) == sum(A) * sum(B)


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(["S3", "D4", "Q8", "A4", "S4"]), st.data())
def test_any_transversal_gives_a_valid_bundle(name, data):
    G = GROUPS[name]
    cls = data.draw(st.sampled_from(conjugacy_classes(G)))
    a = cls.representative
    chi = data.draw(st.sampled_from(centralizer_characters(G, a)))
    reps = {}
    for x in cls.members:
        choices = [t for t in G.elements() if G.conj(t, a) == x]
        reps[x] = data.draw(st.sampled_from(choices))
    B = induce_center_object(G, a, chi, reps)
    assert validate_bundle(B).ok
    B0 = induce_center_object(G, a, chi)
    for z in centralizer(G, a).members:
        assert B.pi[(z, a)] == B0.pi[(z, a)] == chi[z]
