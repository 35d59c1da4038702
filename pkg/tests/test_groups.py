import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import GROUPS, brute_classes
from relcenter.errors import (
    GroupTooLarge,
    IndexOutOfRange,
    MalformedSpec,
    NoIdentity,
    NotAssociative,
    NotHomomorphism,
    NotNormal,
    NotSubgroup,
)
from relcenter.groups import (
    GroupHom,
    Subgroup,
    abelian_invariants,
    build_group,
    center_of_group,
    centralizer,
    class_of,
    commutator_subgroup,
    conjugacy_classes,
    cyclic,
    dihedral,
    direct_product,
    fibre_product,
    generated_subgroup,
    quaternion,
    quotient,
    symmetric,
    validate_table,
)

NAMES = sorted(GROUPS)


@pytest.mark.parametrize("name", NAMES)
def test_group_axioms_hold(name):
    G = GROUPS[name]
    for a, b, c in itertools.product(G.elements(), repeat=3):
        assert G.mul(G.mul(a, b), c) == G.mul(a, G.mul(b, c))
    for a in G.elements():
        assert G.mul(0, a) == a == G.mul(a, 0)
        assert G.mul(a, G.inv(a)) == 0


@pytest.mark.parametrize("name", NAMES)
def test_classes_match_brute_force(name):
    G = GROUPS[name]
    got = {frozenset(c.members) for c in conjugacy_classes(G)}
    assert got == set(brute_classes(G))
    for c in conjugacy_classes(G):
        assert c.representative == min(c.members)


@pytest.mark.parametrize("name", NAMES)
def test_orbit_stabilizer(name):
    G = GROUPS[name]
    for c in conjugacy_classes(G):
        Z = centralizer(G, c.representative)
        brute = {g for g in G.elements() if G.mul(g, c.representative) == G.mul(c.representative, g)}
        assert set(Z.members) == brute
        assert c.size * Z.order == G.order


@pytest.mark.parametrize("name", NAMES)
def test_center_is_union_of_singleton_classes(name):
    G = GROUPS[name]
    singletons = {c.representative for c in conjugacy_classes(G) if c.size == 1}
    assert set(center_of_group(G).members) == singletons


def test_s3_classes():
    S3 = symmetric(3)
    sizes = [c.size for c in conjugacy_classes(S3)]
    assert sorted(sizes) == [1, 2, 3]
    assert [centralizer(S3, c.representative).order for c in conjugacy_classes(S3)] == [6 // s for s in sizes]


def test_q8_center_and_named_families():
    Q8 = quaternion()
    assert Q8.order == 8 and center_of_group(Q8).order == 2
    assert dihedral(4).order == 8 and not dihedral(4).is_abelian
    assert len(conjugacy_classes(dihedral(4))) == 5
    assert len(conjugacy_classes(GROUPS["S4"])) == 5
    assert len(conjugacy_classes(GROUPS["A4"])) == 4


def test_quotient_of_z4_by_z2():
    Z4 = cyclic(4)
    N = Subgroup(Z4, (0, 2))
    Q, proj = quotient(Z4, N)
    assert Q.order == 2
    assert Q.labels == ("{0,2}", "{1,3}")
    assert proj.kernel().members == N.members


def test_non_normal_quotient_rejected():
    S3 = symmetric(3)
    H = generated_subgroup(S3, [S3.index("(0 1)")])
    with pytest.raises(NotNormal) as info:
        quotient(S3, H)
    assert info.value.witness is not None


def test_commutator_and_abelianization():
    S3 = symmetric(3)
    assert commutator_subgroup(S3).order == 3
    assert commutator_subgroup(GROUPS["Q8"]).order == 2
    assert commutator_subgroup(GROUPS["A4"]).order == 4


@pytest.mark.parametrize("orders, expected", [
    ([6], [6]), ([2, 3], [6]), ([2, 2], [2, 2]), ([4, 2], [2, 4]), ([2, 6], [2, 6]), ([1], []),
])
def test_abelian_invariants(orders, expected):
    G = build_group({"kind": "abelian", "orders": orders})
    assert abelian_invariants(G) == expected


def _brute_is_cyclic(G):
    return any(G.element_order(a) == G.order for a in G.elements())


def test_z2_x_z3_is_cyclic_by_order_scan():
    P, _, _ = direct_product(cyclic(2), cyclic(3))
    assert _brute_is_cyclic(P)
    assert abelian_invariants(P) == [6]


def test_direct_product_inclusions_commute():
    G, H = symmetric(3), cyclic(4)
    P, i1, i2 = direct_product(G, H)
    assert P.order == 24
    for g in G.elements():
        for h in H.elements():
            assert P.mul(i1(g), i2(h)) == P.mul(i2(h), i1(g))


def test_fibre_product_orders():
    Z4, Z2 = cyclic(4), cyclic(2)
    mod2 = GroupHom(Z4, Z2, (0, 1, 0, 1))
    F, t1, t2 = fibre_product(mod2, mod2, GroupHom.identity(Z2))
    brute = [(g, h) for g in Z4.elements() for h in Z4.elements() if mod2(g) == mod2(h)]
    assert F.order == len(brute) == 8
    for p in F.elements():
        assert mod2(t1(p)) == mod2(t2(p))


def test_table_validation_errors():
    with pytest.raises(NotAssociative):
        validate_table(["0", "1", "2"], [[(-x - y) % 3 for y in range(3)] for x in range(3)])
    with pytest.raises(NoIdentity):
        validate_table(["a", "b"], [[0, 0], [0, 0]])
    with pytest.raises(MalformedSpec):
        validate_table(["a", "b"], [[0, 1]])


def test_identity_moved_to_index_zero():
    G = build_group({"kind": "table", "elements": ["x", "e"], "table": [["e", "x"], ["x", "e"]]})
    assert G.labels[0] == "e"


def test_build_group_rejects_bad_records():
    with pytest.raises(MalformedSpec):
        build_group({"kind": "named", "family": "cyclic", "parameter": 3, "colour": "red"})
    with pytest.raises(MalformedSpec):
        build_group({"kind": "sporadic"})
    with pytest.raises(GroupTooLarge):
        build_group({"kind": "named", "family": "symmetric", "parameter": 6}, max_order=512)


def test_bad_homomorphism_and_subgroup():
    Z4 = cyclic(4)
    with pytest.raises(NotHomomorphism):
        GroupHom(Z4, cyclic(2), (0, 1, 1, 0))
    with pytest.raises(NotSubgroup):
        Subgroup(Z4, (0, 1))
    with pytest.raises(IndexOutOfRange):
        Z4.check_index(7)


def test_permutation_record_generates_s3():
    G = build_group({"kind": "permutation", "degree": 3, "generators": [[1, 0, 2], [1, 2, 0]]})
    assert G.order == 6 and not G.is_abelian


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(NAMES), st.data())
def test_class_of_is_closed_under_conjugation(name, data):
    G = GROUPS[name]
    a = data.draw(st.integers(0, G.order - 1))
    g = data.draw(st.integers(0, G.order - 1))
    c = class_of(G, a)
    assert G.conj(g, a) in c
    assert class_of(G, G.conj(g, a)) == c


@settings(max_examples=30, deadline=None)
@given(st.lists(st.integers(1, 6), min_size=1, max_size=3))
def test_abelian_invariants_product_and_divisibility(orders):
    G = build_group({"kind": "abelian", "orders": orders})
    inv = abelian_invariants(G)
    prod = 1
    for d in inv:
        prod *= d
    assert prod == G.order
    assert all(b % a == 0 for a, b in zip(inv, inv[1:]))
    H = build_group({"kind": "abelian", "orders": inv or [1]})
    profile = lambda K: sorted(K.element_order(x) for x in K.elements())
    assert profile(H) == profile(G)
