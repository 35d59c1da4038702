import itertools

import pytest

from conftest import GROUPS
from relcenter.classring import build_ring, fusion_table, render_entry, verify_ring_axioms
from relcenter.groups import conjugacy_classes, symmetric

NAMES = sorted(GROUPS)


def brute_pair_count(G, ca, cb, cs):
    return sum(1 for x in ca.members for y in cb.members if G.mul(x, y) in cs)


@pytest.mark.parametrize("name", NAMES)
def test_pair_counts_and_coefficients_match_brute_force(name):
    G = GROUPS[name]
    R = build_ring(G)
    cls = R.classes
    for a, b, s in itertools.product(range(R.rank), repeat=3):
        n = brute_pair_count(G, cls[a], cls[b], cls[s])
        assert R.pair_counts[a][b][s] == n
        assert n % cls[s].size == 0
        assert R.coefficients[a][b][s] == n // cls[s].size


@pytest.mark.parametrize("name", NAMES)
def test_ring_axioms(name):
    rep = verify_ring_axioms(build_ring(GROUPS[name]))
    assert rep.ok, rep.witnesses


def test_s3_transposition_square():
    S3 = symmetric(3)
    R = build_ring(S3)
    t = next(i for i, c in enumerate(R.classes) if c.size == 3)
    c = next(i for i, c in enumerate(R.classes) if c.size == 2)
    pairs = [(x, y) for x in R.classes[t].members for y in R.classes[t].members]
    assert len(pairs) == 9
    assert sum(1 for x, y in pairs if S3.mul(x, y) in R.classes[c]) == 6
    assert R.pair_counts[t][t][c] == 6
    assert R.coefficients[t][t][c] == 3
    assert R.coefficients[t][t][0] == 3
    assert R.multiply(t, t) == {0: 3, c: 3}


def test_abelian_ring_is_group_ring():
    G = GROUPS["Z6"]
    R = build_ring(G)
    for a, b in itertools.product(G.elements(), repeat=2):
        assert R.multiply(a, b) == {G.mul(a, b): 1}


def test_rendered_fusion_rule():
    lines = [render_entry(e) for e in fusion_table(symmetric(3))]
    assert "C[(1 2)] x C[(1 2)] = 3*C[()] + 3*C[(0 1 2)]" in lines


def test_trivial_group_ring():
    R = build_ring(GROUPS["Z1"])
    assert R.rank == 1 and R.coefficients == (((1,),),)
    assert len(conjugacy_classes(GROUPS["Z1"])) == 1
