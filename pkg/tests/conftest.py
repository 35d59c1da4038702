import pytest

from relcenter.corpus import corpus_forms, corpus_groups

GROUPS = corpus_groups()
FORMS = corpus_forms()


@pytest.fixture(scope="session")
def groups():
    return GROUPS


@pytest.fixture(scope="session")
def forms():
    return FORMS


def brute_classes(G):
    """Orbits of conjugation computed straight from the definition."""
    seen, out = set(), []
    for a in G.elements():
        if a in seen:
            continue
        orbit = {G.mul(G.mul(g, a), G.inv(g)) for g in G.elements()}
        seen |= orbit
        out.append(frozenset(orbit))
    return out
