"""The Drinfeld center of Rep(G), modelled as G-equivariant vector bundles over G.

An object is a G-graded space with isomorphisms ``pi[g, x]: V_{g^-1 x g} -> V_x``
satisfying ``pi[gh, x] = pi[g, x] pi[h, g^-1 x g]``.  Only rank-one bundles carry
explicit ``pi`` data (as phases); in general only graded dimensions are tracked.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Mapping, Sequence

import numpy as np

from .classring import build_ring
from .errors import DegreeRecoveryFailed, MalformedSpec, NotCharacter, NotClassConstant
from .groups import (
    ConjClass,
    FiniteGroup,
    GroupHom,
    Subgroup,
    centralizer,
    class_of,
    commutator_subgroup,
    conjugacy_classes,
    fibre_product,
    generated_subgroup,
)
from .phase import ZERO, Phase

DEGREE_TOLERANCE = 1e-6
CLUSTER_TOLERANCE = 1e-6
MAX_ATTEMPTS = 5


@dataclass(frozen=True)
class CenterComponent:
    """The summand of Z(Rep(G)) supported on one conjugacy class."""

    cls: ConjClass
    centralizer: Subgroup
    num_simples: int
    fpdim: int
    is_unit_copy: bool  # the identity class: the copy of Rep(G) itself

    @property
    def in_remainder(self) -> bool:
        return not self.is_unit_copy


def decompose_center(G: FiniteGroup) -> list[CenterComponent]:
    out = []
    for cls in conjugacy_classes(G):
        Z = centralizer(G, cls.representative)
        assert cls.size * Z.order == G.order
        H, _ = Z.as_group()
        out.append(CenterComponent(
            cls=cls,
            centralizer=Z,
            num_simples=len(conjugacy_classes(H)),
            fpdim=cls.size ** 2 * Z.order,
            is_unit_copy=cls.representative == 0,
        ))
    assert sum(c.fpdim for c in out) == G.order ** 2
    return out


# -- character degrees -------------------------------------------------------


def _class_matrices(H: FiniteGroup) -> tuple[list[np.ndarray], list[int]]:
    ring = build_ring(H)
    k = ring.rank
    mats = []
    for j in range(k):
        M = np.zeros((k, k))
        for b in range(k):
            for s in range(k):
                M[s, b] = ring.coefficients[j][b][s]
        mats.append(M)
    return mats, [cl.size for cl in ring.classes]


def irrep_degrees(H: FiniteGroup, seed: int = 0) -> list[int]:
    """Degrees of the irreducible complex characters of ``H``, sorted.

    The class sums span a commutative semisimple algebra; a generic combination
    of their multiplication matrices has simple spectrum, and its eigenvectors
    give the central characters ``w_i(C_j) = |C_j| chi_i(g_j) / d_i``.  From
    ``sum_j |w_i(C_j)|^2 / |C_j| = |H| / d_i^2`` each degree is recovered and
    rounded; the result is then checked exactly.
    """
    mats, sizes = _class_matrices(H)
    k = len(mats)
    n = H.order
    sizes_arr = np.array(sizes, dtype=float)
    for attempt in range(MAX_ATTEMPTS):
        rng = np.random.default_rng([seed, attempt])
        coeffs = rng.uniform(1.0, 2.0, size=k)
        combo = sum(c * M for c, M in zip(coeffs, mats))
        evals, evecs = np.linalg.eig(combo)
        if k > 1:
            gaps = np.abs(evals[:, None] - evals[None, :])
            np.fill_diagonal(gaps, np.inf)
            if gaps.min() < CLUSTER_TOLERANCE:
                continue
        degrees = []
        for i in range(k):
            v = evecs[:, i]
            norm = np.vdot(v, v)
            omega = np.array([np.vdot(v, M @ v) / norm for M in mats])
            total = float(np.sum(np.abs(omega) ** 2 / sizes_arr))
            d = math.sqrt(n / total)
            r = round(d)
            if abs(d - r) > DEGREE_TOLERANCE or r < 1:
                raise DegreeRecoveryFailed(f"degree estimate {d!r} is not within tolerance of an integer")
            degrees.append(r)
        break
    else:
        raise DegreeRecoveryFailed(f"eigenvalues stayed clustered after {MAX_ATTEMPTS} attempts")
    degrees.sort()
    abelianization = n // commutator_subgroup(H).order
    if len(degrees) != k:
        raise DegreeRecoveryFailed("wrong number of degrees")
    if sum(d * d for d in degrees) != n:
        raise DegreeRecoveryFailed(f"sum of squared degrees {degrees} is not {n}")
    if degrees.count(1) != abelianization:
        raise DegreeRecoveryFailed(f"{degrees.count(1)} linear characters, expected {abelianization}")
    return degrees


@dataclass(frozen=True)
class CenterSimple:
    cls: ConjClass
    irrep_degree: int
    irrep_label: int
    fpdim: int


def simple_objects(G: FiniteGroup, seed: int = 0) -> list[CenterSimple]:
    """One simple per (class, irreducible representation of the centralizer)."""
    out = []
    for cls in conjugacy_classes(G):
        H, _ = centralizer(G, cls.representative).as_group()
        for i, d in enumerate(irrep_degrees(H, seed)):
            out.append(CenterSimple(cls, d, i, cls.size * d))
    assert sum(s.fpdim ** 2 for s in out) == G.order ** 2
    return out


# -- one-dimensional characters ----------------------------------------------


def _greedy_generators(H: FiniteGroup) -> list[int]:
    gens: list[int] = []
    span = {0}
    for x in H.elements():
        if x not in span:
            gens.append(x)
            span = set(generated_subgroup(H, gens).members)
    return gens


def linear_characters(H: FiniteGroup) -> list[tuple[Phase, ...]]:
    """All homomorphisms ``H -> Q/Z``, as value tuples indexed by element, sorted."""
    gens = _greedy_generators(H)
    choices = [[Phase(j, H.element_order(s)) for j in range(H.element_order(s))] for s in gens]
    found = []
    for assignment in itertools.product(*choices):
        values: list[Phase | None] = [None] * H.order
        values[0] = ZERO
        queue = [0]
        ok = True
        while queue and ok:
            x = queue.pop()
            for s, v in zip(gens, assignment):
                y = H.mul(x, s)
                val = values[x] + v
                if values[y] is None:
                    values[y] = val
                    queue.append(y)
                elif values[y] != val:
                    ok = False
                    break
        if ok:
            found.append(tuple(values))
    assert len(found) == H.order // commutator_subgroup(H).order
    return sorted(found, key=lambda t: [(p.fraction) for p in t])


def centralizer_characters(G: FiniteGroup, a: int) -> list[dict[int, Phase]]:
    """Linear characters of ``Z(a)``, keyed by element index of ``G``."""
    H, inc = centralizer(G, a).as_group()
    return [{inc(h): chi[h] for h in H.elements()} for chi in linear_characters(H)]


# -- equivariant bundles -----------------------------------------------------


@dataclass(frozen=True)
class EquivariantBundle:
    group: FiniteGroup
    support: tuple[int, ...]
    fiber_dim: Mapping[int, int]
    pi: Mapping[tuple[int, int], Phase] | None = field(default=None, compare=False)


def transversal(G: FiniteGroup, a: int) -> dict[int, int]:
    """For each ``x`` conjugate to ``a`` the smallest ``t`` with ``t a t^-1 = x``."""
    out: dict[int, int] = {}
    for t in G.elements():
        out.setdefault(G.conj(t, a), t)
    return out


def induce_center_object(G: FiniteGroup, a: int, chi: Mapping[int, Phase],
                         reps: Mapping[int, int] | None = None) -> EquivariantBundle:
    """Rank-one bundle on the class of ``a`` induced from a character of ``Z(a)``.

    ``pi[g, x] = chi(t_x^-1 g t_y)`` with ``y = g^-1 x g``; ``reps`` overrides
    the default transversal.
    """
    a = G.check_index(a)
    Z = centralizer(G, a)
    if set(chi) != set(Z.members):
        raise MalformedSpec("character must be given on exactly the centralizer")
    for u in Z.members:
        for v in Z.members:
            if chi[G.mul(u, v)] != chi[u] + chi[v]:
                raise NotCharacter(
                    f"chi({G.labels[u]}*{G.labels[v]}) != chi({G.labels[u]}) + chi({G.labels[v]})",
                    (u, v),
                )
    t = dict(reps) if reps is not None else transversal(G, a)
    support = tuple(sorted(t))
    for x in support:
        assert G.conj(t[x], a) == x
    pi = {}
    for g in G.elements():
        ginv = G.inv(g)
        for x in support:
            y = G.conj(ginv, x)
            z = G.mul(G.mul(G.inv(t[x]), g), t[y])
            pi[(g, x)] = chi[z]
    return EquivariantBundle(G, support, {x: 1 for x in support}, pi)


@dataclass(frozen=True)
class BundleVerdict:
    ok: bool
    witness: tuple | None = None
    message: str = ""

    def __bool__(self) -> bool:
        return self.ok


def validate_bundle(B: EquivariantBundle) -> BundleVerdict:
    """Check conjugation-closed support and the cocycle rule for every ``g, h, x``."""
    G = B.group
    supp = set(B.support)
    for x in B.support:
        for g in G.elements():
            y = G.conj(g, x)
            if y not in supp:
                return BundleVerdict(False, (g, x), "support not closed under conjugation")
            if B.fiber_dim[y] != B.fiber_dim[x]:
                return BundleVerdict(False, (x, y), "fiber dimension not constant on a class")
    if B.pi is None:
        return BundleVerdict(True)
    pi = B.pi
    for x in B.support:
        if not pi[(0, x)].is_zero():
            return BundleVerdict(False, (0, 0, x), f"pi[e, {G.labels[x]}] is not the identity")
    for g in G.elements():
        ginv = G.inv(g)
        for x in B.support:
            y = G.conj(ginv, x)
            pgx = pi[(g, x)]
            for h in G.elements():
                if pi[(G.mul(g, h), x)] != pgx + pi[(h, y)]:
                    return BundleVerdict(
                        False, (g, h, x),
                        f"pi[{G.labels[g]}{G.labels[h]}, {G.labels[x]}] != "
                        f"pi[{G.labels[g]}, {G.labels[x]}] + pi[{G.labels[h]}, {G.labels[y]}]",
                    )
    return BundleVerdict(True)


# -- graded dimensions -------------------------------------------------------


def graded_convolution(A: Sequence[int], B: Sequence[int], G: FiniteGroup) -> tuple[int, ...]:
    """``result[g] = sum over xy = g of A[x] B[y]``."""
    if len(A) != G.order or len(B) != G.order:
        raise MalformedSpec("dimension vectors must be total on the group")
    out = [0] * G.order
    for x, ax in enumerate(A):
        if not ax:
            continue
        row = G.table[x]
        for y, by in enumerate(B):
            if by:
                out[row[y]] += ax * by
    return tuple(out)


def class_vector(G: FiniteGroup, a: int, dim: int = 1) -> tuple[int, ...]:
    members = set(class_of(G, a).members)
    return tuple(dim if x in members else 0 for x in G.elements())


def component_product_via_convolution(G: FiniteGroup, a: int, b: int,
                                      dimV: int = 1, dimW: int = 1) -> dict[int, int]:
    """Multiplicity of each component ``C_r`` in ``C_a ⊠ C_b``, read off graded dimensions.

    Keys are class representatives, in class order; zero multiplicities are kept.
    """
    conv = graded_convolution(class_vector(G, a, dimV), class_vector(G, b, dimW), G)
    out = {}
    for cls in conjugacy_classes(G):
        vals = {conv[x] for x in cls.members}
        if len(vals) != 1:
            raise NotClassConstant(f"convolution not constant on class of {G.labels[cls.representative]}")
        (v,) = vals
        m, r = divmod(v, dimV * dimW)
        assert r == 0
        out[cls.representative] = m
    na, nb = class_of(G, a).size, class_of(G, b).size
    total = sum(m * class_of(G, r).size * dimV * dimW for r, m in out.items())
    assert total == na * dimV * nb * dimW
    return out


@dataclass(frozen=True)
class FibreCheck:
    order: int
    expected: int
    base_fpdim: int  # FPdim(Rep(G)) = |G| for the common quotient G
    holds: bool


def rep_fibre_fpdim_check(pi1: GroupHom, pi2: GroupHom, phi: GroupHom) -> FibreCheck:
    F, _, _ = fibre_product(pi1, pi2, phi)
    q = pi1.target.order
    num = pi1.source.order * pi2.source.order
    return FibreCheck(F.order, num // q, q, F.order * q == num)
