"""Finite groups as explicit multiplication tables.

Elements are the integers ``0 .. order-1`` with ``0`` the identity; labels are
only for display and for reading user input.  Everything here is brute force
and meant for groups of a few hundred elements at most.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Iterable, Sequence

import numpy as np

from .errors import (
    GroupTooLarge,
    IndexOutOfRange,
    MalformedSpec,
    NoIdentity,
    NotAbelian,
    NotAssociative,
    NotHomomorphism,
    NotIsomorphism,
    NotNormal,
    NotSubgroup,
    NotSurjective,
)

DEFAULT_MAX_ORDER = 512


@dataclass(frozen=True)
class FiniteGroup:
    """A group given by its Cayley table.

    ``table[a][b]`` is the index of ``a*b``.  The constructor only checks the
    cheap things (shape, identity at 0, inverses); use :func:`validate_table` or
    :func:`build_group` for untrusted input.
    """

    labels: tuple[str, ...]
    table: tuple[tuple[int, ...], ...]
    name: str = field(default="", compare=False)

    def __post_init__(self):
        n = len(self.labels)
        if n == 0:
            raise MalformedSpec("a group needs at least one element")
        if len(self.table) != n or any(len(row) != n for row in self.table):
            raise MalformedSpec(f"table is not {n}x{n}")
        if self.table[0] != tuple(range(n)) or any(row[0] != i for i, row in enumerate(self.table)):
            raise NoIdentity("index 0 is not a two-sided identity")
        if len(set(self.labels)) != n:
            raise MalformedSpec("element labels are not distinct")

    @property
    def order(self) -> int:
        return len(self.labels)

    def __len__(self) -> int:
        return len(self.labels)

    def __repr__(self) -> str:
        return f"FiniteGroup({self.name or '?'}, order={self.order})"

    @cached_property
    def inverses(self) -> tuple[int, ...]:
        inv = []
        for a, row in enumerate(self.table):
            try:
                inv.append(row.index(0))
            except ValueError:
                raise NoIdentity(f"element {self.labels[a]!r} has no inverse") from None
        return tuple(inv)

    @cached_property
    def array(self) -> np.ndarray:
        arr = np.array(self.table, dtype=np.int32)
        arr.flags.writeable = False
        return arr

    @cached_property
    def _label_index(self) -> dict[str, int]:
        return {lab: i for i, lab in enumerate(self.labels)}

    def check_index(self, a: int) -> int:
        if not isinstance(a, (int, np.integer)) or not 0 <= a < self.order:
            raise IndexOutOfRange(f"element index {a!r} out of range for order {self.order}", a)
        return int(a)

    def index(self, label: str) -> int:
        try:
            return self._label_index[label]
        except KeyError:
            raise MalformedSpec(f"unknown element label {label!r}") from None

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        return self.inverses[a]

    def conj(self, g: int, x: int) -> int:
        """``g x g^-1``."""
        return self.table[self.table[g][x]][self.inverses[g]]

    def power(self, a: int, n: int) -> int:
        if n < 0:
            a, n = self.inverses[a], -n
        result = 0
        for _ in range(n):
            result = self.table[result][a]
        return result

    def element_order(self, a: int) -> int:
        k, x = 1, a
        while x != 0:
            x = self.table[x][a]
            k += 1
        return k

    @cached_property
    def is_abelian(self) -> bool:
        arr = self.array
        return bool((arr == arr.T).all())

    def elements(self) -> range:
        return range(self.order)


def validate_table(labels: Sequence[str], table: Sequence[Sequence[int]], name: str = "") -> FiniteGroup:
    """Exhaustively check the group axioms and return the group.

    The identity is located and moved to index 0 if necessary.
    """
    n = len(labels)
    if n == 0 or len(table) != n or any(len(row) != n for row in table):
        raise MalformedSpec("multiplication table is not square")
    arr = np.asarray(table, dtype=np.int64)
    if arr.min() < 0 or arr.max() >= n:
        raise MalformedSpec("table entries out of range")
    target = np.arange(n)
    for a in range(n):
        # (ab)c versus a(bc) for all b, c at once
        bad = np.argwhere(arr[arr[a]] != arr[a][arr])
        if len(bad):
            b, c = (int(v) for v in bad[0])
            raise NotAssociative(
                f"({labels[a]}*{labels[b]})*{labels[c]} != {labels[a]}*({labels[b]}*{labels[c]})",
                (a, b, c),
            )
    idents = [e for e in range(n) if (arr[e] == target).all() and (arr[:, e] == target).all()]
    if not idents:
        raise NoIdentity("no two-sided identity")
    for i in range(n):
        if not (np.sort(arr[i]) == target).all():
            raise MalformedSpec(f"row {labels[i]!r} is not a permutation", i)
        if not (np.sort(arr[:, i]) == target).all():
            raise MalformedSpec(f"column {labels[i]!r} is not a permutation", i)
    e = idents[0]
    order = [e] + [i for i in range(n) if i != e]
    pos = {old: new for new, old in enumerate(order)}
    new_table = tuple(tuple(pos[int(arr[a, b])] for b in order) for a in order)
    return FiniteGroup(tuple(str(labels[i]) for i in order), new_table, name)


def _from_mul(elements: Sequence, mul: Callable, label: Callable = str, name: str = "") -> FiniteGroup:
    """Tabulate ``mul`` over ``elements`` (``elements[0]`` must be the identity)."""
    pos = {x: i for i, x in enumerate(elements)}
    table = tuple(tuple(pos[mul(x, y)] for y in elements) for x in elements)
    return FiniteGroup(tuple(label(x) for x in elements), table, name)


# -- named families ----------------------------------------------------------


def cyclic(n: int) -> FiniteGroup:
    if n < 1:
        raise MalformedSpec("cyclic group order must be positive")
    return _from_mul(range(n), lambda a, b: (a + b) % n, name=f"Z{n}")


def abelian(orders: Sequence[int]) -> FiniteGroup:
    """Product of cyclic groups, elements are tuples in lexicographic order."""
    orders = [int(d) for d in orders]
    if any(d < 1 for d in orders):
        raise MalformedSpec("abelian factor orders must be positive")
    if len(orders) == 1:
        return cyclic(orders[0])
    elements = list(itertools.product(*(range(d) for d in orders)))
    name = "x".join(f"Z{d}" for d in orders) or "Z1"
    return _from_mul(
        elements,
        lambda a, b: tuple((x + y) % d for x, y, d in zip(a, b, orders)),
        label=lambda t: "(" + ",".join(map(str, t)) + ")",
        name=name,
    )


def perm_label(p: Sequence[int]) -> str:
    """Cycle notation, fixed points omitted, ``()`` for the identity."""
    seen, cycles = set(), []
    for i in range(len(p)):
        if i in seen or p[i] == i:
            continue
        cyc, j = [], i
        while j not in seen:
            seen.add(j)
            cyc.append(j)
            j = p[j]
        cycles.append("(" + " ".join(map(str, cyc)) + ")")
    return "".join(cycles) or "()"


def _compose(p: tuple, q: tuple) -> tuple:
    # (p*q)(i) = p(q(i)): apply q first
    return tuple(p[i] for i in q)


def from_permutations(degree: int, generators: Iterable[Sequence[int]], name: str = "",
                      max_order: int = DEFAULT_MAX_ORDER) -> FiniteGroup:
    """Close a set of permutations of ``0..degree-1`` under composition."""
    gens = []
    for g in generators:
        g = tuple(int(x) for x in g)
        if sorted(g) != list(range(degree)):
            raise MalformedSpec(f"generator {list(g)} is not a permutation of 0..{degree - 1}")
        gens.append(g)
    ident = tuple(range(degree))
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = _compose(g, x)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
                    if len(seen) > max_order:
                        raise GroupTooLarge(f"permutation group exceeds max order {max_order}")
        frontier = nxt
    elements = sorted(seen)  # identity is lexicographically first
    return _from_mul(elements, _compose, label=perm_label, name=name)


def symmetric(n: int) -> FiniteGroup:
    if n < 1:
        raise MalformedSpec("symmetric degree must be positive")
    elements = list(itertools.permutations(range(n)))
    return _from_mul(elements, _compose, label=perm_label, name=f"S{n}")


def _is_even(p: Sequence[int]) -> bool:
    inversions = sum(1 for i in range(len(p)) for j in range(i + 1, len(p)) if p[i] > p[j])
    return inversions % 2 == 0


def alternating(n: int) -> FiniteGroup:
    if n < 1:
        raise MalformedSpec("alternating degree must be positive")
    elements = [p for p in itertools.permutations(range(n)) if _is_even(p)]
    return _from_mul(elements, _compose, label=perm_label, name=f"A{n}")


def dihedral(n: int) -> FiniteGroup:
    """Symmetries of the regular n-gon, order 2n; elements ``r^k s^j``."""
    if n < 1:
        raise MalformedSpec("dihedral parameter must be positive")
    elements = [(k, j) for j in range(2) for k in range(n)]

    def mul(x, y):
        (k, j), (l, i) = x, y
        return ((k + (l if j == 0 else -l)) % n, (j + i) % 2)

    def label(x):
        k, j = x
        return ("e" if k == 0 else f"r{k}") if j == 0 else ("s" if k == 0 else f"r{k}s")

    return _from_mul(elements, mul, label=label, name=f"D{n}")


def quaternion(order: int = 8) -> FiniteGroup:
    """Dicyclic group of order 4m (the quaternion group when order is 8)."""
    if order < 4 or order % 4:
        raise MalformedSpec("quaternion/dicyclic order must be a multiple of 4, at least 4")
    m = order // 4
    elements = [(k, j) for j in range(2) for k in range(2 * m)]

    def mul(x, y):
        (k, j), (l, i) = x, y
        if j == 0:
            return ((k + l) % (2 * m), i)
        if i == 0:
            return ((k - l) % (2 * m), 1)
        return ((k - l + m) % (2 * m), 0)

    if m == 2:
        names = {(0, 0): "1", (1, 0): "i", (2, 0): "-1", (3, 0): "-i",
                 (0, 1): "j", (1, 1): "k", (2, 1): "-j", (3, 1): "-k"}
        label = names.__getitem__
    else:
        def label(x):
            k, j = x
            return (f"a{k}" if k else "e") if j == 0 else f"a{k}x"
    return _from_mul(elements, mul, label=label, name="Q8" if m == 2 else f"Dic{m}")


NAMED_FAMILIES: dict[str, Callable[[int], FiniteGroup]] = {
    "cyclic": cyclic,
    "symmetric": symmetric,
    "alternating": alternating,
    "dihedral": dihedral,
    "quaternion": quaternion,
}


# -- subgroups and homomorphisms ---------------------------------------------


@dataclass(frozen=True)
class Subgroup:
    parent: FiniteGroup
    members: tuple[int, ...]

    def __post_init__(self):
        members = tuple(sorted(set(int(m) for m in self.members)))
        object.__setattr__(self, "members", members)
        G = self.parent
        for m in members:
            G.check_index(m)
        s = set(members)
        if 0 not in s:
            raise NotSubgroup("subset does not contain the identity")
        for a in members:
            if G.inv(a) not in s:
                raise NotSubgroup(f"not closed under inverses at {G.labels[a]}", a)
            for b in members:
                if G.mul(a, b) not in s:
                    raise NotSubgroup(f"not closed: {G.labels[a]}*{G.labels[b]}", (a, b))

    @property
    def order(self) -> int:
        return len(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, a) -> bool:
        return a in self._set

    def __iter__(self):
        return iter(self.members)

    @cached_property
    def _set(self) -> frozenset[int]:
        return frozenset(self.members)

    def is_normal(self) -> bool:
        G = self.parent
        return all(G.conj(g, n) in self._set for g in G.elements() for n in self.members)

    def as_group(self, name: str = "") -> tuple[FiniteGroup, GroupHom]:
        """The subgroup as a standalone group, plus its inclusion into the parent."""
        G = self.parent
        pos = {m: i for i, m in enumerate(self.members)}
        table = tuple(tuple(pos[G.mul(a, b)] for b in self.members) for a in self.members)
        H = FiniteGroup(tuple(G.labels[m] for m in self.members), table, name)
        return H, GroupHom(H, G, self.members)


def generated_subgroup(G: FiniteGroup, gens: Iterable[int]) -> Subgroup:
    members = {0}
    frontier = [0]
    gens = [G.check_index(g) for g in gens]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = G.mul(x, g)
                if y not in members:
                    members.add(y)
                    nxt.append(y)
        frontier = nxt
    return Subgroup(G, tuple(members))


def trivial_subgroup(G: FiniteGroup) -> Subgroup:
    return Subgroup(G, (0,))


def whole_group(G: FiniteGroup) -> Subgroup:
    return Subgroup(G, tuple(G.elements()))


@dataclass(frozen=True)
class GroupHom:
    source: FiniteGroup
    target: FiniteGroup
    image: tuple[int, ...]

    def __post_init__(self):
        img = tuple(int(x) for x in self.image)
        object.__setattr__(self, "image", img)
        S, T = self.source, self.target
        if len(img) != S.order:
            raise NotHomomorphism("image map is not total on the source")
        for x in img:
            T.check_index(x)
        if img[0] != 0:
            raise NotHomomorphism("identity is not sent to the identity", 0)
        for a in S.elements():
            for b in S.elements():
                if img[S.mul(a, b)] != T.mul(img[a], img[b]):
                    raise NotHomomorphism(
                        f"f({S.labels[a]}*{S.labels[b]}) != f({S.labels[a]})f({S.labels[b]})", (a, b)
                    )

    def __call__(self, a: int) -> int:
        return self.image[a]

    @classmethod
    def from_labels(cls, source: FiniteGroup, target: FiniteGroup, mapping: dict[str, str]) -> GroupHom:
        missing = [lab for lab in source.labels if lab not in mapping]
        if missing:
            raise MalformedSpec(f"morphism map is missing source labels {missing}")
        extra = set(mapping) - set(source.labels)
        if extra:
            raise MalformedSpec(f"morphism map has unknown source labels {sorted(extra)}")
        return cls(source, target, tuple(target.index(mapping[lab]) for lab in source.labels))

    @classmethod
    def trivial(cls, source: FiniteGroup, target: FiniteGroup) -> GroupHom:
        return cls(source, target, (0,) * source.order)

    @classmethod
    def identity(cls, G: FiniteGroup) -> GroupHom:
        return cls(G, G, tuple(G.elements()))

    def is_injective(self) -> bool:
        return len(set(self.image)) == self.source.order

    def is_surjective(self) -> bool:
        return len(set(self.image)) == self.target.order

    def kernel(self) -> Subgroup:
        return Subgroup(self.source, tuple(a for a, x in enumerate(self.image) if x == 0))

    def image_subgroup(self) -> Subgroup:
        return Subgroup(self.target, tuple(set(self.image)))

    def then(self, other: GroupHom) -> GroupHom:
        """``other ∘ self``."""
        if other.source != self.target:
            raise NotHomomorphism("cannot compose: codomain and domain differ")
        return GroupHom(self.source, other.target, tuple(other.image[x] for x in self.image))


# -- conjugacy ---------------------------------------------------------------


@dataclass(frozen=True)
class ConjClass:
    representative: int
    members: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, a) -> bool:
        return a in self.members


def conjugacy_classes(G: FiniteGroup) -> list[ConjClass]:
    """Classes ordered by (minimal) representative index; identity class first."""
    return list(_classes(G))


def _classes(G: FiniteGroup) -> tuple[ConjClass, ...]:
    cached = G.__dict__.get("_conj_classes")
    if cached is not None:
        return cached
    seen = [False] * G.order
    out = []
    for a in G.elements():
        if seen[a]:
            continue
        orbit = sorted({G.conj(g, a) for g in G.elements()})
        for x in orbit:
            seen[x] = True
        out.append(ConjClass(orbit[0], tuple(orbit)))
    result = tuple(out)
    G.__dict__["_conj_classes"] = result
    return result


def class_index(G: FiniteGroup) -> tuple[int, ...]:
    """Map element index -> position of its class in :func:`conjugacy_classes`."""
    idx = [0] * G.order
    for k, cls in enumerate(_classes(G)):
        for x in cls.members:
            idx[x] = k
    return tuple(idx)


def class_of(G: FiniteGroup, a: int) -> ConjClass:
    G.check_index(a)
    return _classes(G)[class_index(G)[a]]


def centralizer(G: FiniteGroup, a: int) -> Subgroup:
    a = G.check_index(a)
    return Subgroup(G, tuple(g for g in G.elements() if G.mul(g, a) == G.mul(a, g)))


def center_of_group(G: FiniteGroup) -> Subgroup:
    arr = G.array
    return Subgroup(G, tuple(int(z) for z in range(G.order) if (arr[z] == arr[:, z]).all()))


def commutator_subgroup(G: FiniteGroup) -> Subgroup:
    comms = {G.mul(G.mul(a, b), G.mul(G.inv(a), G.inv(b))) for a in G.elements() for b in G.elements()}
    return generated_subgroup(G, sorted(comms))


# -- constructions -----------------------------------------------------------


def coset_label(members: Iterable[int]) -> str:
    return "{" + ",".join(map(str, sorted(members))) + "}"


def quotient(G: FiniteGroup, N: Subgroup) -> tuple[FiniteGroup, GroupHom]:
    """``G/N`` with cosets labeled by their sorted member indices."""
    if N.parent != G:
        raise NotSubgroup("subgroup belongs to a different group")
    if not N.is_normal():
        for g in G.elements():
            for n in N.members:
                if G.conj(g, n) not in N:
                    raise NotNormal(
                        f"{G.labels[g]} conjugates {G.labels[n]} out of the subgroup", (g, n)
                    )
    cosets: list[tuple[int, ...]] = []
    which = [-1] * G.order
    for g in G.elements():
        if which[g] >= 0:
            continue
        coset = tuple(sorted(G.mul(g, n) for n in N.members))
        for x in coset:
            which[x] = len(cosets)
        cosets.append(coset)
    table = tuple(
        tuple(which[G.mul(c[0], d[0])] for d in cosets) for c in cosets
    )
    Q = FiniteGroup(tuple(coset_label(c) for c in cosets), table,
                    f"{G.name}/{N.order}" if G.name else "")
    return Q, GroupHom(G, Q, tuple(which))


def direct_product(G: FiniteGroup, H: FiniteGroup) -> tuple[FiniteGroup, GroupHom, GroupHom]:
    """``G x H`` with element ``(g, h)`` at index ``g*|H| + h``."""
    n, m = G.order, H.order
    table = tuple(
        tuple(G.mul(g1, g2) * m + H.mul(h1, h2) for g2 in range(n) for h2 in range(m))
        for g1 in range(n) for h1 in range(m)
    )
    labels = tuple(f"({a},{b})" for a in G.labels for b in H.labels)
    name = f"{G.name}x{H.name}" if G.name and H.name else ""
    P = FiniteGroup(labels, table, name)
    inc1 = GroupHom(G, P, tuple(g * m for g in range(n)))
    inc2 = GroupHom(H, P, tuple(range(m)))
    return P, inc1, inc2


def product_index(H: FiniteGroup, g: int, h: int) -> int:
    """Index of ``(g, h)`` in ``direct_product(G, H)``."""
    return g * H.order + h


def fibre_product(pi1: GroupHom, pi2: GroupHom, phi: GroupHom) -> tuple[FiniteGroup, GroupHom, GroupHom]:
    """Pullback of ``pi1: G1 -> Q1`` and ``phi ∘ pi2: G2 -> Q1``.

    Returns the group of pairs ``(g, h)`` with ``pi1(g) == phi(pi2(h))`` and the
    two coordinate projections.
    """
    if not pi1.is_surjective():
        raise NotSurjective("pi1 is not surjective")
    if not pi2.is_surjective():
        raise NotSurjective("pi2 is not surjective")
    if phi.source != pi2.target or phi.target != pi1.target:
        raise NotIsomorphism("phi must map the target of pi2 to the target of pi1")
    if not (phi.is_injective() and phi.is_surjective()):
        raise NotIsomorphism("phi is not bijective")
    G1, G2 = pi1.source, pi2.source
    P, _, _ = direct_product(G1, G2)
    m = G2.order
    members = tuple(
        g * m + h for g in G1.elements() for h in G2.elements()
        if pi1(g) == phi(pi2(h))
    )
    F, inc = Subgroup(P, members).as_group()
    theta1 = GroupHom(F, G1, tuple(p // m for p in inc.image))
    theta2 = GroupHom(F, G2, tuple(p % m for p in inc.image))
    assert all(pi1(theta1(x)) == phi(pi2(theta2(x))) for x in F.elements())
    return F, theta1, theta2


# -- abelian invariants ------------------------------------------------------


def _invariant_chains(n: int, smallest: int = 2) -> list[list[int]]:
    """All lists d1 | d2 | ... | dk with d1 >= smallest and product n."""
    if n == 1:
        return [[]]
    out = []
    for d in range(smallest, n + 1):
        if n % d:
            continue
        for rest in _invariant_chains(n // d, d):
            if not rest or rest[0] % d == 0:
                out.append([d] + rest)
    return out


def _order_profile(G: FiniteGroup) -> dict[int, int]:
    n = G.order
    orders = [G.element_order(a) for a in G.elements()]
    return {m: sum(1 for o in orders if m % o == 0) for m in range(1, n + 1) if n % m == 0}


def abelian_invariants(G: FiniteGroup) -> list[int]:
    """Invariant factors ``d1 | d2 | ... | dk`` of an abelian group.

    Every divisor chain with product ``|G|`` is tried; two finite abelian groups
    are isomorphic exactly when, for each ``m``, they have the same number of
    solutions of ``m x = 0``.
    """
    if not G.is_abelian:
        raise NotAbelian(f"{G.name or 'group'} is not abelian")
    target = _order_profile(G)
    matches = []
    for chain in _invariant_chains(G.order):
        profile = {m: math.prod(math.gcd(m, d) for d in chain) for m in target}
        if profile == target:
            matches.append(chain)
    assert len(matches) == 1, matches
    return matches[0]


# -- entry point for descriptions --------------------------------------------

_KIND_FIELDS = {
    "table": {"elements", "table"},
    "permutation": {"degree", "generators"},
    "abelian": {"orders"},
    "named": {"family", "parameter"},
}


def build_group(spec: dict, max_order: int = DEFAULT_MAX_ORDER) -> FiniteGroup:
    """Build and validate a group from a description record.

    ``spec["kind"]`` is one of ``table``, ``permutation``, ``abelian``, ``named``.
    Optional ``name`` is accepted everywhere; other unknown fields are rejected.
    """
    if not isinstance(spec, dict):
        raise MalformedSpec("group description must be a mapping")
    kind = spec.get("kind")
    if kind not in _KIND_FIELDS:
        raise MalformedSpec(f"unknown group kind {kind!r}")
    allowed = _KIND_FIELDS[kind] | {"kind", "name"}
    extra = set(spec) - allowed
    if extra:
        raise MalformedSpec(f"unknown fields for kind {kind!r}: {sorted(extra)}")
    required = _KIND_FIELDS[kind] - ({"parameter"} if kind == "named" else set())
    missing = required - set(spec)
    if missing:
        raise MalformedSpec(f"missing fields for kind {kind!r}: {sorted(missing)}")
    name = str(spec.get("name", ""))

    if kind == "table":
        elements = [str(e) for e in spec["elements"]]
        if len(elements) > max_order:
            raise GroupTooLarge(f"order {len(elements)} exceeds max order {max_order}")
        if len(set(elements)) != len(elements):
            raise MalformedSpec("element labels are not distinct")
        pos = {e: i for i, e in enumerate(elements)}
        rows = spec["table"]
        if not isinstance(rows, list) or len(rows) != len(elements) or any(
            not isinstance(r, list) or len(r) != len(elements) for r in rows
        ):
            raise MalformedSpec("multiplication table is not square")
        try:
            table = [[pos[str(x)] for x in row] for row in rows]
        except KeyError as exc:
            raise MalformedSpec(f"table entry {exc.args[0]!r} is not an element") from None
        return validate_table(elements, table, name)

    if kind == "permutation":
        degree = int(spec["degree"])
        if degree < 1:
            raise MalformedSpec("degree must be positive")
        return from_permutations(degree, spec["generators"], name, max_order)

    if kind == "abelian":
        orders = spec["orders"]
        if not isinstance(orders, list):
            raise MalformedSpec("'orders' must be a list of positive integers")
        if math.prod(int(d) for d in orders) > max_order:
            raise GroupTooLarge(f"order exceeds max order {max_order}")
        G = abelian(orders)
    else:
        family = spec["family"]
        if family not in NAMED_FAMILIES:
            raise MalformedSpec(f"unknown family {family!r}; expected one of {sorted(NAMED_FAMILIES)}")
        param = spec.get("parameter", 8 if family == "quaternion" else None)
        if param is None:
            raise MalformedSpec(f"family {family!r} needs a parameter")
        param = int(param)
        size = {"cyclic": param, "symmetric": math.factorial(param) if param > 0 else 0,
                "alternating": max(1, math.factorial(param) // 2) if param > 0 else 0,
                "dihedral": 2 * param, "quaternion": param}[family]
        if size > max_order:
            raise GroupTooLarge(f"{family}({param}) has order {size} > max order {max_order}")
        G = NAMED_FAMILIES[family](param)
    if name:
        G = FiniteGroup(G.labels, G.table, name)
    return G
