"""The class algebra of Z[G] and the fusion rules of the components of Z(Rep(G))."""

from __future__ import annotations

from dataclasses import dataclass

from .groups import ConjClass, FiniteGroup, class_index, conjugacy_classes


@dataclass(frozen=True)
class ClassFusionRing:
    """Structure constants on the basis of conjugacy classes.

    ``pair_counts[a][b][s]`` counts pairs ``(x, y)`` in ``class a x class b``
    with ``xy`` in class ``s``; ``coefficients[a][b][s]`` is that count divided
    by ``|class s|``, the coefficient of the class sum ``s`` in the product of
    class sums ``a`` and ``b``.  Indices are positions in ``classes``.
    """

    group: FiniteGroup
    classes: tuple[ConjClass, ...]
    pair_counts: tuple[tuple[tuple[int, ...], ...], ...]
    coefficients: tuple[tuple[tuple[int, ...], ...], ...]

    @property
    def rank(self) -> int:
        return len(self.classes)

    def multiply(self, a: int, b: int) -> dict[int, int]:
        return {s: c for s, c in enumerate(self.coefficients[a][b]) if c}


def build_ring(G: FiniteGroup) -> ClassFusionRing:
    classes = tuple(conjugacy_classes(G))
    which = class_index(G)
    k = len(classes)
    counts = [[[0] * k for _ in range(k)] for _ in range(k)]
    for a, ca in enumerate(classes):
        for b, cb in enumerate(classes):
            row = counts[a][b]
            for x in ca.members:
                tx = G.table[x]
                for y in cb.members:
                    row[which[tx[y]]] += 1
    coeffs = []
    for a in range(k):
        coeffs.append([])
        for b in range(k):
            out = []
            for s, cs in enumerate(classes):
                q, r = divmod(counts[a][b][s], cs.size)
                assert r == 0, (a, b, s)
                out.append(q)
            coeffs[a].append(tuple(out))
    return ClassFusionRing(
        G,
        classes,
        tuple(tuple(tuple(row) for row in plane) for plane in counts),
        tuple(tuple(plane) for plane in coeffs),
    )


@dataclass
class RingAxiomReport:
    commutative: bool
    associative: bool
    unit: bool
    pair_count_total: bool
    divisible: bool
    witnesses: dict[str, tuple]

    @property
    def ok(self) -> bool:
        return self.commutative and self.associative and self.unit and self.pair_count_total and self.divisible


def verify_ring_axioms(R: ClassFusionRing) -> RingAxiomReport:
    k = R.rank
    c = R.coefficients
    sizes = [cl.size for cl in R.classes]
    wit: dict[str, tuple] = {}

    for a in range(k):
        for b in range(k):
            if c[a][b] != c[b][a]:
                wit.setdefault("commutative", (a, b))
            if sum(R.pair_counts[a][b]) != sizes[a] * sizes[b]:
                wit.setdefault("pair_count_total", (a, b))
            for s in range(k):
                if c[a][b][s] * sizes[s] != R.pair_counts[a][b][s]:
                    wit.setdefault("divisible", (a, b, s))
    for a in range(k):
        for b in range(k):
            for cc in range(k):
                for d in range(k):
                    lhs = sum(c[a][b][s] * c[s][cc][d] for s in range(k))
                    rhs = sum(c[b][cc][s] * c[a][s][d] for s in range(k))
                    if lhs != rhs:
                        wit.setdefault("associative", (a, b, cc, d))
    # class 0 is the identity class
    for b in range(k):
        unit_row = tuple(1 if s == b else 0 for s in range(k))
        if c[0][b] != unit_row or c[b][0] != unit_row:
            wit.setdefault("unit", (b,))
    return RingAxiomReport(
        commutative="commutative" not in wit,
        associative="associative" not in wit,
        unit="unit" not in wit,
        pair_count_total="pair_count_total" not in wit,
        divisible="divisible" not in wit,
        witnesses=wit,
    )


@dataclass(frozen=True)
class FusionEntry:
    left: str
    right: str
    terms: tuple[tuple[str, int], ...]  # (representative label, multiplicity)
    pair_counts: tuple[tuple[str, int], ...]


def fusion_table(G: FiniteGroup, ring: ClassFusionRing | None = None) -> list[FusionEntry]:
    """``C_a ⊠ C_b`` for every ordered pair of classes, zero terms omitted."""
    R = ring or build_ring(G)
    labels = [G.labels[cl.representative] for cl in R.classes]
    out = []
    for a in range(R.rank):
        for b in range(R.rank):
            terms = tuple((labels[s], m) for s, m in enumerate(R.coefficients[a][b]) if m)
            pcs = tuple((labels[s], m) for s, m in enumerate(R.pair_counts[a][b]))
            out.append(FusionEntry(labels[a], labels[b], terms, pcs))
    return out


def render_entry(e: FusionEntry) -> str:
    rhs = " + ".join(f"{m}*C[{r}]" if m != 1 else f"C[{r}]" for r, m in e.terms) or "0"
    return f"C[{e.left}] x C[{e.right}] = {rhs}"
