"""Built-in groups, forms and worked examples used by ``verify`` and the tests."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .groups import (
    FiniteGroup,
    GroupHom,
    build_group,
    cyclic,
    generated_subgroup,
    quotient,
    symmetric,
)
from .phase import Phase
from .pointed import PointedBraidedCategory
from .premetric import PreMetricGroup, product_premetric

GROUP_RECORDS: dict[str, dict] = {
    "Z1": {"kind": "named", "family": "cyclic", "parameter": 1},
    "Z2": {"kind": "named", "family": "cyclic", "parameter": 2},
    "Z4": {"kind": "named", "family": "cyclic", "parameter": 4},
    "Z2xZ2": {"kind": "abelian", "orders": [2, 2]},
    "Z6": {"kind": "named", "family": "cyclic", "parameter": 6},
    "S3": {"kind": "named", "family": "symmetric", "parameter": 3},
    "D4": {"kind": "named", "family": "dihedral", "parameter": 4},
    "Q8": {"kind": "named", "family": "quaternion", "parameter": 8},
    "A4": {"kind": "named", "family": "alternating", "parameter": 4},
    "S4": {"kind": "named", "family": "symmetric", "parameter": 4},
}


def corpus_groups() -> dict[str, FiniteGroup]:
    return {name: build_group(dict(rec, name=name)) for name, rec in GROUP_RECORDS.items()}


def _coords(orders: list[int], i: int) -> tuple[int, ...]:
    out = []
    for d in reversed(orders):
        out.append(i % d)
        i //= d
    return tuple(reversed(out))


def _form(orders: list[int], fn: Callable[..., Phase]) -> PreMetricGroup:
    G = build_group({"kind": "abelian", "orders": orders})
    return PreMetricGroup.from_function(G, lambda i: fn(*_coords(orders, i)))


# name -> (invariant factors, q as a function of coordinates)
FORM_DEFINITIONS: dict[str, tuple[list[int], Callable[..., Phase]]] = {
    "Z1/zero": ([1], lambda x: Phase(0)),
    "Z2/zero": ([2], lambda x: Phase(0)),
    "Z2/x^2/4": ([2], lambda x: Phase(x * x, 4)),
    "Z2/3x^2/4": ([2], lambda x: Phase(3 * x * x, 4)),
    "Z2/x^2/2": ([2], lambda x: Phase(x * x, 2)),
    "Z3/x^2/3": ([3], lambda x: Phase(x * x, 3)),
    "Z4/x^2/8": ([4], lambda x: Phase(x * x, 8)),
    "Z4/-x^2/8": ([4], lambda x: Phase(-x * x, 8)),
    "Z4/x^2/4": ([4], lambda x: Phase(x * x, 4)),
    "Z4/x^2/2": ([4], lambda x: Phase(x * x, 2)),
    "Z6/x^2/12": ([6], lambda x: Phase(x * x, 12)),
    "Z6/x^2/3": ([6], lambda x: Phase(x * x, 3)),
    "Z2xZ2/zero": ([2, 2], lambda a, b: Phase(0)),
    "Z2xZ2/a/2": ([2, 2], lambda a, b: Phase(a, 2)),
    "Z2xZ2/ab/2": ([2, 2], lambda a, b: Phase(a * b, 2)),
    "Z2xZ2/(a^2+ab+b^2)/2": ([2, 2], lambda a, b: Phase(a * a + a * b + b * b, 2)),
    "Z2xZ2/(a^2+b^2)/4": ([2, 2], lambda a, b: Phase(a * a + b * b, 4)),
    "Z2xZ4/(a^2/4+b^2/8)": ([2, 4], lambda a, b: Phase(2 * a * a + b * b, 8)),
}


def corpus_forms() -> dict[str, PreMetricGroup]:
    return {name: _form(orders, fn) for name, (orders, fn) in FORM_DEFINITIONS.items()}


# -- worked examples ---------------------------------------------------------


@dataclass(frozen=True)
class TensorExample:
    C1: PointedBraidedCategory
    C2: PointedBraidedCategory
    D: PreMetricGroup
    iota1: GroupHom
    iota2: GroupHom


def _first_coordinate_z2(target: PreMetricGroup) -> GroupHom:
    D = cyclic(2)
    return GroupHom(D, target.group, (0, target.group.index("(1,0)")))


def klein_tensor_example() -> TensorExample:
    """C(Z2xZ2, a/2) twice, over C(Z2, 1/2) embedded in the first coordinates."""
    V = corpus_forms()["Z2xZ2/a/2"]
    D = PreMetricGroup.from_values(cyclic(2), ["0", "1/2"])
    iota = _first_coordinate_z2(V)
    C = PointedBraidedCategory(V)
    return TensorExample(C, C, D, iota, iota)


def failing_descent_example() -> TensorExample:
    """C(Z4, x^2/8) twice over the order-2 subgroup, which is not in the radical."""
    M = corpus_forms()["Z4/x^2/8"]
    D = PreMetricGroup.from_values(cyclic(2), ["0", "1/2"])
    iota = GroupHom(D.group, M.group, (0, 2))
    C = PointedBraidedCategory(M)
    return TensorExample(C, C, D, iota, iota)


def klein_descent_input() -> tuple[PreMetricGroup, TensorExample]:
    ex = klein_tensor_example()
    return product_premetric(ex.C1.data, ex.C2.data), ex


@dataclass(frozen=True)
class FibreExample:
    name: str
    pi1: GroupHom
    pi2: GroupHom
    phi: GroupHom
    expected_order: int


def fibre_examples() -> list[FibreExample]:
    Z4, Z2 = cyclic(4), cyclic(2)
    mod2 = GroupHom(Z4, Z2, (0, 1, 0, 1))
    S3 = symmetric(3)
    A3 = generated_subgroup(S3, [S3.index("(0 1 2)")])
    Q, sign = quotient(S3, A3)
    trivial = cyclic(1)
    to_trivial = GroupHom.trivial(S3, trivial)
    z4_trivial = GroupHom.trivial(Z4, trivial)
    return [
        FibreExample("Z4 x_Z2 Z4", mod2, mod2, GroupHom.identity(Z2), 8),
        FibreExample("S3 x_Z2 S3", sign, sign, GroupHom.identity(Q), 18),
        FibreExample("S3 x_1 Z4", to_trivial, z4_trivial, GroupHom.identity(trivial), 24),
    ]
