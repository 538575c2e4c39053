"""K-theoretic invariants of spheres and of products of two spheres."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from .ideals import (
    INF,
    DegreePart,
    ideal_contains,
    ideal_I,
    ideal_index,
    ideal_part,
    ideal_subset,
)
from .ko_ring import GroupDescriptor, GroupKind, ko_group

# Reference values, row n mod 8, column m mod 8.  phi is recomputed from the
# ideals and only compared against this table.
PHI_REFERENCE: tuple[tuple[int | float, ...], ...] = (
    (1, 1, 1, 1, 1, 1, 1, 1),
    (1, 1, 1, INF, 1, 1, 1, INF),
    (1, 1, 1, 1, 1, 1, 2, 2),
    (1, INF, 1, 1, 1, INF, 2, 2),
    (1, 1, 1, 1, 1, 1, 1, 1),
    (1, 1, 1, INF, 1, 1, 1, INF),
    (1, 1, 2, 2, 1, 1, 1, 1),
    (1, INF, 2, 2, 1, INF, 1, 1),
)

# order of the reduced KO^0 of S^(n+m)
ORDER_REFERENCE: tuple[tuple[int | float, ...], ...] = (
    (INF, 2, 2, 1, INF, 1, 1, 1),
    (2, 2, 1, INF, 1, 1, 1, INF),
    (2, 1, INF, 1, 1, 1, INF, 2),
    (1, INF, 1, 1, 1, INF, 2, 2),
    (INF, 1, 1, 1, INF, 2, 2, 1),
    (1, 1, 1, INF, 2, 2, 1, INF),
    (1, 1, INF, 2, 2, 1, INF, 1),
    (1, INF, 2, 2, 1, INF, 1, 1),
)

Table = list[list]


def phi(n: int, m: int) -> int | float:
    """Index of the complexifiable classes; depends on n, m mod 8."""
    return ideal_index(ideal_I(n % 8), -(n + m))


def phi_table() -> Table:
    return [[phi(n, m) for m in range(8)] for n in range(8)]


def bott_order_table() -> Table:
    return [[ko_group(-(n + m)).kind.order for m in range(8)] for n in range(8)]


def table_mismatches(computed: Table, reference) -> list[tuple[int, int, Any, Any]]:
    return [
        (n, m, computed[n][m], reference[n][m])
        for n in range(8)
        for m in range(8)
        if computed[n][m] != reference[n][m]
    ]


def ko_sphere_reduced(p: int, n: int) -> DegreePart:
    """Complexifiable part of reduced KO^p(S^n), read in KO^(p-n)(pt)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return ideal_part(ideal_I(n), p - n)


def ku_sphere_reduced(p: int, n: int) -> DegreePart:
    """Complexifiable part of reduced KU^p(S^n), read in KU^(p-n)(pt)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if (p - n) % 2:
        return DegreePart(p - n, GroupKind.TRIVIAL, 0)
    return DegreePart(p - n, GroupKind.INFINITE_CYCLIC, 1 if n % 2 == 0 else 0)


def _ku_group(p: int) -> GroupDescriptor:
    if p % 2:
        return GroupDescriptor(GroupKind.TRIVIAL, "0")
    k = -p // 2
    return GroupDescriptor(GroupKind.INFINITE_CYCLIC, "1" if k == 0 else f"β^{k}")


def _ksp_group(p: int) -> GroupDescriptor:
    # reduced KSp^0(S^k) = KSp^(-k)(pt) = KO^(-k-4)(pt) * theta
    g = ko_group(p - 4)
    if g.kind is GroupKind.TRIVIAL:
        return g
    return GroupDescriptor(g.kind, ("" if g.generator == "1" else g.generator) + "θ")


FIELDS = ("R", "C", "H")


def subgroup_label(ambient: GroupKind, index: int | float) -> str:
    if index == 1:
        return "Full"
    if index == INF or ambient is GroupKind.ORDER_TWO:
        return "Zero"
    return f"IndexK({index})"


@dataclass(frozen=True)
class ProductKGroupReport:
    """Image of algebraic K_0 of S^n x S^m inside the topological group.

    The topological group splits as wedge + two factors; the factors are
    always hit completely, the wedge summand (the top sphere S^(n+m)) only
    up to ``wedge_index``.
    """

    field: str
    n: int
    m: int
    wedge_ambient: GroupDescriptor
    wedge_index: int | float
    factor_summands: tuple[GroupDescriptor, GroupDescriptor]

    @property
    def wedge_subgroup(self) -> str:
        return subgroup_label(self.wedge_ambient.kind, self.wedge_index)

    def to_json(self) -> dict:
        return {
            "field": self.field,
            "n": self.n,
            "m": self.m,
            "wedge": {
                "ambient": _group_json(self.wedge_ambient),
                "index": index_json(self.wedge_index),
                "subgroup": self.wedge_subgroup,
            },
            "factors": [
                {"ambient": _group_json(g), "index": 1, "subgroup": "Full"}
                for g in self.factor_summands
            ],
        }


def index_json(v: int | float) -> int | str:
    return "inf" if v == INF else int(v)


def _group_json(g: GroupDescriptor) -> dict:
    return {"kind": g.kind.value, "generator": g.generator}


def kgroups_product(n: int, m: int, field: str) -> ProductKGroupReport:
    if n < 1 or m < 1:
        raise ValueError("n and m must be positive")
    field = field.upper()
    if field == "C":
        ambient = _ku_group(-(n + m))
        both_odd = n % 2 == 1 and m % 2 == 1
        index = INF if both_odd else 1
        factors = (_ku_group(-n), _ku_group(-m))
    elif field == "R":
        ambient = ko_group(-(n + m))
        index = phi(n, m)
        factors = (ko_group(-n), ko_group(-m))
    elif field == "H":
        ambient = _ksp_group(-(n + m))
        index = phi(n, m + 4)
        factors = (_ksp_group(-n), _ksp_group(-m))
    else:
        raise ValueError(f"field must be one of R, C, H, got {field!r}")
    return ProductKGroupReport(field, n, m, ambient, index, factors)


def kr_obstruction(n: int, m: int) -> bool:
    """Whether I^(n+m) is contained in I^n.

    A regular map of degree one S^n x S^m -> S^(n+m) forces this containment,
    so ``False`` certifies that no such map exists.
    """
    if n < 1 or m < 1:
        raise ValueError("n and m must be positive")
    return ideal_subset(ideal_I(n + m), ideal_I(n))


def kr_obstruction_witness(n: int, m: int) -> str | None:
    """A generator of I^(n+m) outside I^n, if any."""
    top, low = ideal_I(n + m), ideal_I(n)
    for g in top.generators:
        if not ideal_contains(low, g):
            return f"{g} in I^{n + m} = {top} but not in I^{n} = {low}"
    return None
