"""Homogeneous ideals of KO*(pt) and their degreewise parts.

Each coefficient group is cyclic, so the degree-p part of an ideal generated
by homogeneous g_1, ..., g_r is spanned by the products g_i * gen(p - |g_i|).
A subgroup of Z is recorded by its nonnegative generator d (d = 0 is the
zero subgroup), a subgroup of Z/2 by a bit.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import reduce
from typing import Iterable, NamedTuple

from .ko_ring import (
    ALPHA,
    ETA,
    ETA2,
    ONE,
    GroupKind,
    KOElement,
    ko_gen,
    ko_group,
    parse_element,
)

INF = math.inf


@dataclass(frozen=True)
class HomogeneousIdeal:
    generators: tuple[KOElement, ...] = ()

    def __post_init__(self):
        gens = []
        for g in self.generators:
            if not isinstance(g, KOElement):
                raise TypeError(f"generator {g!r} is not a KO element")
            if g.is_zero():
                continue
            if not g.is_homogeneous():
                raise ValueError(f"generator {g} is not homogeneous")
            gens.append(g)
        object.__setattr__(self, "generators", tuple(gens))

    @classmethod
    def of(cls, *gens: KOElement | int) -> "HomogeneousIdeal":
        return cls(tuple(KOElement.monomial(0, g) if isinstance(g, int) else g for g in gens))

    @classmethod
    def parse(cls, text: str) -> "HomogeneousIdeal":
        """Parse an ideal literal such as ``"(2,e2,a)"`` or ``"(0)"``."""
        body = text.strip()
        if not (body.startswith("(") and body.endswith(")")):
            raise ValueError(f"ideal literal must be parenthesised: {text!r}")
        items = [s for s in body[1:-1].split(",") if s.strip()]
        gens = []
        for item in items:
            x = parse_element(item)
            if not isinstance(x, KOElement):
                raise ValueError(f"{item!r} is not an element of KO*(pt)")
            gens.append(x)
        return cls(tuple(gens))

    def __str__(self) -> str:
        if not self.generators:
            return "(0)"
        return "(" + ", ".join(str(g) for g in self.generators) + ")"

    def is_zero(self) -> bool:
        return all(ideal_part(self, p).is_zero for p in range(0, -8, -1))

    def is_unit(self) -> bool:
        return ideal_part(self, 0).is_full


class DegreePart(NamedTuple):
    """Subgroup of KO^p(pt): ``gen`` is the gcd (Z) or bit (Z/2) spanning it."""

    degree: int
    ambient: GroupKind
    gen: int

    @property
    def is_zero(self) -> bool:
        return self.gen == 0

    @property
    def is_full(self) -> bool:
        return self.ambient is GroupKind.TRIVIAL or self.gen == 1

    @property
    def index(self) -> int | float:
        if self.ambient is GroupKind.TRIVIAL:
            return 1
        if self.ambient is GroupKind.ORDER_TWO:
            return 1 if self.gen else 2
        return self.gen if self.gen else INF

    @property
    def label(self) -> str:
        if self.gen == 0:
            return "Zero"
        if self.gen == 1:
            return "Full"
        return f"IndexK({self.gen})"

    def contains(self, coeff: int) -> bool:
        if self.ambient is GroupKind.TRIVIAL:
            return True
        if self.ambient is GroupKind.ORDER_TWO:
            return coeff % 2 == 0 or self.gen == 1
        if self.gen == 0:
            return coeff == 0
        return coeff % self.gen == 0


def ideal_part(J: HomogeneousIdeal, p: int) -> DegreePart:
    ambient = ko_group(p).kind
    if ambient is GroupKind.TRIVIAL:
        return DegreePart(p, ambient, 0)
    coeffs = []
    for g in J.generators:
        prod = g * ko_gen(p - g.degree)
        coeffs.append(prod.coeff(p))
    if ambient is GroupKind.ORDER_TWO:
        return DegreePart(p, ambient, int(any(c % 2 for c in coeffs)))
    return DegreePart(p, ambient, reduce(math.gcd, coeffs, 0))


def ideal_index(J: HomogeneousIdeal, p: int) -> int | float:
    return ideal_part(J, p).index


def ideal_contains(J: HomogeneousIdeal, x: KOElement) -> bool:
    if x.is_zero():
        return True
    if not x.is_homogeneous():
        raise ValueError(f"{x} is not homogeneous")
    p = x.degree
    return ideal_part(J, p).contains(x.coeff(p))


def ideal_subset(J: HomogeneousIdeal, K: HomogeneousIdeal) -> bool:
    """True iff J is contained in K (checked on the generators of J)."""
    return all(ideal_contains(K, g) for g in J.generators)


UNIT = HomogeneousIdeal((ONE,))
ZERO = HomogeneousIdeal()
ETA_IDEAL = HomogeneousIdeal((ETA,))
REAL_IMAGE = HomogeneousIdeal((ONE * 2, ETA2, ALPHA))


def ideal_I(n: int) -> HomogeneousIdeal:
    """Classes on the n-sphere that come from the complexification."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return (UNIT, ETA_IDEAL, REAL_IMAGE, ZERO)[n % 4]


class VanishingCheck(NamedTuple):
    zero_at_0_implies_in_eta: bool
    zero_at_m1_implies_in_real_image: bool
    zero_at_0_m2_implies_zero: bool
    zero_at_m4_m2_implies_zero: bool

    def all(self) -> bool:
        return all(self)


def vanishing_implications(J: HomogeneousIdeal) -> VanishingCheck:
    """Evaluate the four vanishing-implies-containment statements on J."""
    z0 = ideal_part(J, 0).is_zero
    z1 = ideal_part(J, -1).is_zero
    z2 = ideal_part(J, -2).is_zero
    z4 = ideal_part(J, -4).is_zero
    is_zero = J.is_zero()
    return VanishingCheck(
        not z0 or ideal_subset(J, ETA_IDEAL),
        not z1 or ideal_subset(J, REAL_IMAGE),
        not (z0 and z2) or is_zero,
        not (z4 and z2) or is_zero,
    )


def basis_elements(degrees: Iterable[int]) -> list[KOElement]:
    """Canonical generators in the given degrees, skipping trivial groups."""
    return [ko_gen(p) for p in degrees if ko_group(p).kind is not GroupKind.TRIVIAL]
