"""Coefficient rings of KO, KU, KSp and KR theory evaluated on a point.

KO*(pt) = Z[eta, alpha, lambda, lambda^-1] / (2 eta, eta^3, alpha eta, alpha^2 - 4 lambda)
with |eta| = -1, |alpha| = -4, |lambda| = -8.  Every degree carries a cyclic
group with a fixed generator, so an element is a finite map
``degree -> coefficient`` and equality is coefficientwise.

    degree p (mod 8)    group    generator
    0                   Z        lambda^(-p/8)
    7                   Z/2      eta lambda^(-(p+1)/8)
    6                   Z/2      eta^2 lambda^(-(p+2)/8)
    4                   Z        alpha lambda^(-(p+4)/8)
    1, 2, 3, 5          0        -

KU*(pt) = Z[beta, beta^-1] with |beta| = -2.  KSp*(pt) is the free
KO*(pt)-module on theta, |theta| = -4, and theta * theta = lambda in KO.
KR*(pt) = KO*(pt)[sigma, sigma^-1] with sigma in bidegree -1 - tau.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from enum import Enum
from typing import Mapping, Union

__all__ = [
    "GroupKind",
    "GroupDescriptor",
    "KOElement",
    "KUElement",
    "KSpElement",
    "KRElement",
    "Bidegree",
    "ko_gen",
    "ko_group",
    "ko_mul",
    "ku_mul",
    "realify",
    "quaternionify",
    "theta_mul",
    "times_theta",
    "kr_coeff",
    "parse_element",
    "ONE",
    "ETA",
    "ETA2",
    "ALPHA",
    "LAMBDA",
    "LAMBDA_INV",
]


class GroupKind(Enum):
    TRIVIAL = "Trivial"
    INFINITE_CYCLIC = "InfiniteCyclic"
    ORDER_TWO = "OrderTwo"

    @property
    def order(self) -> float:
        return {"Trivial": 1, "InfiniteCyclic": math.inf, "OrderTwo": 2}[self.value]

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class GroupDescriptor:
    kind: GroupKind
    generator: str

    def __str__(self) -> str:
        if self.kind is GroupKind.TRIVIAL:
            return "0"
        return f"{self.kind.value}<{self.generator}>"


# (-p) mod 8 -> (eta-power/alpha tag); only residues 0, 1, 2, 4 carry a group.
# tag: 0 = unit, 1 = eta, 2 = eta^2, 4 = alpha
_TAG_OF_RESIDUE = {0: 0, 1: 1, 2: 2, 4: 4}
_TAG_TOKEN = {0: "", 1: "e", 2: "e2", 4: "a"}
_TAG_SYMBOL = {0: "", 1: "η", 2: "η²", 4: "α"}


def _tag(p: int) -> int | None:
    return _TAG_OF_RESIDUE.get((-p) % 8)


def _lambda_exponent(p: int) -> int:
    """Exponent k with generator(p) = tag * lambda^k."""
    tag = _tag(p)
    return (-p - tag) // 8


def _gen_product_factor(tag1: int, tag2: int) -> int:
    # gen(p) * gen(q) = factor * gen(p + q)
    if tag1 == 0 or tag2 == 0:
        return 1
    if tag1 == 1 and tag2 == 1:
        return 1
    if tag1 == 4 and tag2 == 4:
        return 4
    return 0


def _lambda_label(k: int) -> str:
    if k == 0:
        return ""
    if k == 1:
        return "λ"
    return f"λ^{k}"


def _gen_label(p: int) -> str:
    tag = _tag(p)
    if tag is None:
        return "0"
    label = _TAG_SYMBOL[tag] + _lambda_label(_lambda_exponent(p))
    return label or "1"


def ko_group(p: int) -> GroupDescriptor:
    """The coefficient group KO^p(pt) together with its generator."""
    tag = _tag(p)
    if tag is None:
        return GroupDescriptor(GroupKind.TRIVIAL, "0")
    kind = GroupKind.ORDER_TWO if tag in (1, 2) else GroupKind.INFINITE_CYCLIC
    return GroupDescriptor(kind, _gen_label(p))


def _normalize_ko(terms) -> tuple[tuple[int, int], ...]:
    acc: dict[int, int] = {}
    for p, c in terms:
        acc[int(p)] = acc.get(int(p), 0) + int(c)
    out = {}
    for p, c in acc.items():
        tag = _tag(p)
        if tag is None:
            continue
        if tag in (1, 2):
            c %= 2
        if c:
            out[p] = c
    return tuple(sorted(out.items(), reverse=True))


@dataclass(frozen=True)
class KOElement:
    """An element of KO*(pt) in the canonical basis, keyed by degree."""

    terms: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "terms", _normalize_ko(self.terms))

    @classmethod
    def from_terms(cls, terms: Mapping[int, int]) -> "KOElement":
        return cls(tuple(terms.items()))

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> "KOElement":
        return cls(((degree, coeff),))

    def as_dict(self) -> dict[int, int]:
        return dict(self.terms)

    def coeff(self, degree: int) -> int:
        return self.as_dict().get(degree, 0)

    def is_zero(self) -> bool:
        return not self.terms

    def is_homogeneous(self) -> bool:
        return len(self.terms) <= 1

    @property
    def degree(self) -> int:
        if len(self.terms) != 1:
            raise ValueError(f"{self} has no single degree")
        return self.terms[0][0]

    def homogeneous_parts(self) -> list["KOElement"]:
        return [KOElement.monomial(p, c) for p, c in self.terms]

    def __add__(self, other):
        if isinstance(other, int):
            other = KOElement.monomial(0, other)
        if not isinstance(other, KOElement):
            return NotImplemented
        return KOElement(self.terms + other.terms)

    __radd__ = __add__

    def __neg__(self):
        return KOElement(tuple((p, -c) for p, c in self.terms))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return KOElement(tuple((p, c * other) for p, c in self.terms))
        if isinstance(other, KOElement):
            return ko_mul(self, other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are only defined for lambda")
        out = ONE
        for _ in range(k):
            out = out * self
        return out

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(_ko_term_text(p, c) for p, c in self.terms)


def _ko_term_text(p: int, c: int, suffix: str = "") -> str:
    tag = _tag(p)
    factors = []
    if c != 1:
        factors.append(str(c))
    if _TAG_TOKEN[tag]:
        factors.append(_TAG_TOKEN[tag])
    factors.append(f"l^{_lambda_exponent(p)}")
    if suffix:
        factors.append(suffix)
    return "*".join(factors)


def ko_gen(p: int) -> KOElement:
    """Canonical generator of KO^p(pt); zero if the group is trivial."""
    return KOElement.monomial(p, 1)


def ko_mul(a: KOElement, b: KOElement) -> KOElement:
    return KOElement(
        tuple(
            (p + q, _gen_product_factor(_tag(p), _tag(q)) * c * d)
            for p, c in a.terms
            for q, d in b.terms
        )
    )


ONE = ko_gen(0)
ETA = ko_gen(-1)
ETA2 = ko_gen(-2)
ALPHA = ko_gen(-4)
LAMBDA = ko_gen(-8)
LAMBDA_INV = ko_gen(8)


def lambda_power(k: int) -> KOElement:
    return ko_gen(-8 * k)


# ---------------------------------------------------------------- KU


@dataclass(frozen=True)
class KUElement:
    """Element of KU*(pt) = Z[beta^(+-1)], keyed by (even) degree."""

    terms: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        acc: dict[int, int] = {}
        for p, c in self.terms:
            if p % 2:
                continue
            acc[int(p)] = acc.get(int(p), 0) + int(c)
        object.__setattr__(
            self, "terms", tuple(sorted(((p, c) for p, c in acc.items() if c), reverse=True))
        )

    @classmethod
    def beta_power(cls, n: int, coeff: int = 1) -> "KUElement":
        return cls(((-2 * n, coeff),))

    def beta_terms(self) -> dict[int, int]:
        """Map beta-exponent -> coefficient."""
        return {-p // 2: c for p, c in self.terms}

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other):
        if not isinstance(other, KUElement):
            return NotImplemented
        acc = dict(self.terms)
        for p, c in other.terms:
            acc[p] = acc.get(p, 0) + c
        return KUElement(tuple(acc.items()))

    def __neg__(self):
        return KUElement(tuple((p, -c) for p, c in self.terms))

    def __mul__(self, other):
        if isinstance(other, int):
            return KUElement(tuple((p, c * other) for p, c in self.terms))
        if isinstance(other, KUElement):
            return ku_mul(self, other)
        return NotImplemented

    __rmul__ = __mul__

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for p, c in self.terms:
            mono = f"b^{-p // 2}"
            parts.append(mono if c == 1 else f"{c}*{mono}")
        return " + ".join(parts)


def ku_mul(a: KUElement, b: KUElement) -> KUElement:
    acc: dict[int, int] = {}
    for p, c in a.terms:
        for q, d in b.terms:
            acc[p + q] = acc.get(p + q, 0) + c * d
    return KUElement(tuple(acc.items()))


# ---------------------------------------------------------------- KSp


@dataclass(frozen=True)
class KSpElement:
    """The element ``base * theta`` of KSp*(pt); its degree is base degree - 4."""

    base: KOElement = field(default_factory=KOElement)

    def is_zero(self) -> bool:
        return self.base.is_zero()

    @property
    def degree(self) -> int:
        return self.base.degree - 4

    def __add__(self, other):
        if not isinstance(other, KSpElement):
            return NotImplemented
        return KSpElement(self.base + other.base)

    def __neg__(self):
        return KSpElement(-self.base)

    def __mul__(self, other):
        if isinstance(other, (int, KOElement)):
            return KSpElement(self.base * other)
        if isinstance(other, KSpElement):
            # (x theta)(y theta) = x y lambda
            return self.base * other.base * LAMBDA
        return NotImplemented

    __rmul__ = __mul__

    def __str__(self) -> str:
        if self.base.is_zero():
            return "0"
        return " + ".join(_ko_term_text(p, c, "th") for p, c in self.base.terms)


def times_theta(x: KOElement) -> KSpElement:
    """KO^p(pt) -> KSp^(p-4)(pt), x -> x * theta."""
    return KSpElement(x)


def theta_mul(x: KSpElement) -> KOElement:
    """Multiply by theta once more: (base * theta) * theta = base * lambda."""
    return x.base * LAMBDA


# ------------------------------------------------- natural transformations


def realify(x: KUElement) -> KOElement:
    """Forget the complex structure: KU*(pt) -> KO*(pt), additive only."""
    out = KOElement()
    for n, c in x.beta_terms().items():
        k, r = divmod(n, 4)
        if r == 0:
            img = lambda_power(k) * 2
        elif r == 1:
            img = ETA2 * lambda_power(k)
        elif r == 2:
            img = ALPHA * lambda_power(k)
        else:
            img = KOElement()
        out = out + img * c
    return out


def quaternionify(x: KUElement) -> KSpElement:
    """Tensor with the quaternions: KU*(pt) -> KSp*(pt), additive only."""
    out = KOElement()
    for n, c in x.beta_terms().items():
        k, r = divmod(n, 4)
        if r == 0:
            img = lambda_power(k - 1) * ALPHA
        elif r == 1:
            img = KOElement()
        elif r == 2:
            img = lambda_power(k) * 2
        else:
            img = ETA2 * lambda_power(k)
        out = out + img * c
    return KSpElement(out)


# ---------------------------------------------------------------- KR


@dataclass(frozen=True)
class Bidegree:
    """The index p + q*tau of the RO(Z/2)-graded theory."""

    p: int
    q: int

    def __str__(self) -> str:
        return f"{self.p}{self.q:+d}τ"


@dataclass(frozen=True)
class KRElement:
    """Element of KO*(pt)[sigma, sigma^-1], keyed by sigma exponent."""

    terms: tuple[tuple[int, KOElement], ...] = ()

    def __post_init__(self):
        acc: dict[int, KOElement] = {}
        for k, x in self.terms:
            acc[int(k)] = acc.get(int(k), KOElement()) + x
        object.__setattr__(
            self,
            "terms",
            tuple(sorted(((k, x) for k, x in acc.items() if not x.is_zero()), reverse=True)),
        )

    def is_zero(self) -> bool:
        return not self.terms

    def bidegrees(self) -> set[Bidegree]:
        return {Bidegree(p - k, -k) for k, x in self.terms for p, _ in x.terms}

    def __add__(self, other):
        if not isinstance(other, KRElement):
            return NotImplemented
        return KRElement(self.terms + other.terms)

    def __neg__(self):
        return KRElement(tuple((k, -x) for k, x in self.terms))

    def __mul__(self, other):
        if isinstance(other, int):
            return KRElement(tuple((k, x * other) for k, x in self.terms))
        if isinstance(other, KOElement):
            return KRElement(tuple((k, x * other) for k, x in self.terms))
        if isinstance(other, KRElement):
            return KRElement(
                tuple((k + j, x * y) for k, x in self.terms for j, y in other.terms)
            )
        return NotImplemented

    __rmul__ = __mul__

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(
            _ko_term_text(p, c, f"s^{k}") for k, x in self.terms for p, c in x.terms
        )


def kr_coeff(b: Bidegree) -> GroupDescriptor:
    """KR^(p+q tau)(pt) = sigma^(-q) * KO^(p-q)(pt)."""
    g = ko_group(b.p - b.q)
    if g.kind is GroupKind.TRIVIAL:
        return g
    s = -b.q
    if s == 0:
        return g
    sigma = "σ" if s == 1 else f"σ^{s}"
    label = sigma if g.generator == "1" else f"{g.generator}{sigma}"
    return GroupDescriptor(g.kind, label)


# ---------------------------------------------------------------- parser

Element = Union[KOElement, KUElement, KSpElement, KRElement]

_TOKEN = re.compile(r"\s*(?:(\d+)|(e2|th|e|a|l|b|s)|(\^)|(\*)|([+-]))")


def _tokenize(text: str) -> list[str]:
    pos, out = 0, []
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse {text!r} at position {pos}")
        out.append(next(g for g in m.groups() if g is not None))
        pos = m.end()
    return out


@dataclass
class _Term:
    coeff: int = 1
    ko: KOElement = ONE
    beta: int | None = None
    theta: int = 0
    sigma: int | None = None


def _read_exponent(tokens: list[str], i: int) -> tuple[int, int]:
    if i < len(tokens) and tokens[i] == "^":
        i += 1
        sign = 1
        if i < len(tokens) and tokens[i] in "+-":
            sign = -1 if tokens[i] == "-" else 1
            i += 1
        if i >= len(tokens) or not tokens[i].isdigit():
            raise ValueError("exponent expected after '^'")
        return sign * int(tokens[i]), i + 1
    return 1, i


def _parse_term(tokens: list[str], i: int) -> tuple[_Term, int]:
    term = _Term()
    expect_factor = True
    while i < len(tokens):
        tok = tokens[i]
        if not expect_factor:
            if tok != "*":
                break
            expect_factor = True
            i += 1
            continue
        if tok.isdigit():
            exp, i = _read_exponent(tokens, i + 1)
            if exp < 0:
                raise ValueError("integers cannot carry negative exponents")
            term.coeff *= int(tok) ** exp
        elif tok in ("e", "e2", "a", "l"):
            exp, i = _read_exponent(tokens, i + 1)
            if tok == "l":
                term.ko = term.ko * lambda_power(exp)
            else:
                if exp < 0:
                    raise ValueError(f"{tok} is not invertible")
                base = {"e": ETA, "e2": ETA2, "a": ALPHA}[tok]
                term.ko = term.ko * base**exp
        elif tok == "b":
            exp, i = _read_exponent(tokens, i + 1)
            term.beta = (term.beta or 0) + exp
        elif tok == "th":
            exp, i = _read_exponent(tokens, i + 1)
            if exp < 0:
                raise ValueError("theta is not invertible")
            term.theta += exp
        elif tok == "s":
            exp, i = _read_exponent(tokens, i + 1)
            term.sigma = (term.sigma or 0) + exp
        else:
            raise ValueError(f"unexpected token {tok!r}")
        expect_factor = False
    if expect_factor:
        raise ValueError("dangling '*' or empty term")
    return term, i


def _term_value(t: _Term) -> Element:
    if t.beta is not None:
        if t.theta or t.sigma is not None or t.ko != ONE:
            raise ValueError("beta cannot be mixed with KO, theta or sigma factors")
        return KUElement.beta_power(t.beta, t.coeff)
    ko = t.ko * lambda_power(t.theta // 2) * t.coeff
    if t.theta % 2:
        if t.sigma is not None:
            raise ValueError("theta cannot be mixed with sigma")
        return KSpElement(ko)
    if t.sigma is not None:
        return KRElement(((t.sigma, ko),))
    return ko


def parse_element(text: str) -> Element:
    """Parse the textual form, e.g. ``"2*l^-1 + e2*l^0"`` or ``"3*b^2"``.

    Tokens: integers, ``e`` (eta), ``e2`` (eta^2), ``a`` (alpha), ``l^t``
    (lambda^t), ``b^k`` (beta^k), ``th`` (theta), ``s^k`` (sigma^k).
    Terms are joined by ``+``/``-`` and factors by ``*``.
    """
    tokens = _tokenize(text)
    if not tokens:
        raise ValueError("empty expression")
    if tokens == ["0"]:
        return KOElement()
    i = 0
    values: list[Element] = []
    while i < len(tokens):
        sign = 1
        while i < len(tokens) and tokens[i] in "+-":
            if tokens[i] == "-":
                sign = -sign
            i += 1
        term, i = _parse_term(tokens, i)
        term.coeff *= sign
        values.append(_term_value(term))
        if i < len(tokens) and tokens[i] not in "+-":
            raise ValueError(f"unexpected token {tokens[i]!r}")
    nonzero = [v for v in values if not v.is_zero()]
    kinds = {type(v) for v in nonzero}
    if len(kinds) > 1:
        raise ValueError(f"mixed rings in {text!r}: {sorted(k.__name__ for k in kinds)}")
    kind = kinds.pop() if kinds else type(values[0])
    total = kind()
    for v in nonzero:
        total = total + v
    return total
