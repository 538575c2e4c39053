"""Integer bilinear maps R^a x R^b -> R^c and exact checks on them.

F_i(x, y) = x^T A_i y.  F is normed (|F(x,y)| = |x||y|) iff for all j, j', l, l'

    sum_i A_i[j,l] A_i[j',l'] + A_i[j,l'] A_i[j',l] = 2 delta_jj' delta_ll',

and nice iff F_1(x, y) = x_1 y_1, i.e. A_0 is the unit matrix at (0, 0).
"""

from __future__ import annotations

import random
from fractions import Fraction
from math import lcm
from typing import Iterator, NamedTuple

import numpy as np

from .hurwitz import HRFamily

# entries beyond this switch to Python integers so products cannot overflow
_INT64_SAFE = 2**20


def _as_exact_array(data) -> np.ndarray:
    arr = np.array(data, dtype=object)
    for v in arr.flat:
        if isinstance(v, bool) or not isinstance(v, (int, np.integer)):
            raise ValueError(f"coefficients must be integers, got {v!r}")
    if not arr.size or max(abs(int(v)) for v in arr.flat) < _INT64_SAFE:
        return arr.astype(np.int64)
    return np.vectorize(int, otypes=[object])(arr)


class BilinearMap:
    """Coefficient tensor of shape (c, a, b)."""

    __slots__ = ("mats",)

    def __init__(self, mats):
        arr = _as_exact_array(mats)
        if arr.ndim != 3 or 0 in arr.shape:
            raise ValueError(f"expected a nonempty (c, a, b) tensor, got shape {arr.shape}")
        arr.setflags(write=False)
        self.mats = arr

    @property
    def a(self) -> int:
        return self.mats.shape[1]

    @property
    def b(self) -> int:
        return self.mats.shape[2]

    @property
    def c(self) -> int:
        return self.mats.shape[0]

    @property
    def shape(self) -> tuple[int, int, int]:
        return (self.a, self.b, self.c)

    def __eq__(self, other):
        if not isinstance(other, BilinearMap):
            return NotImplemented
        return self.mats.shape == other.mats.shape and bool((self.mats == other.mats).all())

    __hash__ = None

    def __repr__(self) -> str:
        return f"BilinearMap(a={self.a}, b={self.b}, c={self.c})"

    def __call__(self, x, y):
        x = np.asarray(x, dtype=object)
        y = np.asarray(y, dtype=object)
        return np.tensordot(self.mats.astype(object), y, axes=([2], [0])) @ x

    def with_entry(self, i: int, j: int, l: int, value: int) -> "BilinearMap":
        arr = np.array(self.mats, dtype=object)
        arr[i, j, l] = value
        return BilinearMap(arr)

    def to_json(self) -> dict:
        return {
            "a": self.a,
            "b": self.b,
            "c": self.c,
            "mats": [[[int(v) for v in row] for row in mat] for mat in self.mats],
        }

    @classmethod
    def from_json(cls, data: dict) -> "BilinearMap":
        f = cls(data["mats"])
        declared = (data.get("a", f.a), data.get("b", f.b), data.get("c", f.c))
        if declared != f.shape:
            raise ValueError(f"declared shape {declared} does not match mats {f.shape}")
        return f

    def polynomials(self, scale: str = "") -> list[str]:
        """Human readable coordinates, e.g. ``x1*y1 - x2*y2``."""
        out = []
        for mat in self.mats:
            terms = []
            for j, l in zip(*np.nonzero(mat)):
                v = int(mat[j, l])
                mono = f"x{j + 1}*y{l + 1}"
                if v == 1:
                    terms.append(("+", mono))
                elif v == -1:
                    terms.append(("-", mono))
                else:
                    terms.append(("+" if v > 0 else "-", f"{abs(v)}*{mono}"))
            if not terms:
                out.append("0")
                continue
            text = ("-" if terms[0][0] == "-" else "") + terms[0][1]
            text += "".join(f" {s} {t}" for s, t in terms[1:])
            out.append(f"{scale}({text})" if scale else text)
        return out


class NormViolation(NamedTuple):
    j: int
    l: int
    j2: int
    l2: int
    value: int
    expected: int

    def __str__(self) -> str:
        return (
            f"sum_i A_i[{self.j},{self.l}]A_i[{self.j2},{self.l2}] + "
            f"A_i[{self.j},{self.l2}]A_i[{self.j2},{self.l}] = {self.value}, expected {self.expected}"
        )


def _norm_defect(f: BilinearMap) -> np.ndarray:
    t = np.tensordot(f.mats, f.mats, axes=([0], [0]))  # [j, l, j', l']
    sym = t + t.transpose(0, 3, 2, 1)
    target = 2 * np.einsum("ij,kl->ikjl", np.eye(f.a, dtype=np.int64), np.eye(f.b, dtype=np.int64))
    return sym - target


def normed_violations(f: BilinearMap, limit: int = 1) -> list[NormViolation]:
    defect = _norm_defect(f)
    out = []
    for idx in np.argwhere(defect != 0)[:limit]:
        j, l, j2, l2 = (int(v) for v in idx)
        expected = 2 if (j == j2 and l == l2) else 0
        out.append(NormViolation(j, l, j2, l2, int(defect[j, l, j2, l2]) + expected, expected))
    return out


def verify_normed(f: BilinearMap) -> bool:
    return not bool((_norm_defect(f) != 0).any())


def verify_nice(f: BilinearMap) -> bool:
    first = f.mats[0]
    return int(first[0, 0]) == 1 and int(np.count_nonzero(first)) == 1


def base_nice() -> BilinearMap:
    """F(x, y) = x y on R x R."""
    return BilinearMap([[[1]]])


def hr_to_bilinear(fam: HRFamily, b: int) -> BilinearMap:
    """H(x, y) = sum_i y_i B_i x, a normed map R^k x R^b -> R^k."""
    if b < 1 or b > len(fam):
        raise ValueError(f"capacity exceeded: family of {len(fam)} matrices, asked for b={b}")
    # H_c(x, y) = sum_{i, j} B_i[c, j] x_j y_i  ->  mats[c][j][i] = B_i[c, j]
    stacked = np.stack(fam.mats[:b], axis=-1)  # [c, j, i]
    return BilinearMap(stacked)


def compose_step(g: BilinearMap, h: BilinearMap) -> BilinearMap:
    """F(x, y) = (G(x~, y), H(x^, y)) with x = (x~, x^)."""
    if g.b != h.b:
        raise ValueError(f"right dimensions differ: {g.b} vs {h.b}")
    if h.a != h.c:
        raise ValueError(f"H must map R^k x R^b -> R^k, got shape {h.shape}")
    a = g.a + h.a
    out = np.zeros((g.c + h.c, a, g.b), dtype=object)
    out[: g.c, : g.a, :] = g.mats
    out[g.c :, g.a :, :] = h.mats
    return BilinearMap(out)


def swap(f: BilinearMap) -> BilinearMap:
    """G(y, x) = F(x, y)."""
    return BilinearMap(f.mats.transpose(0, 2, 1))


# ------------------------------------------------------------ sampling


def random_rational_vector(rng: random.Random, dim: int, bound: int = 12) -> list[Fraction]:
    return [Fraction(rng.randint(-bound, bound), rng.randint(1, bound)) for _ in range(dim)]


def _clear(v: list[Fraction]) -> tuple[list[int], int]:
    d = lcm(*(q.denominator for q in v))
    return [int(q * d) for q in v], d


def random_shifted_sphere_point(rng: random.Random, dim: int, bound: int = 9) -> list[Fraction]:
    """Rational point of {x in R^dim : |x|^2 = 2 x_1} via stereographic projection."""
    if dim == 1:
        return [Fraction(2)]  # S^0 = {0, 2}; the origin carries no information
    t = random_rational_vector(rng, dim - 1, bound)
    s = sum((v * v for v in t), Fraction(0))
    d = s + 1
    # unit sphere point (s - 1, 2 t) / (s + 1), shifted by e_1
    return [2 * s / d] + [2 * v / d for v in t]


def _eval_int(f: BilinearMap, x: list[int], y: list[int]) -> list[int]:
    return [int(v) for v in f(x, y)]


def sample_normed(f: BilinearMap, samples: int = 100, seed: int = 0) -> Iterator[tuple]:
    """Yield the (x, y) among ``samples`` random rational pairs with |F|^2 != |x|^2|y|^2."""
    rng = random.Random(seed)
    for _ in range(samples):
        x = random_rational_vector(rng, f.a)
        y = random_rational_vector(rng, f.b)
        # both sides are homogeneous of degree (2, 2): clear denominators
        xi, _ = _clear(x)
        yi, _ = _clear(y)
        val = _eval_int(f, xi, yi)
        if sum(v * v for v in val) != sum(v * v for v in xi) * sum(v * v for v in yi):
            yield (x, y)


def sample_sphere(f: BilinearMap, samples: int = 100, seed: int = 0) -> Iterator[tuple]:
    """Yield shifted-sphere points (x, y) where f = F/2 misses the target sphere.

    The target identity is |f(x,y)|^2 = 2 f_1(x,y); with x = X/dx, y = Y/dy it
    becomes |F(X,Y)|^2 = 4 dx dy F_1(X,Y) in integers.
    """
    rng = random.Random(seed)
    for _ in range(samples):
        x = random_shifted_sphere_point(rng, f.a)
        y = random_shifted_sphere_point(rng, f.b)
        xi, dx = _clear(x)
        yi, dy = _clear(y)
        val = _eval_int(f, xi, yi)
        if sum(v * v for v in val) != 4 * dx * dy * val[0]:
            yield (x, y)
