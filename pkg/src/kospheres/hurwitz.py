"""Radon-Hurwitz numbers and explicit Hurwitz-Radon matrix families.

A family B_0 = I, B_1, ..., B_{s-1} of k x k signed permutation matrices with
B_i^T B_j + B_j^T B_i = 2 delta_ij I exists exactly when s <= rho(k).  With
B_0 = I the condition says B_1, ..., B_{s-1} are skew, square to -I and
pairwise anticommute, so families are built from such "complex structures":

* sizes 1, 2, 4, 8: left multiplication by the imaginary units of the
  Cayley-Dickson algebras R, C, H, O (transposed);
* size 16: the octonion structures E_i tensored with diag(1, -1), plus
  I_8 tensored with the 2 x 2 rotation;
* size 16 k: G_i (x) I_k for the eight size-16 structures G_i, plus
  w (x) E_j where w = G_1 ... G_8 is a symmetric involution anticommuting
  with every G_i;
* size 2^t * odd: the 2^t family tensored with an identity block.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np


def radon_hurwitz(n: int) -> int:
    """rho(n) = 8a + 2^b where n = 2^(4a+b) (2c+1), 0 <= b <= 3."""
    if n <= 0:
        raise ValueError(f"Radon-Hurwitz number needs n >= 1, got {n}")
    t = (n & -n).bit_length() - 1
    a, b = divmod(t, 4)
    return 8 * a + 2**b


def binom_odd(n: int, m: int) -> bool:
    """binom(n+m, n) is odd iff n and m share no binary digit (Kummer)."""
    if n < 0 or m < 0:
        raise ValueError("binom_odd takes nonnegative integers")
    return n & m == 0


def _cd_mul(x: tuple[int, ...], y: tuple[int, ...]) -> tuple[int, ...]:
    # (a, b)(c, d) = (ac - d* b, da + b c*)
    if len(x) == 1:
        return (x[0] * y[0],)
    h = len(x) // 2
    a, b, c, d = x[:h], x[h:], y[:h], y[h:]
    ac, dcb = _cd_mul(a, c), _cd_mul(_cd_conj(d), b)
    da, bcc = _cd_mul(d, a), _cd_mul(b, _cd_conj(c))
    return tuple(u - v for u, v in zip(ac, dcb)) + tuple(u + v for u, v in zip(da, bcc))


def _cd_conj(x: tuple[int, ...]) -> tuple[int, ...]:
    if len(x) == 1:
        return x
    h = len(x) // 2
    return _cd_conj(x[:h]) + tuple(-v for v in x[h:])


def _unit(dim: int, i: int) -> tuple[int, ...]:
    return tuple(int(j == i) for j in range(dim))


def _left_mult(dim: int, i: int) -> np.ndarray:
    cols = [_cd_mul(_unit(dim, i), _unit(dim, j)) for j in range(dim)]
    return np.array(cols, dtype=np.int64).T


@lru_cache(maxsize=None)
def _structures_pow2(t: int) -> tuple[np.ndarray, ...]:
    """rho(2^t) - 1 anticommuting skew signed permutations of size 2^t."""
    if t <= 3:
        dim = 2**t
        return tuple(_left_mult(dim, i).T.copy() for i in range(1, dim))
    if t == 4:
        octo = _structures_pow2(3)
        flip = np.diag([1, -1]).astype(np.int64)
        rot = np.array([[0, 1], [-1, 0]], dtype=np.int64)
        return tuple(np.kron(e, flip) for e in octo) + (np.kron(np.eye(8, dtype=np.int64), rot),)
    g = _structures_pow2(4)
    inner = _structures_pow2(t - 4)
    size = 2 ** (t - 4)
    w = np.eye(16, dtype=np.int64)
    for gi in g:
        w = w @ gi
    eye = np.eye(size, dtype=np.int64)
    return tuple(np.kron(gi, eye) for gi in g) + tuple(np.kron(w, e) for e in inner)


@dataclass(frozen=True, eq=False)
class HRFamily:
    k: int
    mats: tuple[np.ndarray, ...]

    def __len__(self) -> int:
        return len(self.mats)


def hr_family(k: int, s: int) -> HRFamily:
    """First ``s`` matrices of a Hurwitz-Radon family of size ``k``."""
    if k < 1 or s < 1:
        raise ValueError("k and s must be positive")
    rho = radon_hurwitz(k)
    if s > rho:
        raise ValueError(f"capacity exceeded: rho({k}) = {rho} < {s}")
    t = (k & -k).bit_length() - 1
    odd = k >> t
    eye = np.eye(odd, dtype=np.int64)
    mats = [np.eye(k, dtype=np.int64)]
    mats += [np.kron(e, eye) for e in _structures_pow2(t)[: s - 1]]
    for m in mats:
        m.setflags(write=False)
    return HRFamily(k, tuple(mats))


def hr_violations(fam: HRFamily) -> list[tuple[int, int]]:
    """Index pairs (i, j) where B_i^T B_j + B_j^T B_i != 2 delta_ij I."""
    # entries are tiny integers, so float64 products (BLAS) are still exact
    mats = [m.astype(np.float64) for m in fam.mats]
    if any(np.abs(m).max() > 2**20 for m in mats):
        mats = list(fam.mats)
    eye = np.eye(fam.k)
    bad = []
    for i, bi in enumerate(mats):
        for j in range(i, len(mats)):
            bj = mats[j]
            target = 2 * eye if i == j else 0 * eye
            if not np.array_equal(bi.T @ bj + bj.T @ bi, target):
                bad.append((i, j))
    return bad


def is_signed_permutation(mat: np.ndarray) -> bool:
    if not np.isin(mat, (-1, 0, 1)).all():
        return False
    nz = mat != 0
    return bool((nz.sum(axis=0) == 1).all() and (nz.sum(axis=1) == 1).all())
