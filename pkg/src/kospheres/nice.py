"""Nice pairs: derivations, the certification search and map realization.

A pair (n, m) is nice when there is a nice normed bilinear map
R^(n+1) x R^(m+1) -> R^(n+m+1) and binom(n+m, n) is odd.  (0, 0) is nice,
niceness is symmetric, and (n, m) nice with rho(k) > m gives (n+k, m) nice.
A derivation records one chain of these moves; replaying it on maps yields
an explicit witness.
"""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

from .bilinear import (
    BilinearMap,
    base_nice,
    compose_step,
    hr_to_bilinear,
    normed_violations,
    sample_sphere,
    swap,
    verify_nice,
    verify_normed,
)
from .hurwitz import binom_odd, hr_family, radon_hurwitz

DEFAULT_MAX_EXPANSIONS = 100_000


@dataclass(frozen=True)
class Step:
    kind: str  # "Base" | "AddLeft" | "Swap"
    k: int = 0

    def __post_init__(self):
        if self.kind not in ("Base", "AddLeft", "Swap"):
            raise ValueError(f"unknown step {self.kind!r}")
        if self.kind == "AddLeft" and self.k < 1:
            raise ValueError("AddLeft needs a positive k")

    def __str__(self) -> str:
        return f"AddLeft({self.k})" if self.kind == "AddLeft" else self.kind

    @classmethod
    def parse(cls, text: str) -> "Step":
        text = text.strip()
        m = re.fullmatch(r"AddLeft\((\d+)\)", text)
        if m:
            return cls("AddLeft", int(m.group(1)))
        return cls(text)


BASE = Step("Base")
SWAP = Step("Swap")


def add_left(k: int) -> Step:
    return Step("AddLeft", k)


class InvalidDerivation(ValueError):
    pass


@dataclass(frozen=True)
class NiceDerivation:
    steps: tuple[Step, ...]
    target: tuple[int, int]

    def replay(self) -> tuple[int, int]:
        """Walk the steps from (0, 0); raise InvalidDerivation on a bad move."""
        if not self.steps or self.steps[0] != BASE:
            raise InvalidDerivation("a derivation starts with Base")
        n, m = 0, 0
        for pos, step in enumerate(self.steps[1:], start=1):
            if step.kind == "Base":
                raise InvalidDerivation(f"step {pos}: Base may only appear first")
            if step.kind == "Swap":
                n, m = m, n
            elif radon_hurwitz(step.k) > m:
                n += step.k
            else:
                raise InvalidDerivation(
                    f"step {pos}: {step} at ({n}, {m}) needs rho({step.k}) = "
                    f"{radon_hurwitz(step.k)} > {m}"
                )
        if (n, m) != tuple(self.target):
            raise InvalidDerivation(f"derivation ends at ({n}, {m}), not at {self.target}")
        if not binom_odd(n, m):
            raise InvalidDerivation(f"binom({n + m}, {n}) is even")
        return n, m

    def is_valid(self) -> bool:
        try:
            self.replay()
        except InvalidDerivation:
            return False
        return True

    def to_json(self) -> dict:
        return {"target": list(self.target), "steps": [str(s) for s in self.steps]}

    @classmethod
    def from_json(cls, data: dict) -> "NiceDerivation":
        target = tuple(int(v) for v in data["target"])
        if len(target) != 2:
            raise ValueError("target must be a pair")
        return cls(tuple(Step.parse(s) for s in data["steps"]), target)

    def __str__(self) -> str:
        return ", ".join(str(s) for s in self.steps)


def certify_nice(
    n: int, m: int, max_expansions: int = DEFAULT_MAX_EXPANSIONS
) -> NiceDerivation | None:
    """Shortest derivation of (n, m), or None if parity fails or the budget runs out.

    Breadth first over states (a, b).  Coordinates only grow, so a state is
    kept only if it fits under (n, m) or under (m, n).
    """
    if n < 0 or m < 0:
        raise ValueError("n and m must be nonnegative")
    if not binom_odd(n, m):
        return None
    goal = (n, m)

    def fits(a: int, b: int) -> bool:
        return (a <= n and b <= m) or (a <= m and b <= n)

    rho = [0] + [radon_hurwitz(k) for k in range(1, max(n, m) + 1)]
    parent: dict[tuple[int, int], tuple[tuple[int, int], Step] | None] = {(0, 0): None}
    queue = deque([(0, 0)])
    expansions = 0
    while queue:
        state = queue.popleft()
        if state == goal:
            return NiceDerivation(_path(parent, state), goal)
        if state == (m, n):
            return NiceDerivation(_path(parent, state) + (SWAP,), goal)
        expansions += 1
        if expansions > max_expansions:
            return None
        a, b = state
        moves = [((b, a), SWAP)]
        limit = max(n, m) - a
        moves += [((a + k, b), add_left(k)) for k in range(1, limit + 1) if rho[k] > b]
        for nxt, step in moves:
            if nxt not in parent and fits(*nxt):
                parent[nxt] = (state, step)
                queue.append(nxt)
    return None


def _path(parent, state) -> tuple[Step, ...]:
    steps = []
    while parent[state] is not None:
        state, step = parent[state]
        steps.append(step)
    return (BASE,) + tuple(reversed(steps))


def realize(d: NiceDerivation) -> BilinearMap:
    """Chain the constructions along ``d``; the result is re-verified exactly."""
    d.replay()
    f = base_nice()
    n, m = 0, 0
    for step in d.steps[1:]:
        if step.kind == "Swap":
            f = swap(f)
            n, m = m, n
        else:
            h = hr_to_bilinear(hr_family(step.k, m + 1), m + 1)
            f = compose_step(f, h)
            n += step.k
    if f.shape != (n + 1, m + 1, n + m + 1):
        raise AssertionError(f"realized shape {f.shape} for ({n}, {m})")
    if not (verify_normed(f) and verify_nice(f)):
        raise AssertionError(f"realized map for {d.target} failed the exact checks")
    return f


@dataclass(frozen=True, eq=False)
class RegularMapSpec:
    """f = F/2 restricted to shifted spheres |x|^2 = 2 x_1, S^n x S^m -> S^(n+m)."""

    n: int
    m: int
    bilinear: BilinearMap
    scale: Fraction = Fraction(1, 2)
    sphere: str = "shifted"
    certificate: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        data = self.bilinear.to_json()
        data.update(
            {
                "n": self.n,
                "m": self.m,
                "scale": str(self.scale),
                "sphere": self.sphere,
                "polynomials": self.bilinear.polynomials(scale="1/2*"),
                "certificate": self.certificate,
            }
        )
        return data


class HypothesisError(ValueError):
    pass


def emit_regular_map(
    f: BilinearMap, derivation: NiceDerivation | None = None, samples: int = 0, seed: int = 0
) -> RegularMapSpec:
    n, m = f.a - 1, f.b - 1
    if n < 1 or m < 1:
        raise HypothesisError(f"spheres must have positive dimension, got ({n}, {m})")
    if f.c != n + m + 1:
        raise HypothesisError(f"target dimension {f.c} != n + m + 1 = {n + m + 1}")
    problems = []
    normed = verify_normed(f)
    if not normed:
        problems.append(f"not normed: {normed_violations(f)[0]}")
    nice = verify_nice(f)
    if not nice:
        problems.append("not nice: first coordinate is not x1*y1")
    parity = binom_odd(n, m)
    if not parity:
        problems.append(f"binom({n + m}, {n}) is even")
    if problems:
        raise HypothesisError("; ".join(problems))
    cert = {"normed": normed, "nice": nice, "binom_odd": parity}
    if derivation is not None:
        cert["derivation"] = [str(s) for s in derivation.steps]
    if samples:
        misses = sum(1 for _ in sample_sphere(f, samples, seed))
        cert["sphere_samples"] = {"count": samples, "seed": seed, "failures": misses}
    return RegularMapSpec(n, m, f, certificate=cert)


def replay_states(d: NiceDerivation) -> Iterable[tuple[int, int]]:
    n, m = 0, 0
    yield n, m
    for step in d.steps[1:]:
        if step.kind == "Swap":
            n, m = m, n
        else:
            n += step.k
        yield n, m
