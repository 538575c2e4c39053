"""Which degrees of maps S^n x S^m -> S^(n+m) are realized by regular maps.

Decision order for a pair (n, m):

1. both odd: every regular map is null-homotopic;
2. I^(n+m) not inside I^n (or with n, m exchanged): no map of degree one,
   so exactly the even degrees occur;
3. a nice derivation exists: every degree occurs;
4. otherwise unknown, with the binomial-parity conjecture as prediction.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from .bilinear import verify_nice, verify_normed
from .hurwitz import binom_odd
from .nice import DEFAULT_MAX_EXPANSIONS, NiceDerivation, certify_nice, realize
from .spheres import kr_obstruction, kr_obstruction_witness


class Verdict(Enum):
    ALL_DEGREES = "AllDegrees"
    EVEN_DEGREES_ONLY = "EvenDegreesOnly"
    ONLY_NULL_HOMOTOPIC = "OnlyNullHomotopic"
    UNKNOWN_CONJECTURED_ALL = "UnknownConjecturedAll"
    UNKNOWN_CONJECTURED_EVEN_ONLY = "UnknownConjecturedEvenOnly"

    @property
    def is_unknown(self) -> bool:
        return self.value.startswith("Unknown")


# evidence tags
BOTH_ODD = "both dimensions odd: regular maps are null-homotopic"
KR_OBSTRUCTION = "KR ideal obstruction: no regular map of degree one"
NICE_PAIR = "nice normed bilinear map of odd binomial type"
CONJECTURE = "binomial parity conjecture (unproven)"


@dataclass(frozen=True)
class DegreeStatus:
    n: int
    m: int
    verdict: Verdict
    evidence: str
    derivation: NiceDerivation | None = None
    witness: str | None = None
    binom_odd: bool = field(default=False)

    def to_json(self) -> dict:
        out = {
            "n": self.n,
            "m": self.m,
            "verdict": self.verdict.value,
            "evidence": self.evidence,
            "binom_odd": self.binom_odd,
        }
        if self.derivation is not None:
            out["derivation"] = self.derivation.to_json()
        if self.witness is not None:
            out["witness"] = self.witness
        return out

    def __str__(self) -> str:
        return f"{self.verdict.value} ({self.evidence})"


def classify(n: int, m: int, max_expansions: int = DEFAULT_MAX_EXPANSIONS) -> DegreeStatus:
    if n < 1 or m < 1:
        raise ValueError(f"n and m must be positive, got ({n}, {m})")
    parity = binom_odd(n, m)
    if n % 2 and m % 2:
        return DegreeStatus(n, m, Verdict.ONLY_NULL_HOMOTOPIC, BOTH_ODD, binom_odd=parity)
    for a, b in ((n, m), (m, n)):
        if not kr_obstruction(a, b):
            return DegreeStatus(
                n,
                m,
                Verdict.EVEN_DEGREES_ONLY,
                KR_OBSTRUCTION,
                witness=kr_obstruction_witness(a, b),
                binom_odd=parity,
            )
    d = certify_nice(n, m, max_expansions)
    if d is not None:
        return DegreeStatus(n, m, Verdict.ALL_DEGREES, NICE_PAIR, derivation=d, binom_odd=parity)
    verdict = Verdict.UNKNOWN_CONJECTURED_ALL if parity else Verdict.UNKNOWN_CONJECTURED_EVEN_ONLY
    return DegreeStatus(n, m, verdict, CONJECTURE, binom_odd=parity)


def classify_range(N: int, max_expansions: int = DEFAULT_MAX_EXPANSIONS) -> list[DegreeStatus]:
    """Row-major over 1 <= n, m <= N."""
    return [classify(n, m, max_expansions) for n in range(1, N + 1) for m in range(1, N + 1)]


def congruence_obstructed(n: int, m: int) -> bool:
    """One of n, m is 2 mod 4 and the other is 2 or 3 mod 4."""
    r, s = n % 4, m % 4
    return (r == 2 and s in (2, 3)) or (s == 2 and r in (2, 3))


@dataclass
class AuditReport:
    N: int
    pairs: int = 0
    violations: list[str] = field(default_factory=list)
    counts: dict[str, int] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        return {
            "N": self.N,
            "pairs": self.pairs,
            "counts": self.counts,
            "violations": self.violations,
            "ok": self.ok,
        }


def consistency_audit(N: int, max_expansions: int = DEFAULT_MAX_EXPANSIONS) -> AuditReport:
    report = AuditReport(N)
    table = {(s.n, s.m): s for s in classify_range(N, max_expansions)}
    report.pairs = len(table)
    for (n, m), st in table.items():
        report.counts[st.verdict.value] = report.counts.get(st.verdict.value, 0) + 1
        nogo = (n % 2 and m % 2) or not kr_obstruction(n, m) or not kr_obstruction(m, n)
        if st.verdict is Verdict.ALL_DEGREES:
            if nogo:
                report.violations.append(f"({n},{m}): certified nice but an obstruction applies")
            d = st.derivation
            if d is None or not d.is_valid():
                report.violations.append(f"({n},{m}): derivation does not replay")
            else:
                f = realize(d)
                if not (verify_normed(f) and verify_nice(f)):
                    report.violations.append(f"({n},{m}): realized map fails exact checks")
        if st.verdict is Verdict.EVEN_DEGREES_ONLY:
            if st.binom_odd:
                report.violations.append(f"({n},{m}): even degrees only but binomial is odd")
            if n % 2 and m % 2:
                report.violations.append(f"({n},{m}): even-degree verdict for two odd dimensions")
        if st.verdict is Verdict.ONLY_NULL_HOMOTOPIC and not (n % 2 and m % 2):
            report.violations.append(f"({n},{m}): null-homotopic verdict with an even dimension")
        if st.binom_odd and (n % 2 and m % 2):
            report.violations.append(f"({n},{m}): both odd yet binomial odd")
        mirror = table[(m, n)]
        if mirror.verdict is not st.verdict:
            report.violations.append(
                f"({n},{m}) -> {st.verdict.value} but ({m},{n}) -> {mirror.verdict.value}"
            )
    return report
