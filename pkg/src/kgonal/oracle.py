"""Brute-force ground truth for common k-gonal / centered k-gonal values.

Walks both increasing sequences with two pointers. Deliberately shares no
code with the Pell / closed-form path: only forward evaluation of the two
figurate families is used.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .figurate import PolygonParams, centered, polygonal

Triple = tuple[int, int, int]


@dataclass
class OracleReport:
    k: int
    limit: int
    matches: list[Triple] = field(default_factory=list)
    closed_form_agreement: bool = True
    first_divergence: tuple[int, Triple | None, Triple | None] | None = None

    def summary(self) -> str:
        head = f"k={self.k} limit={self.limit} matches={len(self.matches)}"
        if self.closed_form_agreement:
            return head + " agree"
        idx, expected, actual = self.first_divergence
        return head + f" DIVERGE at #{idx}: oracle={expected} closed-form={actual}"


def enumerate_common(k: int, limit: int) -> list[Triple]:
    """All (n, m, value) with P(n; k) == C(m; k) == value <= limit, by value."""
    params = PolygonParams(k)
    if limit < 1:
        raise ValueError(f"limit must be >= 1, got {limit}")
    out = []
    n = m = 1
    p, c = polygonal(n, params), centered(m, params)
    while p <= limit and c <= limit:
        if p == c:
            out.append((n, m, p))
        if p <= c:
            n += 1
            p = polygonal(n, params)
        if c < p:
            m += 1
            c = centered(m, params)
    return out


def compare(k: int, limit: int) -> OracleReport:
    """Oracle triples against the closed-form stream, over values <= limit."""
    # local import keeps module-level dependencies limited to figurate
    from .intersect import iter_records

    expected = enumerate_common(k, limit)
    actual = []
    for rec in iter_records(k):
        if rec.value > limit:
            break
        actual.append((rec.n, rec.m, rec.value))

    report = OracleReport(k, limit, matches=expected)
    for idx in range(max(len(expected), len(actual))):
        e = expected[idx] if idx < len(expected) else None
        a = actual[idx] if idx < len(actual) else None
        if e != a:
            report.closed_form_agreement = False
            report.first_divergence = (idx, e, a)
            break
    return report
