"""Numbers that are both k-gonal and centered k-gonal.

With alpha, beta = k - 1 +/- sqrt(k(k-2)) and the Lucas pair
s_i = alpha^i + beta^i, u_i = (alpha^i - beta^i)/sqrt(k(k-2)), the i-th
common value (i >= 0) and its witnesses are

    N_i = (k s_{2i+1} - 2k^2 + 18k - 32) / (16(k-2))
    m_i = (2 + s_i + k u_i) / 4                     (centered index)
    a_i = (s_{i+1} + s_i) / 2                        (root of k(k-2)(2m-1)^2 + 2k)
    n_i = (k - 4 + a_i) / (2(k-2))                   (polygonal index)
    b_i = (s_i + (k-2) u_i) / 2

Every division is checked for exactness.
"""

from __future__ import annotations

from collections.abc import Iterator
from dataclasses import dataclass
from itertools import islice

from .exactmath import InvariantError, LucasPair, exact_div, is_perfect_square, lucas_pair, lucas_pairs
from .figurate import PolygonParams, centered, polygonal
from .pell import eq2_check, norm_two_solutions


@dataclass(frozen=True)
class IntersectionRecord:
    k: int
    i: int
    value: int
    m: int
    n: int
    a: int
    A: int
    b: int

    def as_json(self) -> dict[str, str]:
        return {key: str(getattr(self, key)) for key in ("k", "i", "value", "m", "n", "a")}


def _check_order(k: int) -> None:
    PolygonParams(k)


def _check_index(i: int) -> None:
    if i < 0:
        raise ValueError(f"solution index must be >= 0, got {i}")


def _value_from_s(k: int, s_odd: int) -> int:
    return exact_div(k * s_odd - 2 * k * k + 18 * k - 32, 16 * (k - 2), "value numerator")


def _m_from_pair(k: int, lp: LucasPair) -> int:
    return exact_div(2 + lp.s + k * lp.u, 4, "centered-index numerator")


def _n_from_a(k: int, a: int) -> int:
    return exact_div(k - 4 + a, 2 * (k - 2), "polygonal-index numerator")


def value_at(k: int, i: int) -> int:
    """The i-th number (from i = 0) that is both k-gonal and centered k-gonal."""
    _check_order(k)
    _check_index(i)
    return _value_from_s(k, lucas_pair(k, 2 * i + 1).s)


def index_m(k: int, i: int) -> int:
    _check_order(k)
    _check_index(i)
    return _m_from_pair(k, lucas_pair(k, i))


def radical_a(k: int, i: int) -> int:
    _check_order(k)
    _check_index(i)
    return (lucas_pair(k, i + 1).s + lucas_pair(k, i).s) // 2


def index_n(k: int, i: int) -> int:
    return _n_from_a(k, radical_a(k, i))


def companion_b(k: int, i: int) -> int:
    _check_order(k)
    _check_index(i)
    lp = lucas_pair(k, i)
    return exact_div(lp.s + (k - 2) * lp.u, 2, "companion b")


def _build(k: int, i: int, value: int, cur: LucasPair, nxt: LucasPair) -> IntersectionRecord:
    m = _m_from_pair(k, cur)
    a = (nxt.s + cur.s) // 2
    n = _n_from_a(k, a)
    b = exact_div(cur.s + (k - 2) * cur.u, 2, "companion b")
    return IntersectionRecord(k=k, i=i, value=value, m=m, n=n, a=a, A=2 * m - 1, b=b)


def validate(rec: IntersectionRecord) -> None:
    """Raise InvariantError unless every defining identity of ``rec`` holds."""
    k = rec.k
    if polygonal(rec.n, k) != rec.value or centered(rec.m, k) != rec.value:
        raise InvariantError(f"witness indices disagree with value in {rec}")
    if k * (k - 2) * rec.A * rec.A + 2 * k != rec.a * rec.a:
        raise InvariantError(f"radical identity fails in {rec}")
    if rec.A != 2 * rec.m - 1 or not eq2_check(k, rec.A, rec.b):
        raise InvariantError(f"Pell form fails in {rec}")


def record(k: int, i: int) -> IntersectionRecord:
    """Closed-form record for index i, with all invariants asserted."""
    _check_order(k)
    _check_index(i)
    rec = _build(k, i, value_at(k, i), lucas_pair(k, i), lucas_pair(k, i + 1))
    validate(rec)
    return rec


def recurrence_constant(k: int) -> int:
    """c in N_{i+1} = (4(k-1)^2 - 2) N_i - N_{i-1} + c, fitted from N_0, N_1, N_2."""
    n0, n1, n2 = (value_at(k, i) for i in range(3))
    return n2 - (4 * (k - 1) ** 2 - 2) * n1 + n0


def iter_records(k: int, start: int = 0) -> Iterator[IntersectionRecord]:
    """Records for i = start, start+1, ... with constant work per term.

    Values follow the order-2 recurrence with trace alpha^2 + beta^2; the
    witnesses come from a rolling Lucas pair.
    """
    _check_order(k)
    _check_index(start)
    trace = 4 * (k - 1) ** 2 - 2
    c = recurrence_constant(k)
    v0, v1 = value_at(k, start), value_at(k, start + 1)
    pairs = lucas_pairs(k, start)
    cur = next(pairs)
    i = start
    for nxt in pairs:
        yield _build(k, i, v0, cur, nxt)
        v0, v1 = v1, trace * v1 - v0 + c
        cur = nxt
        i += 1


def stream(k: int, start: int, count: int) -> list[IntersectionRecord]:
    if count < 1:
        raise ValueError(f"count must be >= 1, got {count}")
    return list(islice(iter_records(k, start), count))


def case2_sequence(k: int, count: int) -> list[tuple[int, int]]:
    """(m, C(m; k)) from the norm-2 equation b^2 - (k-2)(2m-1)^2 = 2.

    Only for square k: then a^2 = k b^2 reduces the radical condition to this
    form, seeded by (sqrt(k), 1).
    """
    root = is_perfect_square(k) if k >= 4 else None
    if root is None:
        raise ValueError(f"k must be a perfect square >= 4, got {k}")
    if count < 1:
        raise ValueError(f"count must be >= 1, got {count}")
    out = []
    for sol in norm_two_solutions(k - 2, (root, 1), count):
        if sol.y % 2 == 0:
            raise InvariantError(f"even A' in norm-2 solution {tuple(sol)}")
        m = (sol.y + 1) // 2
        out.append((m, centered(m, k)))
    return out
