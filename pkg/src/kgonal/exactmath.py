"""Exact integer helpers and arithmetic in the ring Z[sqrt(D)].

Everything here stays in Python ints. sqrt(D) is never evaluated numerically;
an element a + b*sqrt(D) is carried as the pair (a, b).
"""

from __future__ import annotations

import math
from dataclasses import dataclass


class InvariantError(ArithmeticError):
    """An identity that must hold exactly did not (an implementation bug)."""


def exact_div(num: int, den: int, what: str = "quotient") -> int:
    q, r = divmod(num, den)
    if r:
        raise InvariantError(f"{what}: {den} does not divide {num}")
    return q


def isqrt(x: int) -> int:
    """Largest r with r*r <= x."""
    if x < 0:
        raise ValueError(f"isqrt of negative number {x}")
    return math.isqrt(x)


def is_perfect_square(x: int) -> int | None:
    """Return r with r*r == x, or None if x is not a square."""
    r = isqrt(x)
    return r if r * r == x else None


@dataclass(frozen=True)
class QuadInt:
    """The element a + b*sqrt(disc) of Z[sqrt(disc)]."""

    a: int
    b: int
    disc: int

    def __post_init__(self) -> None:
        if self.disc <= 0 or is_perfect_square(self.disc) is not None:
            raise ValueError(f"discriminant must be a positive non-square, got {self.disc}")

    @classmethod
    def one(cls, disc: int) -> QuadInt:
        return cls(1, 0, disc)

    @property
    def norm(self) -> int:
        return self.a * self.a - self.disc * self.b * self.b

    def conjugate(self) -> QuadInt:
        return QuadInt(self.a, -self.b, self.disc)

    def __mul__(self, other: QuadInt) -> QuadInt:
        return quad_mul(self, other)

    def __pow__(self, e: int) -> QuadInt:
        return quad_pow(self, e)

    def __str__(self) -> str:
        return f"{self.a}{self.b:+}*sqrt({self.disc})"


def quad_mul(p: QuadInt, q: QuadInt) -> QuadInt:
    if p.disc != q.disc:
        raise ValueError(f"mismatched discriminants {p.disc} and {q.disc}")
    d = p.disc
    return QuadInt(p.a * q.a + d * p.b * q.b, p.a * q.b + p.b * q.a, d)


def quad_pow(p: QuadInt, e: int) -> QuadInt:
    """p**e by square-and-multiply."""
    if e < 0:
        raise ValueError(f"negative exponent {e}")
    result = QuadInt.one(p.disc)
    base = p
    while e:
        if e & 1:
            result = quad_mul(result, base)
        e >>= 1
        if e:
            base = quad_mul(base, base)
    return result


@dataclass(frozen=True)
class LucasPair:
    """s = alpha**i + beta**i and u = (alpha**i - beta**i)/sqrt(D), where
    alpha, beta = k - 1 +/- sqrt(k(k-2)) and D = k(k-2)."""

    k: int
    index: int
    s: int
    u: int

    @property
    def disc(self) -> int:
        return self.k * (self.k - 2)


def unit_alpha(k: int) -> QuadInt:
    """alpha = k - 1 + sqrt(k(k-2)); its conjugate beta = 1/alpha."""
    if k < 3:
        raise ValueError(f"polygon order must be >= 3, got {k}")
    return QuadInt(k - 1, 1, k * (k - 2))


def lucas_pair(k: int, i: int, method: str = "recurrence") -> LucasPair:
    """(s_i, u_i) for the unit alpha = k - 1 + sqrt(k(k-2)).

    ``method="recurrence"`` runs the order-2 linear recurrence with
    trace 2(k-1); ``method="power"`` reads the pair off alpha**i.
    The two are independent routes and are cross-checked in the tests.
    """
    if k < 3:
        raise ValueError(f"polygon order must be >= 3, got {k}")
    if i < 0:
        raise ValueError(f"negative index {i}")
    if method == "recurrence":
        trace = 2 * (k - 1)
        s0, s1, u0, u1 = 2, trace, 0, 2
        for _ in range(i):
            s0, s1 = s1, trace * s1 - s0
            u0, u1 = u1, trace * u1 - u0
        return LucasPair(k, i, s0, u0)
    if method == "power":
        z = quad_pow(unit_alpha(k), i)
        return LucasPair(k, i, 2 * z.a, 2 * z.b)
    raise ValueError(f"unknown method {method!r}")


def lucas_pairs(k: int, start: int = 0):
    """Yield LucasPair(k, i) for i = start, start+1, ... in O(1) work per term."""
    first = lucas_pair(k, start, method="power")
    second = lucas_pair(k, start + 1, method="power")
    trace = 2 * (k - 1)
    s0, s1, u0, u1 = first.s, second.s, first.u, second.u
    i = start
    while True:
        yield LucasPair(k, i, s0, u0)
        s0, s1 = s1, trace * s1 - s0
        u0, u1 = u1, trace * u1 - u0
        i += 1
