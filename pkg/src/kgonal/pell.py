"""Pell equations x^2 - D y^2 = 1 and the norm-2 form x^2 - d y^2 = 2.

Fundamental solutions come from the periodic continued fraction of sqrt(D);
further solutions come from composition in Z[sqrt(D)].
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .exactmath import QuadInt, is_perfect_square, isqrt


@dataclass(frozen=True)
class PellSolution:
    x: int
    y: int
    disc: int
    norm: int = 1

    def __post_init__(self) -> None:
        if self.x * self.x - self.disc * self.y * self.y != self.norm:
            raise ValueError(
                f"({self.x}, {self.y}) does not satisfy x^2 - {self.disc} y^2 = {self.norm}"
            )
        if self.x <= 0 or self.y < 0:
            raise ValueError(f"expected x > 0, y >= 0, got ({self.x}, {self.y})")

    def as_quad(self) -> QuadInt:
        return QuadInt(self.x, self.y, self.disc)

    def __iter__(self):
        yield self.x
        yield self.y


@dataclass(frozen=True)
class CFExpansion:
    """sqrt(disc) = [a0; period, period, ...]."""

    disc: int
    a0: int
    period: list[int] = field(default_factory=list)

    def __str__(self) -> str:
        return f"sqrt({self.disc}) = [{self.a0}; ({', '.join(map(str, self.period))})]"


def _check_disc(D: int) -> None:
    if D < 2 or is_perfect_square(D) is not None:
        raise ValueError(f"D must be a non-square integer >= 2, got {D}")


def cf_expand(D: int) -> CFExpansion:
    """Minimal period of the continued fraction of sqrt(D).

    Uses the surd recurrence on (m + sqrt(D)) / q, which stays in integers.
    """
    _check_disc(D)
    a0 = isqrt(D)
    m, q, a = 0, 1, a0
    period = []
    while a != 2 * a0:
        m = a * q - m
        q = (D - m * m) // q
        a = (a0 + m) // q
        period.append(a)
    return CFExpansion(D, a0, period)


def pell_fundamental(D: int) -> PellSolution:
    """Least positive solution of x^2 - D y^2 = 1."""
    cf = cf_expand(D)
    # convergents p/q of [a0; period without its last term]
    p_prev, p = 1, cf.a0
    q_prev, q = 0, 1
    for a in cf.period[:-1]:
        p_prev, p = p, a * p + p_prev
        q_prev, q = q, a * q + q_prev
    if len(cf.period) % 2:
        # odd period: (p, q) solves the -1 equation; square it
        p, q = p * p + D * q * q, 2 * p * q
    return PellSolution(p, q, D, 1)


def compose(s: PellSolution, t: PellSolution) -> PellSolution:
    """(x, y) o (u, v) = (xu + D yv, xv + yu); norms multiply."""
    if s.disc != t.disc:
        raise ValueError(f"mismatched discriminants {s.disc} and {t.disc}")
    prod = s.as_quad() * t.as_quad()
    return PellSolution(prod.a, prod.b, s.disc, s.norm * t.norm)


def pell_solutions(D: int, count: int) -> list[PellSolution]:
    """The first ``count`` nontrivial solutions of x^2 - D y^2 = 1, increasing."""
    if count < 1:
        raise ValueError(f"count must be >= 1, got {count}")
    fund = pell_fundamental(D)
    out = [fund]
    while len(out) < count:
        out.append(compose(out[-1], fund))
    return out


def norm_two_solutions(d: int, seed: PellSolution | tuple[int, int], count: int) -> list[PellSolution]:
    """Solutions of x^2 - d y^2 = 2 in the class of ``seed``, seed first."""
    if count < 1:
        raise ValueError(f"count must be >= 1, got {count}")
    _check_disc(d)
    if not isinstance(seed, PellSolution):
        seed = PellSolution(*seed, disc=d, norm=2)
    if seed.disc != d or seed.norm != 2:
        raise ValueError(f"seed must solve x^2 - {d} y^2 = 2, got {seed}")
    unit = pell_fundamental(d)
    out = [seed]
    while len(out) < count:
        out.append(compose(out[-1], unit))
    return out


def eq2_check(k: int, A: int, b: int) -> bool:
    """Whether (A, b) solves [(kb - (k-2)A)/2]^2 - k(k-2)[(A-b)/2]^2 = 1.

    Raises ValueError if the halves are not integers.
    """
    if k < 3:
        raise ValueError(f"polygon order must be >= 3, got {k}")
    z2, w2 = k * b - (k - 2) * A, A - b
    if z2 % 2 or w2 % 2:
        raise ValueError(f"parity violation for k={k}, A={A}, b={b}")
    z, w = z2 // 2, w2 // 2
    return z * z - k * (k - 2) * w * w == 1
