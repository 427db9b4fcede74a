"""Polygonal and centered polygonal numbers, forward and inverse."""

from __future__ import annotations

from dataclasses import dataclass

from .exactmath import is_perfect_square


@dataclass(frozen=True)
class PolygonParams:
    k: int

    def __post_init__(self) -> None:
        if not isinstance(self.k, int) or self.k < 3:
            raise ValueError(f"polygon order must be an integer >= 3, got {self.k!r}")

    @property
    def disc(self) -> int:
        # (k-1)^2 - 1, never a square for k >= 3
        return self.k * (self.k - 2)


def _order(params: PolygonParams | int) -> int:
    if isinstance(params, PolygonParams):
        return params.k
    return PolygonParams(params).k


def polygonal(n: int, params: PolygonParams | int) -> int:
    """n-th k-gonal number ((k-2)n^2 + (4-k)n) / 2, for n >= 1."""
    k = _order(params)
    if n < 1:
        raise ValueError(f"polygonal index must be >= 1, got {n}")
    return ((k - 2) * n * n + (4 - k) * n) // 2


def centered(m: int, params: PolygonParams | int) -> int:
    """m-th centered k-gonal number (k m^2 - k m + 2) / 2, for m >= 1.

    m = 0 would give 1 again; index 1 is the canonical witness for 1.
    """
    k = _order(params)
    if m < 1:
        raise ValueError(f"centered index must be >= 1, got {m}")
    return (k * m * (m - 1) + 2) // 2


def invert_polygonal(x: int, params: PolygonParams | int) -> int | None:
    """Index n with polygonal(n, k) == x, or None."""
    k = _order(params)
    if x < 1:
        raise ValueError(f"value must be >= 1, got {x}")
    root = is_perfect_square((4 - k) ** 2 + 8 * (k - 2) * x)
    if root is None:
        return None
    n, rem = divmod(k - 4 + root, 2 * (k - 2))
    return n if rem == 0 and n >= 1 else None


def invert_centered(x: int, params: PolygonParams | int) -> int | None:
    """Index m >= 1 with centered(m, k) == x, or None."""
    k = _order(params)
    if x < 1:
        raise ValueError(f"value must be >= 1, got {x}")
    root = is_perfect_square(k * k + 8 * k * (x - 1))
    if root is None:
        return None
    m, rem = divmod(k + root, 2 * k)
    return m if rem == 0 and m >= 1 else None
