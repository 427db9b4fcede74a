import pytest
from hypothesis import given
from hypothesis import strategies as st

from kgonal.figurate import PolygonParams, centered, invert_centered, invert_polygonal, polygonal

orders = st.integers(3, 500)


def test_params():
    p = PolygonParams(5)
    assert p.disc == 15 == (5 - 1) ** 2 - 1
    with pytest.raises(ValueError):
        PolygonParams(2)


@pytest.mark.parametrize("n, k, value", [(4, 3, 10), (1, 3, 1), (1, 17, 1), (6, 5, 51)])
def test_polygonal_examples(n, k, value):
    assert polygonal(n, PolygonParams(k)) == value
    assert polygonal(n, k) == value


@pytest.mark.parametrize("m, k, value", [(3, 3, 10), (1, 9, 1), (36, 3, 1891), (5, 5, 51), (21, 4, 841)])
def test_centered_examples(m, k, value):
    assert centered(m, k) == value


@pytest.mark.parametrize("fn", [polygonal, centered])
def test_index_domain(fn):
    with pytest.raises(ValueError):
        fn(0, 3)
    with pytest.raises(ValueError):
        fn(1, 2)


def test_first_triangular_and_centered_triangular():
    assert [polygonal(n, 3) for n in range(1, 9)] == [1, 3, 6, 10, 15, 21, 28, 36]
    assert [polygonal(n, 4) for n in range(1, 7)] == [1, 4, 9, 16, 25, 36]
    assert [centered(m, 3) for m in range(1, 5)] == [1, 4, 10, 19]


def test_triangular_and_square_special_cases():
    for n in range(1, 10**4 + 1):
        assert polygonal(n, 3) == n * (n + 1) // 2
        assert polygonal(n, 4) == n * n


@given(orders, st.integers(2, 10**6))
def test_centered_difference_law(k, m):
    assert centered(m, k) - centered(m - 1, k) == k * (m - 1)


@given(orders, st.integers(1, 10**30))
def test_strictly_increasing(k, i):
    assert polygonal(i + 1, k) > polygonal(i, k)
    assert centered(i + 1, k) > centered(i, k)


@pytest.mark.parametrize(
    "x, k, n", [(10, 3, 4), (1, 3, 1), (1, 11, 1), (2, 3, None), (51, 5, 6), (1891, 3, 61), (7, 3, None)]
)
def test_invert_polygonal(x, k, n):
    assert invert_polygonal(x, k) == n


@pytest.mark.parametrize(
    "x, k, m", [(136, 3, 10), (1, 3, 1), (1, 8, 1), (841, 4, 21), (1891, 3, 36), (7, 3, None)]
)
def test_invert_centered(x, k, m):
    assert invert_centered(x, k) == m


@pytest.mark.parametrize("fn", [invert_polygonal, invert_centered])
def test_invert_domain(fn):
    with pytest.raises(ValueError):
        fn(0, 3)


@pytest.mark.parametrize("k", range(3, 31))
def test_round_trip(k):
    for i in range(1, 1001):
        assert invert_polygonal(polygonal(i, k), k) == i
        assert invert_centered(centered(i, k), k) == i


@given(orders, st.integers(1, 10**6))
def test_inversion_matches_scan(k, x):
    n = invert_polygonal(x, k)
    if n is not None:
        assert polygonal(n, k) == x
    m = invert_centered(x, k)
    if m is not None:
        assert centered(m, k) == x


@pytest.mark.parametrize("k", [3, 4, 5, 10])
def test_inversion_exhaustive_small(k):
    poly = {polygonal(n, k): n for n in range(1, 200)}
    cent = {centered(m, k): m for m in range(1, 200)}
    for x in range(1, 2000):
        assert invert_polygonal(x, k) == poly.get(x)
        assert invert_centered(x, k) == cent.get(x)
