import pytest

from qbernoulli.exact import Q, QRat, qrat_limit_q1
from qbernoulli.stirling import (
    classical_stirling1,
    classical_stirling2,
    stirling1,
    stirling1_closed,
    stirling1_recursive,
    stirling2_C,
    stirling2_delta,
    stirling2_S,
)


def test_second_kind_examples():
    assert all(stirling2_S(n, n) == QRat(1) for n in range(9))
    assert stirling2_S(3, 2) == 2 + Q
    assert all(stirling2_S(0, k) == QRat(0) for k in range(1, 7))
    assert stirling2_delta(1, 1) == QRat(1)
    assert stirling2_delta(2, 2) == QRat(1)


def test_bivariate_examples():
    assert stirling2_C(1, 1) == QRat(1)
    assert stirling2_C(2, 1) == 2 + Q
    assert all(stirling2_C(k, 0) == QRat(1) for k in range(7))


def test_first_kind_examples():
    assert all(stirling1(n, n) == QRat(1) for n in range(8))
    assert stirling1(2, 1) == QRat(-1) and stirling1(2, 0) == QRat(0)
    assert stirling1(3, 2) == -(2 + Q)
    assert stirling1(3, 1) == 1 + Q
    assert stirling1_closed(2, 1) == QRat(-1)
    assert stirling1_closed(3, 2) == -(2 + Q)
    assert all(stirling1_closed(n, n) == QRat(1) for n in range(7))


@pytest.mark.parametrize("n", range(9))
def test_families_cohere(n):
    for k in range(9):
        assert stirling2_S(n, k) == stirling2_delta(n, k)
        assert stirling2_C(n, k) == stirling2_S(n + k, n)
    for j in range(n + 1):
        assert stirling1_closed(n, j) == stirling1(n, j) == stirling1_recursive(n, j)


@pytest.mark.parametrize("n", range(8))
def test_classical_limits(n):
    for k in range(n + 1):
        assert qrat_limit_q1(stirling2_S(n, k)) == classical_stirling2(n, k)
        assert qrat_limit_q1(stirling1(n, k)) == classical_stirling1(n, k)


def test_bad_arguments():
    with pytest.raises(ValueError):
        stirling2_S(-1, 0)
    with pytest.raises(ValueError):
        stirling1_closed(2, 3)
    assert stirling1(2, 5) == QRat(0)
