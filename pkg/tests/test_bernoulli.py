from fractions import Fraction as F
from math import factorial

import pytest

from qbernoulli.bernoulli import (
    beta_neg_order,
    beta_neg_order_shifted,
    beta_order,
    beta_order_gauss,
    carlitz_beta,
    classical_bernoulli,
    classical_euler_at_zero,
    euler_neg_order,
    euler_neg_order_expanded,
    euler_order,
    moment_bosonic,
    moment_fermionic,
    prop6_check,
)
from qbernoulli.exact import Q, QRat, qrat_limit_q1, qrat_to_series
from qbernoulli.qcore import gauss_binom, q_factorial, q_int

CLASSICAL_B = [F(1), F(-1, 2), F(1, 6), F(0), F(-1, 30), F(0), F(1, 42), F(0), F(-1, 30), F(0), F(5, 66)]


def test_carlitz_examples():
    assert carlitz_beta(0) == QRat(1)
    assert carlitz_beta(1) == -1 / q_int(2)
    assert carlitz_beta(2) == Q / (q_int(2) * q_int(3))
    assert str(carlitz_beta(2)) == "(q)/(1 + 2q + 2q^2 + q^3)"


def test_classical_limits():
    assert [classical_bernoulli(m) for m in range(11)] == CLASSICAL_B
    assert [qrat_limit_q1(carlitz_beta(m)) for m in range(11)] == CLASSICAL_B
    # E_m(0): 1, -1/2, 0, 1/4, 0, -1/2
    assert [classical_euler_at_zero(m) for m in range(6)] == [1, F(-1, 2), 0, F(1, 4), 0, F(-1, 2)]
    assert [qrat_limit_q1(euler_order(m, 1, 0)) for m in range(8)] == [
        classical_euler_at_zero(m) for m in range(8)
    ]


def test_moments():
    assert moment_bosonic(0) == QRat(1)
    assert moment_bosonic(1) == 2 / q_int(2)
    assert moment_fermionic(0) == QRat(1)
    assert moment_fermionic(1) == (1 + Q) / (1 + Q**2)


def test_higher_order_examples():
    assert beta_order(1, 2, 0) == -2 * (Q + 2) / (q_int(2) * q_int(3))
    assert beta_order(0, 1, 0) == QRat(1)
    # index 0 carries the q-weights of the order-k measure, the reciprocal of [k]_q!/k!
    for k in range(1, 6):
        assert beta_order(0, k, 0) == factorial(k) / QRat(q_factorial(k))
    assert all(beta_order(m, 1, 0) == carlitz_beta(m) for m in range(11))
    for k in range(1, 9):
        assert beta_neg_order(0, k, 0) == QRat(q_factorial(k)) / factorial(k)
    assert beta_neg_order(1, 1, 0) == (1 - (1 + Q) / 2) / (1 - Q)


@pytest.mark.parametrize("k", range(1, 5))
def test_higher_order_forms_agree(k):
    for n in range(6):
        for x in range(3):
            assert beta_order(n, k, x) == beta_order_gauss(n, k, x)
            assert beta_neg_order(n, k, x) == beta_neg_order_shifted(n, k, x)


def test_euler_examples():
    assert euler_order(0, 1, 0) == QRat(1)
    assert euler_order(1, 1, 0) == -Q / (1 + Q**2)
    assert qrat_limit_q1(euler_order(1, 1, 0)) == F(-1, 2)
    assert euler_neg_order(0, 1, 0) == QRat(1)
    prod = QRat(1)
    for i in range(1, 4):
        prod = prod * (1 + Q**i)
    assert euler_neg_order(0, 3, 0) == prod / q_int(2) ** 3


def test_euler_neg_expansion():
    for k in range(5):
        for n in range(1, 5):
            assert euler_neg_order(k, n, 1) == euler_neg_order_expanded(k, n, 1)


@pytest.mark.parametrize("k,n,x,D", [(0, 1, 0, 8), (1, 1, 0, 12), (2, 2, 1, 16)])
def test_prop6_examples(k, n, x, D):
    res = prop6_check(k, n, x, D)
    assert res.equal
    assert res.closed == qrat_to_series(euler_order(k, n, x), D)


def test_gauss_integral_small_cases():
    # integral of binom(x, n)_q from the expansion [x-1] = ([x] - 1)/q
    from qbernoulli.padic import IntegrandSpec, closed_form

    assert closed_form(IntegrandSpec.gaussbinom(0)) == QRat(1)
    assert closed_form(IntegrandSpec.gaussbinom(1)) == carlitz_beta(1)
    want = (carlitz_beta(2) - carlitz_beta(1)) / (Q * q_int(2))
    assert closed_form(IntegrandSpec.gaussbinom(2)) == want
    assert QRat(gauss_binom(2, 1)) == q_int(2)


def test_argument_checks():
    with pytest.raises(ValueError):
        beta_order(1, 0, 0)
    with pytest.raises(ValueError):
        euler_order(1, 0, 0)
    with pytest.raises(ValueError):
        carlitz_beta(-1)
