from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from qbernoulli.errors import DivisionByZero, EvalAtPole, PoleAtOne, SeriesAtPole
from qbernoulli.exact import (
    Q,
    QPoly,
    QRat,
    QSeries,
    qrat,
    qrat_arith,
    qrat_eval,
    qrat_limit_q1,
    qrat_to_series,
)
from qbernoulli.qcore import gauss_binom, q_int


def test_inverse_pair_and_cancellation():
    assert qrat_arith("mul", 1 - Q, 1 / (1 - Q)) == QRat(1)
    assert qrat_arith("div", 1 - Q**2, 1 - Q) == 1 + Q


def test_add_example():
    r = qrat_arith("add", QRat(1), -1 / (1 + Q))
    assert r == Q / (1 + Q)
    assert qrat_eval(r, 2) == F(2, 3)


def test_division_by_zero():
    with pytest.raises(DivisionByZero):
        qrat_arith("div", Q, QRat(0))
    with pytest.raises(ZeroDivisionError):
        QRat(1) / 0


def test_eval_examples():
    assert qrat_eval(q_int(3), 2) == 7
    assert qrat_eval(1 / (1 + Q), 1) == F(1, 2)
    assert qrat_eval(Q / (q_int(2) * q_int(3)), 1) == F(1, 6)
    with pytest.raises(EvalAtPole):
        qrat_eval(1 / (1 + Q), -1)


def test_limits():
    assert qrat_limit_q1(q_int(5)) == 5
    assert qrat_limit_q1((1 - Q**3) / (1 - Q)) == 3
    assert qrat_limit_q1(QRat(gauss_binom(5, 2))) == 10
    with pytest.raises(PoleAtOne):
        qrat_limit_q1(1 / (1 - Q))


def test_series_examples():
    assert qrat_to_series(1 / (1 + Q), 4).coeffs == (1, -1, 1, -1)
    assert qrat_to_series(1 / (1 - Q), 3).coeffs == (1, 1, 1)
    assert qrat_to_series((1 + Q) / (1 + Q), 2).coeffs == (1, 0)
    with pytest.raises(SeriesAtPole):
        qrat_to_series(1 / Q, 3)


def test_canonical_strings():
    assert str(QRat(1)) == "1"
    assert str(-1 / (1 + Q)) == "(-1)/(1 + q)"
    assert str(Q / (q_int(2) * q_int(3))) == "(q)/(1 + 2q + 2q^2 + q^3)"
    assert str((Q - 1) / 2) == "(-1 + q)/(2)"
    assert str(QRat(F(-3, 4))) == "(-3)/(4)"
    assert str(QRat(-5)) == "-5"


def test_normal_form_is_structural():
    a = (Q**2 - 1) / (Q - 1)
    b = Q + 1
    assert a == b and hash(a) == hash(b)
    assert QRat.q_power(-2) * Q**2 == QRat(1)
    assert (2 * Q) / (4 * Q**2) == 1 / (2 * Q)


def test_latex():
    assert (-1 / (1 + Q)).latex() == r"\frac{-1}{1 + q}"


def test_qpoly_division():
    a = QPoly([1, 2, 1])
    quo, rem = divmod(a, QPoly([1, 1]))
    assert quo == QPoly([1, 1]) and rem == QPoly()


def test_series_product_truncates():
    s = QSeries([1, 1], 3) * QSeries([1, 1], 3)
    assert s.coeffs == (1, 2, 1)
    assert (s * s).coeffs == (1, 4, 6)


small = st.integers(-4, 4)
polys = st.lists(small, min_size=1, max_size=4).map(lambda c: QRat(QPoly(c)))
nonzero = polys.filter(lambda r: r != QRat(0))
rats = st.builds(lambda a, b: a / b, polys, nonzero)
points = st.sampled_from([F(2), F(-3), F(1, 2), F(5, 3), F(7)])


@settings(max_examples=60, deadline=None)
@given(rats, rats, rats)
def test_field_laws(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a and a * b == b * a
    assert a - a == QRat(0)


@settings(max_examples=60, deadline=None)
@given(rats, nonzero)
def test_inverse(a, b):
    assert (a / b) * b == a


@settings(max_examples=60, deadline=None)
@given(rats, rats, points)
def test_eval_is_a_homomorphism(a, b, x):
    try:
        ea, eb, es, ep = qrat_eval(a, x), qrat_eval(b, x), qrat_eval(a + b, x), qrat_eval(a * b, x)
    except EvalAtPole:
        return
    assert es == ea + eb and ep == ea * eb


@settings(max_examples=40, deadline=None)
@given(rats, rats)
def test_series_is_a_homomorphism(a, b):
    D = 8
    try:
        sa, sb = qrat_to_series(a, D), qrat_to_series(b, D)
    except SeriesAtPole:
        return
    assert qrat_to_series(a * b, D) == sa * sb
    assert qrat_to_series(a + b, D) == sa + sb


def test_coercions():
    assert qrat(3) == QRat(3)
    assert qrat(F(1, 2)) * 2 == QRat(1)
    assert qrat(QPoly([0, 1])) == Q
