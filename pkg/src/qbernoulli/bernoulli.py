"""Carlitz q-Bernoulli numbers, higher-order q-Bernoulli and q-Euler numbers.

Every value is an exact :class:`~qbernoulli.exact.QRat`.  The argument x is
a nonnegative integer and enters only through the monomial q^(i x).

Index/order convention: ``beta_order(n, k, x)`` is the index-n value of
order k; ``euler_order(k, n, x)`` is the index-k value of order n.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Tuple

from .exact import QRat, QSeries, qrat_to_series
from .qcore import gauss_binom, q_binom_series, q_factorial, q_int

__all__ = [
    "carlitz_beta",
    "carlitz_beta_table",
    "moment_bosonic",
    "moment_fermionic",
    "bosonic_block",
    "beta_order",
    "beta_order_gauss",
    "beta_neg_order",
    "beta_neg_order_shifted",
    "euler_order",
    "euler_neg_order",
    "euler_neg_order_expanded",
    "prop6_check",
    "Prop6Result",
    "classical_bernoulli",
    "classical_euler_at_zero",
]

_Q = QRat.q()


@lru_cache(maxsize=None)
def carlitz_beta_table(m: int) -> Tuple[QRat, ...]:
    """beta_0, ..., beta_m from the umbral recursion q(q beta + 1)^k - beta_k = [k == 1]."""
    if m < 0:
        raise ValueError("carlitz_beta needs m >= 0")
    if m == 0:
        return (QRat(1),)
    prev = carlitz_beta_table(m - 1)
    k = m
    acc = QRat(0)
    for i, b in enumerate(prev):
        acc = acc + comb(k, i) * QRat.q_power(i) * b
    rhs = (1 if k == 1 else 0) - _Q * acc
    return prev + (rhs / (QRat.q_power(k + 1) - 1),)


def carlitz_beta(m: int) -> QRat:
    return carlitz_beta_table(m)[m]


@lru_cache(maxsize=None)
def classical_bernoulli(m: int) -> Fraction:
    """Classical B_m with B_1 = -1/2, from sum_{j<=m} C(m+1, j) B_j = 0."""
    if m == 0:
        return Fraction(1)
    return -sum(comb(m + 1, j) * classical_bernoulli(j) for j in range(m)) / (m + 1)


@lru_cache(maxsize=None)
def classical_euler_at_zero(m: int) -> Fraction:
    """E_m(0) for the classical Euler polynomials, from E_m(1) + E_m(0) = 2 [m == 0]."""
    if m < 0:
        raise ValueError("classical_euler_at_zero needs m >= 0")
    rest = sum(comb(m, j) * classical_euler_at_zero(j) for j in range(m))
    return (Fraction(2 if m == 0 else 0) - rest) / 2


def moment_bosonic(n: int) -> QRat:
    """(n+1)/[n+1]_q, the mu_q integral of q^(n x)."""
    if n < 0:
        raise ValueError("moment_bosonic needs n >= 0")
    return QRat(n + 1) / q_int(n + 1)


def moment_fermionic(n: int) -> QRat:
    """[2]_q/(1 + q^(n+1)), the mu_{-q} integral of q^(n x)."""
    if n < 0:
        raise ValueError("moment_fermionic needs n >= 0")
    return q_int(2) / (1 + QRat.q_power(n + 1))


@lru_cache(maxsize=None)
def bosonic_block(i: int, k: int) -> QRat:
    """prod_{j=1..k} (i+j)/[i+j]_q, the k-fold mu_q integral of q^(sum_l (k-l+i) x_l)."""
    out = QRat(1)
    for j in range(1, k + 1):
        out = out * moment_bosonic(i + j - 1)
    return out


def _gauss_block(i: int, k: int) -> QRat:
    return QRat(comb(i + k, k) * factorial(k)) / (QRat(gauss_binom(i + k, k)) * QRat(q_factorial(k)))


def _check_order(n: int, k: int, x: int):
    if n < 0 or x < 0:
        raise ValueError("index and x must be >= 0")
    if k < 1:
        raise ValueError("order must be >= 1")


def beta_order(n: int, k: int, x: int = 0) -> QRat:
    """q-Bernoulli polynomial of index n and order k at the integer x."""
    _check_order(n, k, x)
    total = QRat(0)
    for i in range(n + 1):
        term = comb(n, i) * QRat.q_power(i * x) * bosonic_block(i, k)
        total = total - term if i % 2 else total + term
    return total / (1 - _Q) ** n


def beta_order_gauss(n: int, k: int, x: int = 0) -> QRat:
    """Same value as :func:`beta_order`, with each block written through Gaussian binomials."""
    _check_order(n, k, x)
    total = QRat(0)
    for i in range(n + 1):
        term = comb(n, i) * QRat.q_power(i * x) * _gauss_block(i, k)
        total = total - term if i % 2 else total + term
    return total / (1 - _Q) ** n


def beta_neg_order(n: int, k: int, x: int = 0) -> QRat:
    """Negative-order analogue: each block of :func:`beta_order_gauss` inverted."""
    _check_order(n, k, x)
    kf = QRat(q_factorial(k)) / factorial(k)
    total = QRat(0)
    for i in range(n + 1):
        term = comb(n, i) * QRat.q_power(i * x) * QRat(gauss_binom(i + k, k)) / comb(i + k, k)
        total = total - term if i % 2 else total + term
    return total * kf / (1 - _Q) ** n


def beta_neg_order_shifted(n: int, k: int, x: int = 0) -> QRat:
    """Negative-order value with C(n,i)/C(i+k,k) rewritten as C(n+k, n-i)/C(n+k, k)."""
    _check_order(n, k, x)
    kf = QRat(q_factorial(k)) / factorial(k)
    total = QRat(0)
    for i in range(n + 1):
        c = Fraction(comb(n + k, n - i), comb(n + k, k))
        term = c * QRat.q_power(i * x) * QRat(gauss_binom(i + k, k))
        total = total - term if i % 2 else total + term
    return total * kf / (1 - _Q) ** n


@lru_cache(maxsize=None)
def _fermionic_denominator(l: int, n: int) -> QRat:
    out = QRat(1)
    for j in range(1, n + 1):
        out = out * (1 + QRat.q_power(l + j))
    return out


def euler_order(k: int, n: int, x: int = 0) -> QRat:
    """q-Euler number of index k and order n at the integer x."""
    if k < 0 or x < 0:
        raise ValueError("index and x must be >= 0")
    if n < 1:
        raise ValueError("order must be >= 1")
    total = QRat(0)
    for l in range(k + 1):
        term = comb(k, l) * QRat.q_power(l * x) / _fermionic_denominator(l, n)
        total = total - term if l % 2 else total + term
    return q_int(2) ** n * total / (1 - _Q) ** k


def euler_neg_order(k: int, n: int, x: int = 0) -> QRat:
    """Negative-order q-Euler polynomial: the fermionic blocks multiplied instead of divided."""
    if k < 0 or x < 0:
        raise ValueError("index and x must be >= 0")
    if n < 1:
        raise ValueError("order must be >= 1")
    total = QRat(0)
    for l in range(k + 1):
        term = comb(k, l) * QRat.q_power(l * x) * _fermionic_denominator(l, n)
        total = total - term if l % 2 else total + term
    return total / ((1 - _Q) ** k * q_int(2) ** n)


def euler_neg_order_expanded(k: int, n: int, x: int = 0) -> QRat:
    """:func:`euler_neg_order` with each product expanded by the finite q-binomial theorem."""
    if k < 0 or x < 0:
        raise ValueError("index and x must be >= 0")
    if n < 1:
        raise ValueError("order must be >= 1")
    total = QRat(0)
    for l in range(k + 1):
        inner = QRat(0)
        for i in range(n + 1):
            inner = inner + QRat(gauss_binom(n, i)) * QRat.q_power(i * (i - 1) // 2 + (l + 1) * i)
        term = comb(k, l) * QRat.q_power(l * x) * inner
        total = total - term if l % 2 else total + term
    return total / ((1 - _Q) ** k * q_int(2) ** n)


@dataclass(frozen=True)
class Prop6Result:
    equal: bool
    closed: QSeries
    expanded: QSeries


def prop6_check(k: int, n: int, x: int, order: int) -> Prop6Result:
    """Compare euler_order(k, n, x) with its geometric-series expansion mod q^order.

    The expansion replaces each 1/prod(1 + q^(l+i)) by the q-binomial series
    with b = -q^(l+1).
    """
    if order < 1:
        raise ValueError("order must be >= 1")
    closed = qrat_to_series(euler_order(k, n, x), order)
    prefactor = qrat_to_series(q_int(2) ** n / (1 - _Q) ** k, order)
    acc = QSeries([], order)
    for l in range(k + 1):
        inner = q_binom_series(n, l + 1, order, sign=-1).shift(l * x)
        acc = acc + inner * ((-1) ** l * comb(k, l))
    expanded = prefactor * acc
    return Prop6Result(closed == expanded, closed, expanded)
