"""q-Stirling numbers of the first and second kind.

Two second-kind families are kept apart on purpose:

* :func:`stirling2_S` is the Carlitz alternating-sum family ``S(n, k)``,
  the coefficient of ``q^C(k,2) [x]_{k,q}`` in ``[x]_q^n``;
* :func:`stirling2_C` is the bivariate family built from Gaussian
  binomials of shifted top index.

They are linked by ``stirling2_C(n, k) == stirling2_S(n + k, n)``, which
the test-suite and the audit check rather than assume.
"""

from __future__ import annotations

from functools import lru_cache
from math import comb
from typing import List

from .exact import QRat
from .qcore import choose2, delta_q, gauss_binom, q_factorial, q_int

__all__ = [
    "stirling2_S",
    "stirling2_delta",
    "stirling2_C",
    "stirling1",
    "stirling1_row",
    "stirling1_closed",
    "stirling1_recursive",
    "classical_stirling1",
    "classical_stirling2",
]


@lru_cache(maxsize=None)
def stirling2_S(n: int, k: int) -> QRat:
    if n < 0 or k < 0:
        raise ValueError("stirling2_S needs n, k >= 0")
    total = QRat(0)
    for j in range(k + 1):
        term = QRat.q_power(choose2(j)) * QRat(gauss_binom(k, j)) * q_int(k - j) ** n
        total = total - term if j % 2 else total + term
    return total * QRat.q_power(-choose2(k)) / QRat(q_factorial(k))


def stirling2_delta(n: int, k: int) -> QRat:
    """q^-C(k,2)/[k]_q! times the k-th q-difference of x -> [x]_q^n at 0."""
    if n < 0 or k < 0:
        raise ValueError("stirling2_delta needs n, k >= 0")
    values = [q_int(j) ** n for j in range(k + 1)]
    return delta_q(k, values) * QRat.q_power(-choose2(k)) / QRat(q_factorial(k))


@lru_cache(maxsize=None)
def stirling2_C(n: int, k: int) -> QRat:
    if n < 0 or k < 0:
        raise ValueError("stirling2_C needs n, k >= 0")
    total = QRat(0)
    for j in range(k + 1):
        term = comb(k + n, k - j) * QRat(gauss_binom(j + n, j))
        total = total - term if (k - j) % 2 else total + term
    return total / (QRat.q() - 1) ** k


@lru_cache(maxsize=None)
def stirling1_row(n: int) -> tuple:
    """Coefficients of prod_{j<n} (X - [j]_q) in X, lowest power first."""
    if n < 0:
        raise ValueError("stirling1 needs n >= 0")
    row: List[QRat] = [QRat(1)]
    for j in range(n):
        qj = q_int(j)
        nxt = [QRat(0)] * (len(row) + 1)
        for i, c in enumerate(row):
            nxt[i + 1] = nxt[i + 1] + c
            nxt[i] = nxt[i] - qj * c
        row = nxt
    return tuple(row)


def stirling1(n: int, k: int) -> QRat:
    """Coefficient of [x]_q^k in q^C(n,2) [x]_{n,q}; zero for k outside 0..n."""
    if k < 0 or k > n:
        return QRat(0)
    return stirling1_row(n)[k]


def stirling1_closed(n: int, j: int) -> QRat:
    """Closed form for the first-kind numbers as a Gaussian-binomial sum."""
    if not 0 <= j <= n:
        raise ValueError("stirling1_closed needs 0 <= j <= n")
    total = QRat(0)
    for k in range(j, n + 1):
        term = QRat.q_power(choose2(k + 1) - n * k) * QRat(gauss_binom(n, k)) * comb(k, j)
        total = total - term if (n - k) % 2 else total + term
    return total * QRat.q_power(choose2(n)) / (QRat.q() - 1) ** (n - j)


@lru_cache(maxsize=None)
def stirling1_recursive(n: int, k: int) -> QRat:
    """Triangular recurrence s(n+1, k) = s(n, k-1) - [n]_q s(n, k)."""
    if n == 0:
        return QRat(1 if k == 0 else 0)
    if k < 0 or k > n:
        return QRat(0)
    return stirling1_recursive(n - 1, k - 1) - q_int(n - 1) * stirling1_recursive(n - 1, k)


@lru_cache(maxsize=None)
def classical_stirling2(n: int, k: int) -> int:
    if n == 0:
        return 1 if k == 0 else 0
    if k <= 0:
        return 0
    return k * classical_stirling2(n - 1, k) + classical_stirling2(n - 1, k - 1)


@lru_cache(maxsize=None)
def classical_stirling1(n: int, k: int) -> int:
    """Signed Stirling numbers of the first kind."""
    if n == 0:
        return 1 if k == 0 else 0
    if k <= 0:
        return 0
    return classical_stirling1(n - 1, k - 1) - (n - 1) * classical_stirling1(n - 1, k)
