"""q-integers, q-factorials, Gaussian binomials and the q-difference operator."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Sequence, Tuple

from .errors import ArityError, SeriesDomainError
from .exact import QPoly, QRat, QSeries, qrat

__all__ = [
    "q_int",
    "q_int_poly",
    "q_factorial",
    "gauss_binom",
    "gauss_binom_partition_oracle",
    "gauss_binom_recursive",
    "q_falling",
    "delta_q",
    "delta_q_operator",
    "q_binom_product",
    "q_binom_series",
    "choose2",
]


def choose2(k: int) -> int:
    """The classical binomial k(k-1)/2, valid for every integer k."""
    return k * (k - 1) // 2


@lru_cache(maxsize=None)
def q_int_poly(n: int) -> QPoly:
    """[n]_q = 1 + q + ... + q^(n-1) for n >= 0."""
    if n < 0:
        raise ValueError("q_int_poly needs n >= 0; use q_int for negative n")
    return QPoly([1] * n)


@lru_cache(maxsize=None)
def q_int(n: int) -> QRat:
    """(1 - q^n)/(1 - q) for any integer n.

    For negative n this is -q^n [-n]_q.
    """
    if n >= 0:
        return QRat(q_int_poly(n))
    return -QRat.q_power(n) * QRat(q_int_poly(-n))


@lru_cache(maxsize=None)
def q_factorial(n: int) -> QPoly:
    if n < 0:
        raise ValueError("q_factorial needs n >= 0")
    if n == 0:
        return QPoly([1])
    return q_factorial(n - 1) * q_int_poly(n)


@lru_cache(maxsize=None)
def gauss_binom(n: int, k: int) -> QPoly:
    """Gaussian binomial coefficient as a polynomial in q.

    Computed from the falling product over [k]_q! by exact division.
    Zero when k lies outside 0..n.
    """
    if n < 0:
        raise ValueError("gauss_binom needs n >= 0")
    if k < 0 or k > n:
        return QPoly()
    k = min(k, n - k)
    top = QPoly([1])
    for i in range(n - k + 1, n + 1):
        top = top * q_int_poly(i)
    return top.exact_div(q_factorial(k))


def _compositions(total: int, parts: int) -> Iterator[Tuple[int, ...]]:
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def gauss_binom_partition_oracle(n: int, k: int) -> QPoly:
    """Brute-force sum of q^(d_1 + 2 d_2 + ... + k d_k) over d_0 + ... + d_k = n - k."""
    if not 0 <= k <= n:
        raise ValueError("partition oracle needs 0 <= k <= n")
    counts: dict = {}
    for d in _compositions(n - k, k + 1):
        e = sum(i * di for i, di in enumerate(d))
        counts[e] = counts.get(e, 0) + 1
    top = max(counts)
    return QPoly([counts.get(e, 0) for e in range(top + 1)])


@lru_cache(maxsize=None)
def gauss_binom_recursive(n: int, k: int) -> QPoly:
    """Gaussian binomial via [n+1, k] = [n, k-1] + q^k [n, k]."""
    if k < 0 or k > n:
        return QPoly()
    if k == 0 or k == n:
        return QPoly([1])
    return gauss_binom_recursive(n - 1, k - 1) + QPoly.monomial(k) * gauss_binom_recursive(n - 1, k)


def q_falling(x: int, k: int) -> QRat:
    """[x]_q [x-1]_q ... [x-k+1]_q for integer x and k >= 0."""
    if k < 0:
        raise ValueError("q_falling needs k >= 0")
    out = QRat(1)
    for i in range(k):
        out = out * q_int(x - i)
    return out


def delta_q(n: int, f: Sequence) -> QRat:
    """n-th q-difference at 0 from the values f(0), ..., f(n).

    Sum over k of gauss_binom(n, k) (-1)^k q^C(k,2) f(n-k).
    """
    if len(f) != n + 1:
        raise ArityError(f"delta_q of order {n} needs {n + 1} values, got {len(f)}")
    total = QRat(0)
    for k in range(n + 1):
        term = QRat(gauss_binom(n, k)) * QRat.q_power(choose2(k)) * qrat(f[n - k])
        total = total - term if k % 2 else total + term
    return total


def delta_q_operator(n: int, f: Sequence) -> QRat:
    """Same quantity as :func:`delta_q`, obtained by applying E - q^(i-1) I in turn.

    Works on the finite table f(0..n); each factor shortens the table by one.
    """
    if len(f) != n + 1:
        raise ArityError(f"delta_q of order {n} needs {n + 1} values, got {len(f)}")
    vals = [qrat(v) for v in f]
    for i in range(1, n + 1):
        c = QRat.q_power(i - 1)
        vals = [vals[j + 1] - c * vals[j] for j in range(len(vals) - 1)]
    return vals[0]


def q_binom_product(n: int, a, b) -> QPoly:
    """Expand prod_{i=1..n} (a + b q^(i-1)) for rational a, b."""
    if n < 0:
        raise ValueError("q_binom_product needs n >= 0")
    a, b = Fraction(a), Fraction(b)
    out = QPoly([1])
    for i in range(1, n + 1):
        out = out * (QPoly([a]) + QPoly.monomial(i - 1, b))
    return out


def q_binom_series(n: int, j: int, order: int, sign: int = 1) -> QSeries:
    """Truncation of sum_k gauss_binom(n+k-1, k) b^k with b = sign * q^j.

    This is the expansion of prod_{i=1..n} (1 - b q^(i-1))^(-1) modulo q^order.
    """
    if n < 1:
        raise ValueError("q_binom_series needs n >= 1")
    if j < 1:
        raise SeriesDomainError(f"b = ±q^{j} does not give a power series; need j >= 1")
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    coeffs = [Fraction(0)] * order
    k = 0
    while k * j < order:
        g = gauss_binom(n + k - 1, k).coeffs
        c = sign**k
        base = k * j
        for e, v in enumerate(g):
            if base + e >= order:
                break
            coeffs[base + e] += c * v
        k += 1
    return QSeries(coeffs, order)
