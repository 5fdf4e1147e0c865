"""p-adic numbers with explicit precision and numeric q-Volkenborn integration.

A :class:`PadicNum` stores ``p**val * unit`` where ``unit`` is a p-adic unit
known modulo ``p**prec`` (relative precision).  Zero is ``val = inf``.

The integrators evaluate the level-N Riemann sums

    bosonic:    (1/[p^N]_q)    * sum_{j < p^N} q^j f(j)
    fermionic:  (1/[p^N]_{-q}) * sum_{j < p^N} (-q)^j f(j)

in integer arithmetic modulo a working power of p.  Only odd p and
q = 1 (mod p) are accepted.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterable, List, Optional, Tuple, Union

from .errors import DivisionByZero, PrecisionExhausted, TermBudgetExceeded
from .exact import QRat, qrat_eval

__all__ = [
    "PadicNum",
    "PadicQ",
    "IntegrandSpec",
    "padic_from_rational",
    "padic_arith",
    "volkenborn",
    "volkenborn_multi",
    "convergence_probe",
    "closed_form",
    "coset_weights",
    "valuation",
    "GUARD_DIGITS",
    "UNIVARIATE_BUDGET",
    "MULTIVARIATE_BUDGET",
]

GUARD_DIGITS = 4
UNIVARIATE_BUDGET = 5**7
MULTIVARIATE_BUDGET = 3**10

INF = math.inf


def valuation(n: int, p: int) -> Union[int, float]:
    """p-adic valuation of a nonzero integer; inf for 0."""
    if n == 0:
        return INF
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    return all(n % d for d in range(2, math.isqrt(n) + 1))


def _check_prime(p: int):
    if p < 3 or not _is_prime(p):
        raise ValueError(f"p must be an odd prime, got {p}")


@dataclass(frozen=True)
class PadicNum:
    p: int
    prec: int
    val: Union[int, float]
    unit: int

    def __post_init__(self):
        if self.val == INF:
            if self.unit != 0:
                raise ValueError("zero must have unit 0")
        elif not (0 < self.unit < self.p**self.prec and self.unit % self.p):
            raise ValueError("unit must be a residue in [1, p^prec) prime to p")

    # -- constructors ------------------------------------------------
    @classmethod
    def zero(cls, p: int) -> "PadicNum":
        return cls(p, 0, INF, 0)

    @classmethod
    def from_residue(cls, value: int, p: int, abs_prec: int) -> "PadicNum":
        """The element known as ``value`` modulo ``p**abs_prec``."""
        value %= p**abs_prec
        if value == 0:
            return cls.zero(p)
        v = valuation(value, p)
        rel = abs_prec - v
        return cls(p, rel, v, (value // p**v) % p**rel)

    # -- views ---------------------------------------------------------
    def is_zero(self) -> bool:
        return self.val == INF

    @property
    def abs_prec(self) -> Union[int, float]:
        return INF if self.is_zero() else self.val + self.prec

    def norm(self) -> Fraction:
        """|x|_p as an exact rational."""
        if self.is_zero():
            return Fraction(0)
        return Fraction(1, self.p) ** self.val

    def residue(self, digits: Optional[int] = None) -> int:
        """Integer representative modulo p**digits of an element of Z_p."""
        if self.is_zero():
            return 0
        if self.val < 0:
            raise ValueError("element is not p-adically integral")
        digits = self.abs_prec if digits is None else digits
        return (self.p**self.val * self.unit) % self.p**digits

    def __repr__(self):
        if self.is_zero():
            return f"PadicNum(0, p={self.p})"
        return f"PadicNum({self.p}^{self.val} * {self.unit} + O({self.p}^{self.abs_prec}))"

    def __str__(self):
        if self.is_zero():
            return "0"
        return f"{self.p}^{self.val} * {self.unit} + O({self.p}^{self.abs_prec})"

    # -- arithmetic ----------------------------------------------------
    def _same(self, other: "PadicNum"):
        if not isinstance(other, PadicNum):
            return NotImplemented
        if other.p != self.p:
            raise ValueError("p-adic numbers over different primes")
        return other

    def __neg__(self):
        if self.is_zero():
            return self
        return PadicNum(self.p, self.prec, self.val, (-self.unit) % self.p**self.prec)

    def __add__(self, other):
        other = self._same(other)
        if other is NotImplemented:
            return other
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        p = self.p
        v = min(self.val, other.val)
        top = min(self.abs_prec, other.abs_prec)
        s = self.unit * p ** (self.val - v) + other.unit * p ** (other.val - v)
        return PadicNum.from_residue(s, p, top - v)._shifted(v)

    def _shifted(self, v: int) -> "PadicNum":
        if self.is_zero():
            return self
        return PadicNum(self.p, self.prec, self.val + v, self.unit)

    def __sub__(self, other):
        other = self._same(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __mul__(self, other):
        other = self._same(other)
        if other is NotImplemented:
            return other
        if self.is_zero() or other.is_zero():
            return PadicNum.zero(self.p)
        prec = min(self.prec, other.prec)
        m = self.p**prec
        return PadicNum(self.p, prec, self.val + other.val, (self.unit * other.unit) % m)

    def inverse(self) -> "PadicNum":
        if self.is_zero():
            raise DivisionByZero("p-adic division by zero")
        m = self.p**self.prec
        return PadicNum(self.p, self.prec, -self.val, pow(self.unit, -1, m))

    def __truediv__(self, other):
        other = self._same(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()


def padic_from_rational(r, p: int, N: int) -> PadicNum:
    """Canonical (valuation, unit mod p^N) form of a rational number."""
    _check_prime(p)
    if N < 1:
        raise PrecisionExhausted("precision must be at least one digit")
    r = Fraction(r)
    if r == 0:
        return PadicNum.zero(p)
    num, den = r.numerator, r.denominator
    vn, vd = valuation(num, p), valuation(den, p)
    num //= p**vn
    den //= p**vd
    m = p**N
    return PadicNum(p, N, vn - vd, (num * pow(den, -1, m)) % m)


def padic_arith(op: str, a: PadicNum, b: PadicNum) -> PadicNum:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown operation {op!r}")


@dataclass(frozen=True)
class PadicQ:
    """The deformation parameter q, a rational with q = 1 (mod p)."""

    p: int
    q: Fraction

    def __post_init__(self):
        _check_prime(self.p)
        q = Fraction(self.q)
        object.__setattr__(self, "q", q)
        if q.denominator % self.p:
            d = q - 1
            if d == 0 or valuation(d.numerator, self.p) >= 1:
                return
        raise ValueError(f"q = {q} must satisfy |1 - q|_p < 1 for p = {self.p}")

    @classmethod
    def from_offset(cls, p: int, t: int) -> "PadicQ":
        """q = 1 + t p."""
        return cls(p, Fraction(1 + t * p))

    def residue(self, digits: int) -> int:
        m = self.p**digits
        return (self.q.numerator * pow(self.q.denominator, -1, m)) % m

    def as_padic(self, digits: int) -> PadicNum:
        return padic_from_rational(self.q, self.p, digits)

    def evaluate(self, value: QRat, digits: int) -> PadicNum:
        """A rational function of q, evaluated at this q as a p-adic number."""
        return padic_from_rational(qrat_eval(value, self.q), self.p, digits)


# -- integrand catalog -------------------------------------------------

_UNIVARIATE = ("powq", "gaussbinom", "qexp")
_MULTIVARIATE = ("multiexp", "eulerpow")


@dataclass(frozen=True)
class IntegrandSpec:
    """One entry of the fixed integrand catalog.

    ``powq m``          x -> [x]_q^m
    ``gaussbinom n``    x -> Gaussian binomial (x choose n)_q
    ``qexp m``          x -> q^(m x)
    ``multiexp k, i``   (x_1..x_k) -> q^(sum_l (k - l + i) x_l)
    ``eulerpow n, k, x``(x_1..x_n) -> [x_1 + ... + x_n + x]_q^k q^(sum_j (n - j) x_j)
    """

    tag: str
    params: Tuple[int, ...]

    def __post_init__(self):
        arity = {"powq": 1, "gaussbinom": 1, "qexp": 1, "multiexp": 2, "eulerpow": 3}
        if self.tag not in arity:
            raise ValueError(f"unknown integrand {self.tag!r}")
        if len(self.params) != arity[self.tag]:
            raise ValueError(f"{self.tag} takes {arity[self.tag]} parameter(s)")
        if any(x < 0 for x in self.params):
            raise ValueError("integrand parameters must be nonnegative")
        if self.tag == "multiexp" and self.params[0] < 1:
            raise ValueError("multiexp needs k >= 1 variables")
        if self.tag == "eulerpow" and self.params[0] < 1:
            raise ValueError("eulerpow needs n >= 1 variables")

    @classmethod
    def powq(cls, m: int):
        return cls("powq", (m,))

    @classmethod
    def gaussbinom(cls, n: int):
        return cls("gaussbinom", (n,))

    @classmethod
    def qexp(cls, m: int):
        return cls("qexp", (m,))

    @classmethod
    def multiexp(cls, k: int, i: int):
        return cls("multiexp", (k, i))

    @classmethod
    def eulerpow(cls, n: int, k: int, x: int):
        return cls("eulerpow", (n, k, x))

    @classmethod
    def parse(cls, text: str) -> "IntegrandSpec":
        """Parse the command-line form, e.g. ``powq:2`` or ``eulerpow:1,1,0``."""
        tag, _, rest = text.partition(":")
        if not rest:
            raise ValueError(f"integrand {text!r} needs parameters after ':'")
        try:
            params = tuple(int(x) for x in rest.split(","))
        except ValueError:
            raise ValueError(f"bad integrand parameters in {text!r}") from None
        return cls(tag.strip().lower(), params)

    @property
    def multivariate(self) -> bool:
        return self.tag in _MULTIVARIATE

    @property
    def nvars(self) -> int:
        return self.params[0] if self.multivariate else 1

    def __str__(self):
        return f"{self.tag}:{','.join(map(str, self.params))}"


# -- Riemann sums --------------------------------------------------------

def _measure_sign(measure: str) -> int:
    if measure == "bosonic":
        return 1
    if measure == "fermionic":
        return -1
    raise ValueError(f"measure must be 'bosonic' or 'fermionic', got {measure!r}")


def _q_int_table(qr: int, count: int, mod: int) -> List[int]:
    """[0]_q, [1]_q, ..., [count-1]_q modulo mod, with no division."""
    out = [0] * count
    acc, power = 0, 1
    for j in range(count):
        out[j] = acc
        acc = (acc + power) % mod
        power = power * qr % mod
    return out


def _gauss_column(qr: int, n: int, count: int, mod: int) -> List[int]:
    """(j choose n)_q for j = 0..count-1 modulo mod, via the q-Pascal rule."""
    qn = [pow(qr, i, mod) for i in range(n + 1)]
    row = [1] + [0] * n
    out = []
    for _ in range(count):
        out.append(row[n])
        nxt = [1] + [0] * n
        for i in range(1, n + 1):
            nxt[i] = (row[i - 1] + qn[i] * row[i]) % mod
        row = nxt
    return out


def _values(f: IntegrandSpec, qr: int, count: int, mod: int) -> List[int]:
    if f.tag == "powq":
        m = f.params[0]
        return [pow(v, m, mod) for v in _q_int_table(qr, count, mod)]
    if f.tag == "gaussbinom":
        return _gauss_column(qr, f.params[0], count, mod)
    if f.tag == "qexp":
        step = pow(qr, f.params[0], mod)
        out, acc = [], 1
        for _ in range(count):
            out.append(acc)
            acc = acc * step % mod
        return out
    raise ValueError(f"{f.tag} is not a univariate integrand")


def _weights(qr: int, sign: int, count: int, mod: int) -> List[int]:
    base = (sign * qr) % mod
    out, acc = [], 1
    for _ in range(count):
        out.append(acc)
        acc = acc * base % mod
    return out


def coset_weights(q: PadicQ, N: int, measure: str = "bosonic", digits: int = 8) -> List[PadicNum]:
    """Measure of each coset j + p^N Z_p, j < p^N, as p-adic numbers."""
    sign = _measure_sign(measure)
    M = q.p**N
    work = digits + N
    mod = q.p**work
    w = _weights(q.residue(work), sign, M, mod)
    total = PadicNum.from_residue(sum(w), q.p, work)
    return [PadicNum.from_residue(x, q.p, work) / total for x in w]


def _normalizer(qr: int, sign: int, M: int, mod: int) -> int:
    return sum(_weights(qr, sign, M, mod)) % mod


def _loss(measure: str, N: int, k: int) -> int:
    # dividing by [p^N]_q costs N digits per variable; [p^N]_{-q} is a unit
    return N * k if measure == "bosonic" else 0


def volkenborn(
    f: IntegrandSpec,
    q: PadicQ,
    N: int,
    measure: str = "bosonic",
    digits: Optional[int] = None,
    budget: int = UNIVARIATE_BUDGET,
) -> PadicNum:
    """Level-N Riemann sum of a univariate catalog integrand.

    ``digits`` is the absolute precision wanted in the result (default
    N + GUARD_DIGITS); the working modulus is widened to cover the loss
    from dividing by [p^N]_q.
    """
    if f.multivariate:
        raise ValueError(f"{f} is multivariate; use volkenborn_multi")
    sign = _measure_sign(measure)
    if N < 0:
        raise ValueError("N must be >= 0")
    p = q.p
    M = p**N
    if M > budget:
        raise TermBudgetExceeded(f"p^N = {M} exceeds the univariate budget {budget}")
    digits = N + GUARD_DIGITS if digits is None else digits
    if digits < 1:
        raise PrecisionExhausted("requested precision must be positive")
    work = digits + _loss(measure, N, 1)
    mod = p**work
    qr = q.residue(work)
    vals = _values(f, qr, M, mod)
    w = _weights(qr, sign, M, mod)
    s = sum(a * b for a, b in zip(vals, w)) % mod
    total = sum(w) % mod
    return PadicNum.from_residue(s, p, work) / PadicNum.from_residue(total, p, work)


def _multi_direct(f: IntegrandSpec, qr: int, sign: int, M: int, mod: int) -> int:
    k = f.params[0]
    w = _weights(qr, sign, M, mod)
    if f.tag == "multiexp":
        i = f.params[1]
        tables = []
        for l in range(1, k + 1):
            step = pow(qr, k - l + i, mod)
            col, acc = [], 1
            for _ in range(M):
                col.append(acc)
                acc = acc * step % mod
            tables.append(col)
        s = 0
        for xs in itertools.product(range(M), repeat=k):
            term = 1
            for l, x in enumerate(xs):
                term = term * tables[l][x] * w[x] % mod
            s += term
        return s % mod
    n, power, shift = f.params
    qint = _q_int_table(qr, n * (M - 1) + shift + 1, mod)
    qpow = [pow(qr, e, mod) for e in range(n)]
    s = 0
    for xs in itertools.product(range(M), repeat=n):
        term = pow(qint[sum(xs) + shift], power, mod)
        for j, x in enumerate(xs, start=1):
            term = term * pow(qpow[n - j], x, mod) * w[x] % mod
        s += term
    return s % mod


def _multi_factored(f: IntegrandSpec, q: PadicQ, N: int, measure: str, digits: int) -> PadicNum:
    if f.tag == "multiexp":
        k, i = f.params
        out = padic_from_rational(1, q.p, digits)
        for l in range(1, k + 1):
            out = out * volkenborn(IntegrandSpec.qexp(k - l + i), q, N, measure, digits)
        return out
    n, power, shift = f.params
    # [y]^k = (1-q)^-k sum_l C(k,l) (-1)^l q^(l y); each division by 1-q costs v(1-q) digits
    lost = power * (valuation((q.q - 1).numerator, q.p) if q.q != 1 else 0)
    inner = digits + lost
    total = PadicNum.zero(q.p)
    for l in range(power + 1):
        term = padic_from_rational((-1) ** l * comb(power, l) * q.q ** (l * shift), q.p, inner)
        for j in range(1, n + 1):
            term = term * volkenborn(IntegrandSpec.qexp(l + n - j), q, N, measure, inner)
        total = total + term
    one_minus_q = padic_from_rational(1 - q.q, q.p, inner)
    for _ in range(power):
        total = total / one_minus_q
    return total


def volkenborn_multi(
    f: IntegrandSpec,
    q: PadicQ,
    N: int,
    measure: str = "bosonic",
    digits: Optional[int] = None,
    factorize: bool = False,
    budget: int = MULTIVARIATE_BUDGET,
) -> PadicNum:
    """k-fold iterated Riemann sum at level N.

    With ``factorize=True`` the integrand is split into a product of
    univariate sums (after binomial expansion for ``eulerpow``) instead of
    summing over all p^(kN) tuples.
    """
    if not f.multivariate:
        return volkenborn(f, q, N, measure, digits)
    sign = _measure_sign(measure)
    k = f.nvars
    p = q.p
    M = p**N
    digits = N + GUARD_DIGITS if digits is None else digits
    if digits < 1:
        raise PrecisionExhausted("requested precision must be positive")
    if factorize:
        return _multi_factored(f, q, N, measure, digits)
    if M**k > budget:
        raise TermBudgetExceeded(f"p^(kN) = {M ** k} exceeds the multivariate budget {budget}")
    work = digits + _loss(measure, N, k)
    mod = p**work
    qr = q.residue(work)
    s = _multi_direct(f, qr, sign, M, mod)
    total = PadicNum.from_residue(_normalizer(qr, sign, M, mod), p, work)
    out = PadicNum.from_residue(s, p, work)
    for _ in range(k):
        out = out / total
    return out


def closed_form(f: IntegrandSpec, measure: str = "bosonic") -> QRat:
    """Exact value of the integral of a catalog integrand, as a function of q."""
    from . import bernoulli as be
    from .qcore import choose2, q_factorial
    from .stirling import stirling1

    _measure_sign(measure)
    bos = measure == "bosonic"
    moment = be.moment_bosonic if bos else be.moment_fermionic
    if f.tag == "powq":
        m = f.params[0]
        return be.carlitz_beta(m) if bos else be.euler_order(m, 1, 0)
    if f.tag == "gaussbinom":
        n = f.params[0]
        total = QRat(0)
        for k in range(n + 1):
            total = total + stirling1(n, k) * closed_form(IntegrandSpec.powq(k), measure)
        return total * QRat.q_power(-choose2(n)) / QRat(q_factorial(n))
    if f.tag == "qexp":
        return moment(f.params[0])
    if f.tag == "multiexp":
        k, i = f.params
        out = QRat(1)
        for l in range(1, k + 1):
            out = out * moment(k - l + i)
        return out
    n, power, shift = f.params
    if bos:
        return be.beta_order(power, n, shift)
    return be.euler_order(power, n, shift)


def convergence_probe(
    f: IntegrandSpec,
    q: PadicQ,
    N_range: Iterable[int],
    measure: str = "bosonic",
    reference: Optional[QRat] = None,
    digits: Optional[int] = None,
) -> List[Tuple[int, Union[int, float]]]:
    """Valuation of (level-N Riemann sum - reference) for each N.

    The valuation is ``inf`` when the difference vanishes to the working
    precision.  ``reference`` defaults to :func:`closed_form`.
    """
    if reference is None:
        reference = closed_form(f, measure)
    rows = []
    for N in N_range:
        d = N + GUARD_DIGITS if digits is None else digits
        value = volkenborn_multi(f, q, N, measure, d) if f.multivariate else volkenborn(f, q, N, measure, d)
        ref = q.evaluate(reference, d + 8)
        diff = value - ref
        rows.append((N, diff.val))
    return rows
