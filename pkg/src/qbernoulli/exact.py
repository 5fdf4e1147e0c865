"""Exact arithmetic in Q(q) and in truncated power series over Q.

Three value types live here:

``QPoly``
    a polynomial in q with rational coefficients (dense, ascending powers).
``QRat``
    a reduced rational function of q.  The canonical form has coprime
    numerator and denominator and a monic denominator, so two ``QRat``
    values are equal as functions exactly when they compare equal.
``QSeries``
    a power series in q truncated at a fixed order D.

Rational numbers are :class:`fractions.Fraction` throughout.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from numbers import Rational
from typing import Iterable, Sequence, Tuple, Union

from . import _zpoly as zp
from .errors import DivisionByZero, EvalAtPole, PoleAtOne, SeriesAtPole

__all__ = [
    "QPoly",
    "QRat",
    "QSeries",
    "Q",
    "qrat",
    "qrat_arith",
    "qrat_eval",
    "qrat_limit_q1",
    "qrat_to_series",
    "format_zpoly",
]


def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


def _clear_denominators(coeffs: Sequence[Fraction]) -> Tuple[Fraction, zp.ZPoly]:
    """Write a rational polynomial as s * P with P primitive over Z."""
    if not coeffs:
        return Fraction(0), zp.ZERO
    d = lcm(*(c.denominator for c in coeffs))
    ints = zp.norm([int(c * d) for c in coeffs])
    c, prim = zp.primitive(ints)
    return Fraction(c, d), prim


def format_zpoly(p: Sequence[int], var: str = "q") -> str:
    """Render an integer polynomial in ascending powers, e.g. ``1 + 2q^2``."""
    terms = [(e, c) for e, c in enumerate(p) if c]
    if not terms:
        return "0"
    out = []
    for idx, (e, c) in enumerate(terms):
        mag = abs(c)
        if e == 0:
            body = str(mag)
        else:
            mono = var if e == 1 else f"{var}^{e}"
            body = mono if mag == 1 else f"{mag}{mono}"
        if idx == 0:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append((" - " if c < 0 else " + ") + body)
    return "".join(out)


class QPoly:
    """Polynomial in q with rational coefficients, lowest power first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        c = [_frac(x) for x in coeffs]
        while c and not c[-1]:
            c.pop()
        self.coeffs: Tuple[Fraction, ...] = tuple(c)

    @classmethod
    def monomial(cls, k: int, c=1) -> "QPoly":
        return cls([0] * k + [c])

    @classmethod
    def _from_int(cls, p: zp.ZPoly, s: Fraction = Fraction(1)) -> "QPoly":
        return cls(s * c for c in p)

    def _as_int(self) -> Tuple[Fraction, zp.ZPoly]:
        return _clear_denominators(self.coeffs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, QPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Rational)):
            return self.coeffs == QPoly([other]).coeffs
        if isinstance(other, QRat):
            return QRat(self) == other
        return NotImplemented

    def __hash__(self):
        return hash(QRat(self))

    def __repr__(self):
        return f"QPoly({str(self)!r})"

    def __str__(self):
        return str(QRat(self))

    def __neg__(self):
        return QPoly(-c for c in self.coeffs)

    def __add__(self, other):
        other = _as_qpoly(other)
        if other is None:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        return QPoly((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n))

    __radd__ = __add__

    def __sub__(self, other):
        other = _as_qpoly(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _as_qpoly(other)
        if other is None:
            return NotImplemented
        sa, pa = self._as_int()
        sb, pb = other._as_int()
        return QPoly._from_int(zp.mul(pa, pb), sa * sb)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative power of a polynomial; use QRat")
        s, p = self._as_int()
        return QPoly._from_int(zp.power(p, e), s**e)

    def __divmod__(self, other):
        other = _as_qpoly(other)
        if other is None:
            return NotImplemented
        if not other:
            raise DivisionByZero("polynomial division by zero")
        rem = list(self.coeffs)
        b = other.coeffs
        db = len(b) - 1
        quot = [Fraction(0)] * max(0, len(rem) - db)
        for i in range(len(rem) - 1 - db, -1, -1):
            t = rem[i + db] / b[-1]
            quot[i] = t
            if t:
                for j in range(db + 1):
                    rem[i + j] -= t * b[j]
        return QPoly(quot), QPoly(rem[:db])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __truediv__(self, other):
        return QRat(self) / other

    def __rtruediv__(self, other):
        return qrat(other) / QRat(self)

    def __call__(self, x):
        x = _frac(x)
        v = Fraction(0)
        for c in reversed(self.coeffs):
            v = v * x + c
        return v

    def exact_div(self, other: "QPoly") -> "QPoly":
        """Quotient self / other, which must leave no remainder."""
        quot, rem = divmod(self, other)
        if rem:
            raise ArithmeticError(f"{other} does not divide {self}")
        return quot


def _as_qpoly(x):
    if isinstance(x, QPoly):
        return x
    if isinstance(x, (int, Rational)):
        return QPoly([x])
    return None


class QRat:
    """Element of Q(q) in canonical reduced form.

    Internally the value is ``scale * num / den`` with ``num`` and ``den``
    primitive integer polynomials with positive leading coefficients and no
    common factor.  That triple is unique, so equality and hashing are
    structural.  The public :attr:`num`/:attr:`den` views present the
    equivalent monic-denominator form.
    """

    __slots__ = ("_s", "_n", "_d")

    def __init__(self, value=0):
        if isinstance(value, QRat):
            self._s, self._n, self._d = value._s, value._n, value._d
        elif isinstance(value, QPoly):
            s, p = value._as_int()
            self._set(s, p, zp.ONE)
        elif isinstance(value, (int, Rational)):
            v = _frac(value)
            self._set(v, zp.ONE if v else zp.ZERO, zp.ONE)
        else:
            raise TypeError(f"cannot make a QRat from {type(value).__name__}")

    def _set(self, s: Fraction, n: zp.ZPoly, d: zp.ZPoly):
        if not s or not n:
            self._s, self._n, self._d = Fraction(0), zp.ZERO, zp.ONE
        else:
            self._s, self._n, self._d = s, n, d

    @classmethod
    def _raw(cls, s: Fraction, n: zp.ZPoly, d: zp.ZPoly) -> "QRat":
        obj = cls.__new__(cls)
        obj._set(s, n, d)
        return obj

    @classmethod
    def _build(cls, s: Fraction, n: zp.ZPoly, d: zp.ZPoly, reduce: bool = True) -> "QRat":
        if not d:
            raise DivisionByZero("zero denominator")
        if not s or not n:
            return cls._raw(Fraction(0), zp.ZERO, zp.ONE)
        if reduce:
            g = zp.pgcd(n, d)
            if g != zp.ONE:
                n = zp.divexact(n, g)
                d = zp.divexact(d, g)
        cn, n = zp.primitive(n)
        cd, d = zp.primitive(d)
        return cls._raw(s * Fraction(cn, cd), n, d)

    @classmethod
    def from_fraction(cls, num: QPoly, den: QPoly) -> "QRat":
        sn, pn = _clear_denominators(num.coeffs)
        sd, pd = _clear_denominators(den.coeffs)
        if not pd:
            raise DivisionByZero("zero denominator")
        return cls._build(sn / sd if sn else Fraction(0), pn, pd)

    @classmethod
    def q(cls) -> "QRat":
        return cls._raw(Fraction(1), (0, 1), zp.ONE)

    @classmethod
    def q_power(cls, k: int) -> "QRat":
        """q**k for any integer k."""
        if k >= 0:
            return cls._raw(Fraction(1), zp.monomial(k), zp.ONE)
        return cls._raw(Fraction(1), zp.ONE, zp.monomial(-k))

    # -- views ---------------------------------------------------------
    @property
    def num(self) -> QPoly:
        if not self._n:
            return QPoly()
        return QPoly._from_int(self._n, self._s * self._d[-1])

    @property
    def den(self) -> QPoly:
        return QPoly._from_int(self._d, Fraction(1, self._d[-1]))

    def is_zero(self) -> bool:
        return not self._n

    def __bool__(self):
        return bool(self._n)

    def is_polynomial(self) -> bool:
        return len(self._d) == 1

    def is_constant(self) -> bool:
        return len(self._d) == 1 and len(self._n) <= 1

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not a constant")
        return self._s * (self._n[0] if self._n else 0)

    def as_qpoly(self) -> QPoly:
        if not self.is_polynomial():
            raise ValueError(f"{self} is not a polynomial in q")
        return QPoly._from_int(self._n, self._s / self._d[0])

    # -- comparison / hashing -----------------------------------------
    def __eq__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self._s == other._s and self._n == other._n and self._d == other._d

    def __hash__(self):
        if len(self._d) == 1 and len(self._n) <= 1:
            return hash(self._s * (self._n[0] if self._n else 0))
        return hash((self._s, self._n, self._d))

    # -- arithmetic ----------------------------------------------------
    def __neg__(self):
        return QRat._raw(-self._s, self._n, self._d)

    def __pos__(self):
        return self

    def __add__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        if not other._n:
            return self
        if not self._n:
            return other
        sa, sb = self._s, other._s
        ka, kb = sa.denominator, sb.denominator
        fa = sa.numerator * kb
        fb = sb.numerator * ka
        if self._d == other._d:
            n = zp.add(zp.scale(self._n, fa), zp.scale(other._n, fb))
            return QRat._build(Fraction(1, ka * kb), n, self._d)
        g = zp.pgcd(self._d, other._d)
        da = zp.divexact(self._d, g) if g != zp.ONE else self._d
        db = zp.divexact(other._d, g) if g != zp.ONE else other._d
        n = zp.add(zp.mul(zp.scale(self._n, fa), db), zp.mul(zp.scale(other._n, fb), da))
        return QRat._build(Fraction(1, ka * kb), n, zp.mul(self._d, db))

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        if not self._n or not other._n:
            return QRat._raw(Fraction(0), zp.ZERO, zp.ONE)
        g1 = zp.pgcd(self._n, other._d)
        g2 = zp.pgcd(other._n, self._d)
        na, db = self._n, other._d
        if g1 != zp.ONE:
            na, db = zp.divexact(na, g1), zp.divexact(db, g1)
        nb, da = other._n, self._d
        if g2 != zp.ONE:
            nb, da = zp.divexact(nb, g2), zp.divexact(da, g2)
        return QRat._build(self._s * other._s, zp.mul(na, nb), zp.mul(da, db), reduce=False)

    __rmul__ = __mul__

    def inverse(self) -> "QRat":
        if not self._n:
            raise DivisionByZero("division by the zero rational function")
        return QRat._raw(1 / self._s, self._d, self._n)

    def __truediv__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, e: int):
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            return self.inverse() ** (-e)
        if e == 0:
            return QRat(1)
        return QRat._raw(self._s**e, zp.power(self._n, e), zp.power(self._d, e))

    # -- evaluation ----------------------------------------------------
    def __call__(self, q0) -> Fraction:
        return qrat_eval(self, q0)

    def limit_q1(self) -> Fraction:
        return qrat_limit_q1(self)

    def series(self, order: int) -> "QSeries":
        return qrat_to_series(self, order)

    # -- text ----------------------------------------------------------
    def __str__(self):
        if not self._n:
            return "0"
        s = self._s
        top = format_zpoly(zp.scale(self._n, s.numerator))
        bottom = zp.scale(self._d, s.denominator)
        if bottom == zp.ONE:
            return top
        return f"({top})/({format_zpoly(bottom)})"

    def __repr__(self):
        return f"QRat({str(self)!r})"

    def latex(self) -> str:
        """LaTeX fraction with the same integer normalization as ``str``."""
        if not self._n:
            return "0"
        s = self._s
        bottom = zp.scale(self._d, s.denominator)
        top = _latex_poly(zp.scale(self._n, s.numerator))
        if bottom == zp.ONE:
            return top
        return rf"\frac{{{top}}}{{{_latex_poly(bottom)}}}"


def _latex_poly(p: zp.ZPoly) -> str:
    text = format_zpoly(p)
    out = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch == "^":
            j = i + 1
            while j < len(text) and text[j].isdigit():
                j += 1
            out.append("^{" + text[i + 1 : j] + "}")
            i = j
            continue
        out.append(ch)
        i += 1
    return "".join(out)


def _coerce(x):
    if isinstance(x, QRat):
        return x
    if isinstance(x, (int, Rational, QPoly)):
        return QRat(x)
    return None


def qrat(x: Union[int, Fraction, QPoly, QRat]) -> QRat:
    """Coerce an integer, Fraction, or QPoly to QRat."""
    r = _coerce(x)
    if r is None:
        raise TypeError(f"cannot make a QRat from {type(x).__name__}")
    return r


Q = QRat.q()


def qrat_arith(op: str, a: QRat, b: QRat) -> QRat:
    """Apply one of ``add``, ``sub``, ``mul``, ``div`` to two QRat values."""
    a, b = qrat(a), qrat(b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown operation {op!r}")


def qrat_eval(a: QRat, q0) -> Fraction:
    """Exact value of a at q = q0."""
    a = qrat(a)
    q0 = _frac(q0)
    if not a._n:
        return Fraction(0)
    # integer Horner on numerator/denominator of q0 keeps this in ints
    p, r = q0.numerator, q0.denominator
    n_deg = len(a._n) - 1
    d_deg = len(a._d) - 1
    nv = sum(c * p**i * r ** (n_deg - i) for i, c in enumerate(a._n))
    dv = sum(c * p**i * r ** (d_deg - i) for i, c in enumerate(a._d))
    if dv == 0:
        raise EvalAtPole(f"{a} has a pole at q = {q0}")
    return a._s * Fraction(nv, dv) * Fraction(r) ** (d_deg - n_deg)


def _divide_by_q_minus_1(p: zp.ZPoly) -> zp.ZPoly:
    # synthetic division by (q - 1); caller guarantees p(1) == 0
    n = len(p)
    out = [0] * (n - 1)
    acc = 0
    for i in range(n - 1, 0, -1):
        acc += p[i]
        out[i - 1] = acc
    return zp.norm(out)


def qrat_limit_q1(a: QRat) -> Fraction:
    """Limit of a as q -> 1, by cancelling (q - 1) factors exactly."""
    a = qrat(a)
    if not a._n:
        return Fraction(0)
    n, d = a._n, a._d
    while sum(n) == 0 and sum(d) == 0:
        n = _divide_by_q_minus_1(n)
        d = _divide_by_q_minus_1(d)
    dv = sum(d)
    if dv == 0:
        raise PoleAtOne(f"{a} has a pole at q = 1")
    return a._s * Fraction(sum(n), dv)


class QSeries:
    """Power series in q known modulo q**order."""

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs: Iterable, order: int):
        if order < 0:
            raise ValueError("series order must be nonnegative")
        c = [_frac(x) for x in coeffs][:order]
        c += [Fraction(0)] * (order - len(c))
        self.order = order
        self.coeffs: Tuple[Fraction, ...] = tuple(c)

    @classmethod
    def from_poly(cls, p, order: int) -> "QSeries":
        if isinstance(p, QRat):
            return qrat_to_series(p, order)
        p = _as_qpoly(p)
        return cls(p.coeffs, order)

    def __eq__(self, other):
        if not isinstance(other, QSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.order, self.coeffs))

    def __repr__(self):
        body = ", ".join(str(c) for c in self.coeffs)
        return f"QSeries([{body}], order={self.order})"

    def __getitem__(self, i):
        return self.coeffs[i]

    def __len__(self):
        return self.order

    def _other(self, other) -> "QSeries":
        if isinstance(other, QSeries):
            if other.order != self.order:
                raise ValueError("series orders differ")
            return other
        if isinstance(other, (int, Rational, QPoly, QRat)):
            return QSeries.from_poly(other, self.order)
        raise TypeError(f"cannot combine QSeries with {type(other).__name__}")

    def __neg__(self):
        return QSeries((-c for c in self.coeffs), self.order)

    def __add__(self, other):
        o = self._other(other)
        return QSeries((a + b for a, b in zip(self.coeffs, o.coeffs)), self.order)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        return QSeries((a - b for a, b in zip(self.coeffs, o.coeffs)), self.order)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Rational)):
            f = _frac(other)
            return QSeries((f * c for c in self.coeffs), self.order)
        o = self._other(other)
        d = self.order
        out = [Fraction(0)] * d
        for i, a in enumerate(self.coeffs):
            if a:
                for j in range(d - i):
                    b = o.coeffs[j]
                    if b:
                        out[i + j] += a * b
        return QSeries(out, d)

    __rmul__ = __mul__

    def shift(self, k: int) -> "QSeries":
        """Multiply by q**k, k >= 0."""
        if k < 0:
            raise ValueError("negative shift would need a Laurent series")
        return QSeries([0] * k + list(self.coeffs), self.order)


def qrat_to_series(a: QRat, order: int) -> QSeries:
    """Maclaurin coefficients of a through q**(order-1)."""
    a = qrat(a)
    if order < 0:
        raise ValueError("series order must be nonnegative")
    d = a._d
    if not d[0]:
        raise SeriesAtPole(f"denominator of {a} vanishes at q = 0")
    n = a._n
    d0 = d[0]
    out = []
    for i in range(order):
        acc = Fraction(n[i] if i < len(n) else 0)
        for j in range(1, min(i, len(d) - 1) + 1):
            acc -= d[j] * out[i - j]
        out.append(acc / d0)
    return QSeries((a._s * c for c in out), order)
