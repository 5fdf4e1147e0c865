"""Dense univariate polynomials over the integers.

A polynomial is a tuple of Python ints, lowest degree first, with no
trailing zeros; the zero polynomial is the empty tuple.  These helpers are
the kernel under :mod:`qbernoulli.exact` and are not part of the public API.
"""

from __future__ import annotations

from math import gcd
from typing import Optional, Sequence, Tuple

ZPoly = Tuple[int, ...]

ZERO: ZPoly = ()
ONE: ZPoly = (1,)

# below this size schoolbook multiplication beats Kronecker packing
_KRONECKER_MIN = 24


def norm(c: Sequence[int]) -> ZPoly:
    n = len(c)
    while n and not c[n - 1]:
        n -= 1
    return tuple(c[:n])


def monomial(k: int, c: int = 1) -> ZPoly:
    if not c:
        return ZERO
    return (0,) * k + (c,)


def add(a: ZPoly, b: ZPoly) -> ZPoly:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return norm(out)


def sub(a: ZPoly, b: ZPoly) -> ZPoly:
    out = list(a) + [0] * max(0, len(b) - len(a))
    for i, c in enumerate(b):
        out[i] -= c
    return norm(out)


def neg(a: ZPoly) -> ZPoly:
    return tuple(-c for c in a)


def scale(a: ZPoly, c: int) -> ZPoly:
    if not c:
        return ZERO
    if c == 1:
        return a
    return tuple(x * c for x in a)


def shift(a: ZPoly, k: int) -> ZPoly:
    """Multiply by q**k (k >= 0)."""
    if not a or not k:
        return a
    return (0,) * k + a


def low_order(a: ZPoly) -> int:
    """Largest k with q**k dividing a (a nonzero)."""
    k = 0
    while not a[k]:
        k += 1
    return k


def _maxnorm(a: ZPoly) -> int:
    return max(abs(c) for c in a)


def _pack(a: ZPoly, bits: int) -> int:
    v = 0
    for c in reversed(a):
        v = (v << bits) + c
    return v


def _unpack(v: int, bits: int, length: int) -> ZPoly:
    base = 1 << bits
    half = base >> 1
    mask = base - 1
    out = []
    for _ in range(length):
        r = v & mask
        if r >= half:
            r -= base
        out.append(r)
        v = (v - r) >> bits
    return norm(out)


def mul(a: ZPoly, b: ZPoly) -> ZPoly:
    if not a or not b:
        return ZERO
    la, lb = len(a), len(b)
    if la == 1:
        return scale(b, a[0])
    if lb == 1:
        return scale(a, b[0])
    if min(la, lb) < _KRONECKER_MIN:
        out = [0] * (la + lb - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return norm(out)
    bound = _maxnorm(a) * _maxnorm(b) * min(la, lb)
    bits = bound.bit_length() + 2
    return _unpack(_pack(a, bits) * _pack(b, bits), bits, la + lb - 1)


def power(a: ZPoly, e: int) -> ZPoly:
    result = ONE
    while e:
        if e & 1:
            result = mul(result, a)
        e >>= 1
        if e:
            a = mul(a, a)
    return result


def evaluate(a: ZPoly, x: int) -> int:
    v = 0
    for c in reversed(a):
        v = v * x + c
    return v


def content(a: ZPoly) -> int:
    """Content of a carrying the sign of the leading coefficient."""
    g = 0
    for c in a:
        g = gcd(g, c)
        if g == 1:
            break
    if not g:
        return 0
    return g if a[-1] > 0 else -g


def primitive(a: ZPoly) -> Tuple[int, ZPoly]:
    """Split a = c * p with p primitive and p's leading coefficient > 0."""
    if not a:
        return 0, ZERO
    c = content(a)
    if c == 1:
        return 1, a
    return c, tuple(x // c for x in a)


def divexact(a: ZPoly, b: ZPoly) -> Optional[ZPoly]:
    """Return a / b if b divides a over the integers, else None."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    if not a:
        return ZERO
    db = len(b) - 1
    if len(a) - 1 < db:
        return None
    if db == 0:
        c = b[0]
        if any(x % c for x in a):
            return None
        return tuple(x // c for x in a)
    lb = b[-1]
    rem = list(a)
    quot = [0] * (len(a) - db)
    for i in range(len(a) - 1 - db, -1, -1):
        t = rem[i + db]
        if not t:
            continue
        qc, r = divmod(t, lb)
        if r:
            return None
        quot[i] = qc
        for j in range(db + 1):
            rem[i + j] -= qc * b[j]
    if any(rem[:db]):
        return None
    return norm(quot)


def pseudo_rem(a: ZPoly, b: ZPoly) -> ZPoly:
    db = len(b) - 1
    lb = b[-1]
    rem = list(a)
    while len(rem) - 1 >= db and rem:
        t = rem[-1]
        k = len(rem) - 1 - db
        rem = [x * lb for x in rem]
        for j in range(db + 1):
            rem[k + j] -= t * b[j]
        rem = list(norm(rem))
    return tuple(rem)


def _prs_gcd(a: ZPoly, b: ZPoly) -> ZPoly:
    _, a = primitive(a)
    _, b = primitive(b)
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = pseudo_rem(a, b)
        a, b = b, primitive(r)[1]
    return a


def _interpolate(h: int, xi: int) -> ZPoly:
    out = []
    half = xi // 2
    while h:
        r = h % xi
        if r > half:
            r -= xi
        out.append(r)
        h = (h - r) // xi
    return norm(out)


def _heu_gcd(a: ZPoly, b: ZPoly) -> Optional[ZPoly]:
    xi = 2 * min(_maxnorm(a), _maxnorm(b)) + 29
    for _ in range(6):
        h = gcd(evaluate(a, xi), evaluate(b, xi))
        cand = primitive(_interpolate(h, xi))[1]
        if cand and divexact(a, cand) is not None and divexact(b, cand) is not None:
            return cand
        xi = xi * 73794 // 27011
    return None


def pgcd(a: ZPoly, b: ZPoly) -> ZPoly:
    """Primitive gcd of two integer polynomials, positive leading coefficient.

    gcd(0, 0) is taken to be 1.
    """
    if not a:
        return primitive(b)[1] if b else ONE
    if not b:
        return primitive(a)[1]
    if len(a) == 1 or len(b) == 1:
        k = min(low_order(a), low_order(b))
        return monomial(k) if k else ONE
    # powers of q are split off first; they are common in Laurent-type values
    ka, kb = low_order(a), low_order(b)
    k = min(ka, kb)
    a, b = a[ka:], b[kb:]
    if len(a) == 1 or len(b) == 1:
        return monomial(k)
    _, a = primitive(a)
    _, b = primitive(b)
    if a == b:
        g = a
    else:
        g = _heu_gcd(a, b)
        if g is None:
            g = _prs_gcd(a, b)
    return shift(g, k)
