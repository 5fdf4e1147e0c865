"""Identity audit over a fixed catalog of q-calculus identities.

Each :class:`IdentityCase` evaluates both sides of one identity over a
grid of integer parameters in exact arithmetic (or, for integral
representations, through p-adic Riemann sums with a valuation criterion)
and reports the first counterexample.

Cases marked ``must-pass`` gate the exit status.  ``audit-only`` cases
record the status of a known-wrong variant; when they fail the result is
``expected-fail-confirmed`` together with the counterexample.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import comb, factorial
from typing import Callable, Dict, List, Mapping, Optional, Sequence, Tuple, Union

from . import __version__
from .bernoulli import (
    beta_neg_order,
    beta_neg_order_shifted,
    beta_order,
    beta_order_gauss,
    bosonic_block,
    carlitz_beta,
    classical_bernoulli,
    classical_euler_at_zero,
    euler_neg_order,
    euler_neg_order_expanded,
    euler_order,
    moment_bosonic,
    prop6_check,
)
from .errors import UnknownCaseId
from .exact import Q, QRat, qrat_limit_q1, qrat_to_series
from .padic import (
    IntegrandSpec,
    PadicQ,
    closed_form,
    convergence_probe,
    coset_weights,
    volkenborn,
    volkenborn_multi,
)
from .qcore import (
    choose2,
    delta_q,
    delta_q_operator,
    gauss_binom,
    gauss_binom_partition_oracle,
    gauss_binom_recursive,
    q_binom_product,
    q_binom_series,
    q_factorial,
    q_falling,
    q_int,
)
from .stirling import (
    classical_stirling1,
    classical_stirling2,
    stirling1,
    stirling1_closed,
    stirling1_recursive,
    stirling2_C,
    stirling2_delta,
    stirling2_S,
)

__all__ = [
    "CATALOG_VERSION",
    "IdentityCase",
    "AuditResult",
    "AuditReport",
    "CATALOG",
    "OUT_OF_SCOPE",
    "NOTES",
    "anchors_covered",
    "case_ids",
    "get_case",
    "run_case",
    "run_audit",
]

CATALOG_VERSION = "1"

MUST = "must-pass"
AUDIT = "audit-only"

Value = Union[QRat, str]
CheckResult = Tuple[bool, Value, Value]


@dataclass(frozen=True)
class IdentityCase:
    id: str
    expected: str
    ranges: Mapping[str, Tuple[int, int]]
    description: str
    anchors: Tuple[str, ...]
    check: Callable[..., CheckResult]
    where: Optional[Callable[..., bool]] = None
    scalable: Tuple[str, ...] = ()

    def grid(self, ranges: Optional[Mapping[str, Tuple[int, int]]] = None):
        ranges = dict(self.ranges if ranges is None else ranges)
        names = list(ranges)
        spans = [range(lo, hi + 1) for lo, hi in ranges.values()]
        for values in product(*spans):
            params = dict(zip(names, values))
            if self.where is None or self.where(**params):
                yield params


@dataclass
class AuditResult:
    id: str
    expected: str
    status: str
    ranges: Dict[str, Tuple[int, int]]
    checked: int
    failed: int
    counterexample: Optional[dict]
    ms: Optional[float] = None

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "expected": self.expected,
            "status": self.status,
            "ranges": {k: [lo, hi] for k, (lo, hi) in self.ranges.items()},
            "checked": self.checked,
            "failed": self.failed,
            "counterexample": self.counterexample,
            "ms": self.ms,
        }


@dataclass
class AuditReport:
    results: List[AuditResult]
    version: str = __version__
    catalog_version: str = CATALOG_VERSION
    out_of_scope: Tuple[str, ...] = ()
    notes: Tuple[str, ...] = ()

    @property
    def summary(self) -> Dict[str, int]:
        counts = {"pass": 0, "fail": 0, "expected_fail_confirmed": 0}
        for r in self.results:
            counts[r.status.replace("-", "_")] += 1
        return counts

    @property
    def ok(self) -> bool:
        return all(r.status != "fail" for r in self.results)

    def to_dict(self) -> dict:
        return {
            "version": self.version,
            "catalog_version": self.catalog_version,
            "cases": [r.to_dict() for r in self.results],
            "summary": self.summary,
            "notes": list(self.notes),
            "out_of_scope": list(self.out_of_scope),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"


# -- helpers -------------------------------------------------------------

def _g(n: int, k: int) -> QRat:
    if n < 0:
        return QRat(0)
    return QRat(gauss_binom(n, k))


def _qf(n: int) -> QRat:
    return QRat(q_factorial(n))


def _qp(k: int) -> QRat:
    return QRat.q_power(k)


def _same(lhs: QRat, rhs: QRat) -> CheckResult:
    return lhs == rhs, lhs, rhs


def _all_same(*values: QRat) -> CheckResult:
    first = values[0]
    for v in values[1:]:
        if v != first:
            return False, first, v
    return True, first, first


def _sum(terms) -> QRat:
    total = QRat(0)
    for t in terms:
        total = total + t
    return total


# -- Gaussian binomials and the q-difference operator ----------------------

def _eq01(x, k):
    return _same(_g(x, k) * _qf(k), q_falling(x, k))


def _eq02_form1(n, k):
    return _same(_g(n + 1, k), _g(n, k - 1) + _qp(k) * _g(n, k))


def _eq02_form2(n, k):
    return _same(_g(n + 1, k), _qp(n - k) * _g(n, k - 1) + _g(n, k))


def _eq02_form2_fixed(n, k):
    return _same(_g(n + 1, k), _qp(n - k + 1) * _g(n, k - 1) + _g(n, k))


def _eq03(n, k):
    return _all_same(
        _g(n, k),
        QRat(gauss_binom_recursive(n, k)),
        QRat(gauss_binom_partition_oracle(n, k)),
    )


def _eq06(n, x):
    ok1, l1, r1 = _same(_qp(n) * q_int(x - n), q_int(x) - q_int(n))
    if not ok1:
        return ok1, l1, r1
    return _same(q_int(-x), -_qp(-x) * q_int(x))


def _eq07_eq09(m, n):
    values = [q_int(j) ** m for j in range(n + 1)]
    return _same(delta_q(n, values), delta_q_operator(n, values))


def _eq08(m, x):
    values = [q_int(j) ** m for j in range(x + 1)]
    rhs = _sum(_g(x, n) * delta_q(n, values[: n + 1]) for n in range(x + 1))
    return _same(q_int(x) ** m, rhs)


def _eq16(l, x):
    rhs = _sum(comb(l, m) * (Q - 1) ** m * q_int(x) ** m for m in range(l + 1))
    return _same(_qp(l * x), rhs)


# -- Stirling numbers ----------------------------------------------------------

def _eq10_eq11(n, k):
    return _same(stirling2_S(n, k), stirling2_delta(n, k))


def _eq12_c2(n, x):
    rhs = _sum(_g(x, k) * _qf(k) * stirling2_S(n, k) * _qp(choose2(k)) for k in range(n + 1))
    return _same(q_int(x) ** n, rhs)


def _eq12_printed(n, x):
    rhs = _sum(_g(x, k) * _qf(k) * stirling2_S(k, n - k) * _qp(choose2(k)) for k in range(n + 1))
    return _same(q_int(x) ** n, rhs)


def _eq15(n, x):
    lhs = (1 - Q) ** n * q_falling(x, n)
    prod_form = QRat(1)
    for i in range(1, n + 1):
        prod_form = prod_form * (1 - _qp(x - n + 1) * _qp(i - 1))
    sum_form = _sum(
        (-1) ** l * _g(n, l) * _qp(choose2(l) + l * (x - n + 1)) for l in range(n + 1)
    )
    return _all_same(lhs, prod_form, sum_form)


def _eq17(n, x):
    lhs = _sum((-1) ** l * _g(n, l) * _qp(choose2(l) + l * (x - n + 1)) for l in range(n + 1))
    rhs = QRat(0)
    for m in range(n + 1):
        inner = _sum(
            (-1) ** l * comb(l, m) * _g(n, l) * _qp(choose2(l) - l * n + l) for l in range(m, n + 1)
        )
        rhs = rhs + (Q - 1) ** m * inner * q_int(x) ** m
    scale = (1 - Q) ** n
    return _same(lhs / scale, rhs / scale)


def _eq18_bridge(n, k):
    return _same(stirling2_C(n, k), stirling2_S(n + k, n))


def _eq18_inverse(n, k):
    rhs = _sum(comb(n, j) * (Q - 1) ** (j - k) * stirling2_C(k, j - k) for j in range(k, n + 1))
    return _same(_g(n, k), rhs)


def _eq19(n, t):
    lhs = _qp(n * t)
    falling = _sum((Q - 1) ** k * _qp(choose2(k)) * _g(n, k) * q_falling(t, k) for k in range(n + 1))
    powers = _sum(
        _sum((Q - 1) ** k * _g(n, k) * stirling1(k, m) for k in range(m, n + 1)) * q_int(t) ** m
        for m in range(n + 1)
    )
    return _all_same(lhs, falling, powers)


def _eq21(n, m):
    rhs = _sum((Q - 1) ** (k - m) * _g(n, k) * stirling1(k, m) for k in range(m, n + 1))
    return _same(QRat(comb(n, m)), rhs)


def _eq22(n, x):
    lhs = _qp(choose2(n)) * _g(x, n) * _qf(n)
    mid = q_falling(x, n) * _qp(choose2(n))
    rhs = _sum(stirling1(n, k) * q_int(x) ** k for k in range(n + 1))
    return _all_same(lhs, mid, rhs)


def _eq24(n, j):
    return _same(stirling1_closed(n, j), stirling1(n, j))


def _thm3(n, j):
    return _same(stirling1_closed(n, j), stirling1_recursive(n, j))


def _final_s1(n, x):
    lhs = _qp(choose2(n)) * q_falling(x, n)
    shifted = QRat(1)
    for j in range(n):
        shifted = shifted * _qp(j) * q_int(x - j)
    differences = QRat(1)
    for k in range(n):
        differences = differences * (q_int(x) - q_int(k))
    ok, a, b = _all_same(lhs, shifted, differences)
    if not ok:
        return ok, a, b
    expanded = _sum(stirling1(n, k) * q_int(x) ** k for k in range(n + 1)) / _qf(n)
    return _same(_qp(choose2(n)) * _g(x, n), expanded)


def _final_s1_printed(n, x):
    prod_upper = QRat(1)
    for k in range(n + 1):
        prod_upper = prod_upper * (q_int(x) - q_int(k))
    return _same(_qp(choose2(n)) * _g(x, n), prod_upper / _qf(n))


# -- Bernoulli numbers ---------------------------------------------------------

def _integral_gauss(n: int) -> QRat:
    return closed_form(IntegrandSpec.gaussbinom(n), "bosonic")


def _eq13_printed(n):
    rhs = (-1) ** n * _qp((n + 1) - choose2(n + 1)) / q_int(n + 1)
    return _same(_integral_gauss(n), rhs)


_P5 = PadicQ.from_offset(5, 1)
_P3 = PadicQ.from_offset(3, 1)


def _probe_text(rows) -> str:
    return "valuations " + ", ".join(f"N={N}:{v}" for N, v in rows)


def _converges(rows, floor: int) -> bool:
    vals = [v for _, v in rows]
    return all(a <= b for a, b in zip(vals, vals[1:])) and vals[-1] >= floor


def _eq13_corrected(n):
    corrected = (-1) ** n * _qp(-choose2(n)) / q_int(n + 1)
    ok, lhs, rhs = _same(_integral_gauss(n), corrected)
    if not ok:
        return ok, lhs, rhs
    rows = convergence_probe(IntegrandSpec.gaussbinom(n), _P5, range(2, 7), "bosonic", corrected)
    return _converges(rows, 3), _probe_text(rows), "non-decreasing, >= 3 at N=6"


def _thm1_printed(m):
    rhs = Q * _sum(
        (-1) ** k * _qf(k) / q_int(k + 1) * stirling2_C(k, m - k) for k in range(m + 1)
    )
    return _same(carlitz_beta(m), rhs)


def _thm1_corrected(m):
    rhs = _sum((-1) ** k * _qf(k) / q_int(k + 1) * stirling2_S(m, k) for k in range(m + 1))
    return _same(carlitz_beta(m), rhs)


def _thm2(n: int, sign: int) -> QRat:
    total = QRat(0)
    for l in range(n + 1):
        inner = QRat(0)
        for m in range(l + 1):
            c = _sum(
                (-1) ** i * _g(l, i) * comb(i, m) * _qp(choose2(i) - i * l + i)
                for i in range(m, l + 1)
            )
            inner = inner + sign**m * c * carlitz_beta(m) / (1 - Q) ** (l - m)
        total = total + stirling2_C(l, n - l) * _qp(choose2(l)) * inner
    return total


def _thm2_printed(n):
    return _same(carlitz_beta(n), _thm2(n, 1))


def _thm2_corrected(n):
    return _same(carlitz_beta(n), _thm2(n, -1))


def _eq20(n):
    lhs = _sum(comb(n, m) * (Q - 1) ** m * carlitz_beta(m) for m in range(n + 1))
    return _same(lhs, moment_bosonic(n))


def _eq23_printed(n):
    rhs = _qp(-1) / _qf(n) * _sum(
        (-1) ** (n - k) * stirling1(n, k) * carlitz_beta(k) for k in range(n + 1)
    )
    return _same(1 / q_int(n + 1), rhs)


def _eq23_corrected(n):
    lhs = _sum(stirling1(n, k) * carlitz_beta(k) for k in range(n + 1))
    return _same(lhs, (-1) ** n * _qf(n) / q_int(n + 1))


def _eq26_thm4(i, k):
    gauss = QRat(comb(i + k, k) * factorial(k)) / (_g(i + k, k) * _qf(k))
    ok, lhs, rhs = _same(bosonic_block(i, k), gauss)
    if not ok:
        return ok, lhs, rhs
    return _same(beta_order(i, k, 1), beta_order_gauss(i, k, 1))


def _eq26_order1(m):
    return _same(beta_order(m, 1, 0), carlitz_beta(m))


def _eq28_eq30(n, k, x):
    return _same(beta_neg_order(n, k, x), beta_neg_order_shifted(n, k, x))


def _eq29(n, k, i):
    lhs = Fraction(comb(k, i), comb(i + n, n) * factorial(n))
    rhs = Fraction(comb(k + n, k - i), comb(k + n, n) * factorial(n))
    ok = lhs == rhs
    return ok, QRat(lhs), QRat(rhs)


def _eq31(k):
    return _same(beta_neg_order(0, k, 0), _qf(k) / factorial(k))


def _beta_values(k):
    stated = -2 * (Q + 2) / (q_int(2) * q_int(3))
    ok, lhs, rhs = _same(beta_order(1, 2, 0), stated)
    if not ok:
        return ok, lhs, rhs
    return _same(beta_neg_order(0, k, 0), _qf(k) / factorial(k))


def _s2_k0(k):
    via_beta = QRat(factorial(k)) / _qf(k) * beta_neg_order(0, max(k, 1), 0) if k else QRat(1)
    return _all_same(stirling2_C(k, 0), via_beta, QRat(1))


def _moment_sum(m, k):
    lhs = _sum(comb(m, i) * (Q - 1) ** i * beta_order(i, k, 0) for i in range(m + 1))
    rhs = QRat(comb(m + k, k) * factorial(k)) / (_g(m + k, k) * _qf(k))
    return _same(lhs, rhs)


def _s2_beta(n, k):
    lhs = comb(k + n, n) * QRat(factorial(n)) / _qf(n) * beta_neg_order(k, n, 0)
    return _same(lhs, stirling2_C(n, k))


def _s2_beta_printed(n, k):
    lhs = comb(k + n, n) * QRat(factorial(n)) / _qf(n) * beta_neg_order(k, max(k, 1), 0)
    return _same(lhs, stirling2_C(n, k))


def _classical_limits(m):
    checks = [(qrat_limit_q1(carlitz_beta(m)), classical_bernoulli(m))]
    checks.append((qrat_limit_q1(euler_order(m, 1, 0)), classical_euler_at_zero(m)))
    for k in range(m + 1):
        checks.append((qrat_limit_q1(stirling2_S(m, k)), Fraction(classical_stirling2(m, k))))
        checks.append((qrat_limit_q1(stirling1(m, k)), Fraction(classical_stirling1(m, k))))
        checks.append((qrat_limit_q1(_g(m, k)), Fraction(comb(m, k))))
    for got, want in checks:
        if got != want:
            return False, QRat(got), QRat(want)
    return True, QRat(checks[0][0]), QRat(checks[0][1])


# -- q-binomial formulae and Euler numbers ----------------------------------------

_AB_SAMPLES = (
    (Fraction(1), Fraction(1)),
    (Fraction(2), Fraction(-1)),
    (Fraction(1, 2), Fraction(3)),
    (Fraction(-3), Fraction(2, 5)),
    (Fraction(5), Fraction(7, 3)),
)


def _eq33_finite(n, s):
    a, b = _AB_SAMPLES[s]
    rhs = _sum(_g(n, k) * _qp(choose2(k)) * a ** (n - k) * b**k for k in range(n + 1))
    return _same(QRat(q_binom_product(n, a, b)), rhs)


def _eq33_printed(n, s):
    a, b = _AB_SAMPLES[s]
    rhs = _sum(_g(n, k) * _qp(choose2(k) + n - k) * b**k for k in range(n + 1))
    return _same(QRat(q_binom_product(n, a, b)), rhs)


_SERIES_ORDER = 20


def _eq33_series(n, j, s):
    sign = 1 if s == 0 else -1
    series = q_binom_series(n, j, _SERIES_ORDER, sign)
    prod = QRat(1)
    for i in range(1, n + 1):
        prod = prod * (1 - sign * _qp(j + i - 1))
    ref = qrat_to_series(1 / prod, _SERIES_ORDER)
    ok = series == ref
    return ok, repr(series), repr(ref)


def _eq34_eq35(k, n, x):
    return _same(euler_neg_order(k, n, x), euler_neg_order_expanded(k, n, x))


def _prop6(k, n, x):
    res = prop6_check(k, n, x, 16)
    return res.equal, repr(res.closed), repr(res.expanded)


def _multi_check(f: IntegrandSpec, measure: str, levels=range(1, 4)) -> CheckResult:
    reference = closed_form(f, measure)
    rows = []
    for N in levels:
        direct = volkenborn_multi(f, _P3, N, measure)
        factored = volkenborn_multi(f, _P3, N, measure, factorize=True)
        gap = (direct - factored).val
        if gap < min(direct.abs_prec, factored.abs_prec):
            return False, f"direct {direct} at N={N}", f"factorized {factored}"
        diff = (direct - _P3.evaluate(reference, N + 12)).val
        rows.append((N, diff))
        if diff < N:
            return False, _probe_text(rows), f"closed form {reference}: need valuation >= N"
    return True, _probe_text(rows), f"closed form {reference}"


def _eq25(k, i):
    return _multi_check(IntegrandSpec.multiexp(k, i), "bosonic")


def _euler_integral(n, k, x):
    return _multi_check(IntegrandSpec.eulerpow(n, k, x), "fermionic")


def _eq05(p, m):
    q = PadicQ.from_offset(p, 1)
    rows = convergence_probe(IntegrandSpec.powq(m), q, range(2, 7), "bosonic", carlitz_beta(m))
    return _converges(rows, 3), _probe_text(rows), "non-decreasing, >= 3 at N=6"


def _eq04(p, N):
    q = PadicQ.from_offset(p, 1)
    for measure in ("bosonic", "fermionic"):
        one = volkenborn(IntegrandSpec.powq(0), q, N, measure)
        if not (one - volkenborn(IntegrandSpec.qexp(0), q, N, measure)).is_zero():
            return False, str(one), "1"
        if (one - q.evaluate(QRat(1), N + 8)).val < one.abs_prec:
            return False, str(one), "1"
    if N <= 3:
        # each coset j + p^N Z_p carries q^j/[p^N]_q (resp. (-q)^j/[p^N]_{-q})
        for measure, sign in (("bosonic", 1), ("fermionic", -1)):
            weights = coset_weights(q, N, measure, digits=6)
            total_q = (1 - (sign * q.q) ** (p**N)) / (1 - sign * q.q)
            for j, w in enumerate(weights):
                want = q.evaluate(QRat((sign * q.q) ** j / total_q), 12)
                if (w - want).val < w.abs_prec:
                    return False, f"weight[{j}] = {w}", f"{want}"
    return True, "1", "1"


# -- catalog ---------------------------------------------------------------

CATALOG: Tuple[IdentityCase, ...] = (
    IdentityCase(
        "EQ01-FALLING", MUST, {"x": (0, 10), "k": (0, 10)},
        "Gaussian binomial times [k]_q! equals the q-falling factorial [x]_{k,q}.",
        ("eq1", "sec1:falling-factorial"), _eq01, scalable=("x", "k"),
    ),
    IdentityCase(
        "EQ02-FORM1", MUST, {"n": (0, 12), "k": (0, 12)},
        "Pascal rule binom(n+1,k) = binom(n,k-1) + q^k binom(n,k).",
        ("eq2",), _eq02_form1, where=lambda n, k: k <= n, scalable=("n", "k"),
    ),
    IdentityCase(
        "EQ02-FORM2", AUDIT, {"n": (0, 12), "k": (0, 12)},
        "Variant of the second Pascal rule with exponent q^(n-k).",
        ("eq2",), _eq02_form2, where=lambda n, k: k <= n, scalable=("n", "k"),
    ),
    IdentityCase(
        "EQ02-FORM2-CORRECTED", MUST, {"n": (0, 12), "k": (0, 12)},
        "Second Pascal rule with exponent q^(n-k+1).",
        ("eq2",), _eq02_form2_fixed, where=lambda n, k: k <= n, scalable=("n", "k"),
    ),
    IdentityCase(
        "EQ03-PARTITION", MUST, {"n": (0, 10), "k": (0, 10)},
        "Product form, Pascal recursion and partition enumeration of binom(n,k)_q agree.",
        ("eq1", "eq2", "eq3"), _eq03, where=lambda n, k: k <= n, scalable=("n", "k"),
    ),
    IdentityCase(
        "EQ04-MEASURE", MUST, {"p": (3, 5), "N": (1, 6)},
        "Riemann sums of the constant 1 equal 1 under mu_q and mu_{-q}; coset weights are q^j/[p^N]_q and (-q)^j/[p^N]_{-q}.",
        ("eq4", "sec1:riemann-sum", "sec4:mu-minus-q"), _eq04, where=lambda p, N: p != 4,
    ),
    IdentityCase(
        "EQ05", MUST, {"p": (3, 5), "m": (0, 5)},
        "Riemann sums of [x]_q^m at q = 1 + p converge p-adically to beta_m: valuation of the error non-decreasing over N = 2..6 and >= 3 at N = 6.",
        ("eq5",), _eq05, where=lambda p, m: p != 4, scalable=("m",),
    ),
    IdentityCase(
        "EQ06", MUST, {"n": (1, 8), "x": (1, 8)},
        "q^n [x-n]_q = [x]_q - [n]_q and [-x]_q = -q^-x [x]_q.",
        ("eq6",), _eq06, scalable=("n", "x"),
    ),
    IdentityCase(
        "EQ07-EQ09-OPERATOR", MUST, {"m": (0, 6), "n": (0, 8)},
        "Expanded q-difference sum equals the composed operator prod (E - q^(i-1) I) on f(x) = [x]_q^m.",
        ("eq7", "eq9"), _eq07_eq09, scalable=("m", "n"),
    ),
    IdentityCase(
        "EQ08-NEWTON", MUST, {"m": (0, 6), "x": (0, 8)},
        "q-Newton expansion [x]_q^m = sum_n binom(x,n)_q Delta_q^n f(0).",
        ("eq8",), _eq08, where=lambda m, x: x <= m + 2, scalable=("m",),
    ),
    IdentityCase(
        "EQ10-EQ11-EQUIV", MUST, {"n": (0, 8), "k": (0, 8)},
        "Alternating-sum and q-difference definitions of S2(n,k) coincide.",
        ("eq10", "eq11"), _eq10_eq11, scalable=("n", "k"),
    ),
    IdentityCase(
        "EQ12-C2-READING", MUST, {"n": (0, 6), "x": (0, 8)},
        "[x]_q^n = sum_k binom(x,k)_q [k]_q! S2(n,k) q^C(k,2).",
        ("eq12",), _eq12_c2, where=lambda n, x: x <= n + 2, scalable=("n",),
    ),
    IdentityCase(
        "EQ12-PRINTED", AUDIT, {"n": (0, 6), "x": (0, 8)},
        "Same expansion with S2(k, n-k) in place of S2(n, k).",
        ("eq12",), _eq12_printed, where=lambda n, x: x <= n + 2, scalable=("n",),
    ),
    IdentityCase(
        "EQ13-CORRECTED", MUST, {"n": (0, 6)},
        "Integral of binom(x,n)_q under mu_q equals (-1)^n q^-C(n,2)/[n+1]_q; checked exactly and by p-adic Riemann sums at p = 5, q = 6.",
        ("eq13",), _eq13_corrected, scalable=("n",),
    ),
    IdentityCase(
        "EQ13-PRINTED", AUDIT, {"n": (0, 6)},
        "Variant value (-1)^n q^((n+1)-C(n+1,2))/[n+1]_q for the integral of binom(x,n)_q.",
        ("eq13",), _eq13_printed, scalable=("n",),
    ),
    IdentityCase(
        "THM1-CORRECTED", MUST, {"m": (0, 10)},
        "beta_m = sum_k (-1)^k [k]_q!/[k+1]_q S2(m,k).",
        ("thm1", "eq14"), _thm1_corrected, scalable=("m",),
    ),
    IdentityCase(
        "THM1-PRINTED", AUDIT, {"m": (0, 10)},
        "beta_m = q sum_k (-1)^k [k]_q!/[k+1]_q s2(k, m-k) with the bivariate s2.",
        ("thm1", "eq14"), _thm1_printed, scalable=("m",),
    ),
    IdentityCase(
        "EQ15", MUST, {"n": (0, 6), "x": (0, 8)},
        "(1-q)^n [x]_{n,q} equals the product and the Gaussian-binomial sum.",
        ("eq15",), _eq15, where=lambda n, x: x <= n + 2, scalable=("n",),
    ),
    IdentityCase(
        "EQ16", MUST, {"l": (0, 8), "x": (0, 8)},
        "q^(l x) = sum_m C(l,m) (q-1)^m [x]_q^m.",
        ("eq16",), _eq16, scalable=("l", "x"),
    ),
    IdentityCase(
        "EQ17", MUST, {"n": (0, 6), "x": (0, 8)},
        "Re-expansion of (1-q)^-n sum_l binom(n,l)_q q^C(l,2) (-1)^l q^(l(x-n+1)) in powers of [x]_q.",
        ("eq17",), _eq17, where=lambda n, x: x <= n + 2, scalable=("n",),
    ),
    IdentityCase(
        "THM2-CORRECTED", MUST, {"n": (0, 6)},
        "beta_n = sum_l s2(l, n-l) q^C(l,2) sum_m (-1)^m (1-q)^-(l-m) c(l,m) beta_m, bivariate s2; the (-1)^m sign is restored.",
        ("thm2",), _thm2_corrected, scalable=("n",),
    ),
    IdentityCase(
        "THM2-PRINTED", AUDIT, {"n": (0, 6)},
        "Same expansion without the (-1)^m sign.",
        ("thm2",), _thm2_printed, scalable=("n",),
    ),
    IdentityCase(
        "EQ18-BRIDGE", MUST, {"n": (0, 8), "k": (0, 8)},
        "Bivariate family equals the alternating-sum family: C2(n,k) = S2(n+k, n).",
        ("eq18", "eq10"), _eq18_bridge, scalable=("n", "k"),
    ),
    IdentityCase(
        "EQ18-INVERSE", MUST, {"n": (0, 8), "k": (0, 8)},
        "binom(n,k)_q = sum_j C(n,j) (q-1)^(j-k) C2(k, j-k).",
        ("eq18", "sec2:inverse-relation"), _eq18_inverse, where=lambda n, k: k <= n,
        scalable=("n", "k"),
    ),
    IdentityCase(
        "EQ19", MUST, {"n": (0, 6), "t": (0, 8)},
        "q^(n t) expanded in q-falling factorials and in powers of [t]_q.",
        ("eq19",), _eq19, where=lambda n, t: t <= n + 2, scalable=("n",),
    ),
    IdentityCase(
        "EQ20", MUST, {"n": (0, 8)},
        "sum_m C(n,m) (q-1)^m beta_m = (n+1)/[n+1]_q.",
        ("eq20",), _eq20, scalable=("n",),
    ),
    IdentityCase(
        "EQ21", MUST, {"n": (0, 8), "m": (0, 8)},
        "C(n,m) = sum_k (q-1)^(k-m) binom(n,k)_q s1(k,m); the q-dependence cancels.",
        ("eq21",), _eq21, where=lambda n, m: m <= n, scalable=("n", "m"),
    ),
    IdentityCase(
        "EQ22-VS-PRODUCT", MUST, {"n": (0, 8), "x": (0, 10)},
        "q^C(n,2) binom(x,n)_q [n]_q! = q^C(n,2) [x]_{n,q} = sum_k s1(n,k) [x]_q^k.",
        ("eq22",), _eq22, where=lambda n, x: x <= n + 2, scalable=("n",),
    ),
    IdentityCase(
        "EQ23-CORRECTED", MUST, {"n": (0, 10)},
        "sum_k s1(n,k) beta_k = (-1)^n [n]_q!/[n+1]_q.",
        ("eq23", "thm3"), _eq23_corrected, scalable=("n",),
    ),
    IdentityCase(
        "EQ23-PRINTED", AUDIT, {"n": (1, 10)},
        "Variant 1/[n+1]_q = q^-1/[n]_q! sum_k (-1)^(n-k) s1(n,k) beta_k.",
        ("eq23", "thm3"), _eq23_printed, scalable=("n",),
    ),
    IdentityCase(
        "EQ24-VS-PRODUCT", MUST, {"n": (0, 8), "j": (0, 8)},
        "Closed Gaussian-binomial sum for s1(n,j) equals the product-expansion coefficient.",
        ("eq24",), _eq24, where=lambda n, j: j <= n, scalable=("n", "j"),
    ),
    IdentityCase(
        "THM3", MUST, {"n": (0, 8), "j": (0, 8)},
        "Closed form for s1(n,j) equals the triangular recurrence s(n+1,k) = s(n,k-1) - [n]_q s(n,k).",
        ("thm3", "eq24"), _thm3, where=lambda n, j: j <= n, scalable=("n", "j"),
    ),
    IdentityCase(
        "EQ25-INTEGRAL", MUST, {"k": (1, 2), "i": (0, 3)},
        "k-fold mu_q Riemann sums of q^(sum_l (k-l+i) x_l) at p = 3, q = 4, N = 1..3: direct sum equals the factorized product, and the error to prod (i+j)/[i+j]_q has valuation >= N.",
        ("eq25", "eq27"), _eq25,
    ),
    IdentityCase(
        "EQ26-THM4-EQUIV", MUST, {"i": (0, 8), "k": (1, 8)},
        "prod_j (i+j)/[i+j]_q = C(i+k,k) k!/(binom(i+k,k)_q [k]_q!), and the two higher-order forms agree.",
        ("eq26", "thm4"), _eq26_thm4, scalable=("i", "k"),
    ),
    IdentityCase(
        "EQ26-ORDER1", MUST, {"m": (0, 10)},
        "Order-1 specialization of the higher-order closed form reproduces beta_m.",
        ("eq26", "eq5"), _eq26_order1, scalable=("m",),
    ),
    IdentityCase(
        "EQ28-EQ30-EQUIV", MUST, {"n": (0, 6), "k": (1, 6), "x": (0, 2)},
        "Negative-order values from the C(n,i)/C(i+k,k) and C(n+k,n-i)/C(n+k,k) forms coincide.",
        ("eq28", "eq30", "thm5"), _eq28_eq30, scalable=("n", "k"),
    ),
    IdentityCase(
        "EQ29", MUST, {"n": (0, 8), "k": (0, 8), "i": (0, 8)},
        "C(k,i)/(C(i+n,n) n!) = C(k+n,k-i)/(C(k+n,n) n!).",
        ("eq29",), _eq29, where=lambda n, k, i: i <= k, scalable=("n", "k", "i"),
    ),
    IdentityCase(
        "EQ31", MUST, {"k": (1, 8)},
        "Negative-order value of index 0 equals [k]_q!/k!.",
        ("eq31",), _eq31, scalable=("k",),
    ),
    IdentityCase(
        "BETA-VALUES", MUST, {"k": (1, 8)},
        "Order-2 value of index 1 equals -2(q+2)/([2]_q[3]_q); index-0 negative-order values equal [k]_q!/k!.",
        ("sec3:beta-values",), _beta_values, scalable=("k",),
    ),
    IdentityCase(
        "S2-K0", MUST, {"k": (0, 8)},
        "s2(k, 0, q) = k!/[k]_q! times the index-0 negative-order value = 1.",
        ("sec3:s2-k0",), _s2_k0, scalable=("k",),
    ),
    IdentityCase(
        "MOMENT-SUM", MUST, {"m": (0, 6), "k": (1, 6)},
        "sum_i C(m,i) (q-1)^i beta_i^(k) = C(m+k,k) k!/(binom(m+k,k)_q [k]_q!).",
        ("sec3:moment-sum",), _moment_sum, scalable=("m", "k"),
    ),
    IdentityCase(
        "S2-BETA-REL", MUST, {"n": (1, 6), "k": (0, 6)},
        "C2(n,k) = C(k+n,n) n!/[n]_q! times the index-k value of order -n.",
        ("sec3:s2-beta",), _s2_beta, scalable=("n", "k"),
    ),
    IdentityCase(
        "S2-BETA-PRINTED-SUPERSCRIPT", AUDIT, {"n": (1, 6), "k": (0, 6)},
        "Same relation with order -k in place of -n.",
        ("sec3:s2-beta",), _s2_beta_printed, scalable=("n", "k"),
    ),
    IdentityCase(
        "FINAL-S1-PRODUCT", MUST, {"n": (0, 8), "x": (0, 10)},
        "q^C(n,2) [x]_{n,q} = prod_{j<n} q^j [x-j]_q = prod_{k<n} ([x]_q - [k]_q), and q^C(n,2) binom(x,n)_q = sum_k s1(n,k) [x]_q^k/[n]_q!.",
        ("sec3:final-product",), _final_s1, where=lambda n, x: x <= n + 2, scalable=("n",),
    ),
    IdentityCase(
        "FINAL-S1-PRINTED-UPPER", AUDIT, {"n": (0, 8), "x": (0, 10)},
        "Variant with the product over k = 0..n (n+1 factors).",
        ("sec3:final-product",), _final_s1_printed, where=lambda n, x: x <= n + 2, scalable=("n",),
    ),
    IdentityCase(
        "CLASSICAL-LIMITS", MUST, {"m": (0, 10)},
        "q -> 1 limits give B_m (B_1 = -1/2), Euler values E_m(0), classical Stirling numbers and binomials.",
        ("sec1:limit",), _classical_limits, scalable=("m",),
    ),
    IdentityCase(
        "EQ33-CORRECTED-FINITE", MUST, {"n": (0, 8), "s": (0, 4)},
        "prod (a + b q^(i-1)) = sum_k binom(n,k)_q q^C(k,2) a^(n-k) b^k at five rational (a, b) samples.",
        ("eq33",), _eq33_finite, scalable=("n",),
    ),
    IdentityCase(
        "EQ33-PRINTED-FINITE", AUDIT, {"n": (0, 8), "s": (0, 4)},
        "Same expansion with q^(n-k) in place of a^(n-k).",
        ("eq33",), _eq33_printed, scalable=("n",),
    ),
    IdentityCase(
        "EQ33-SERIES", MUST, {"n": (1, 3), "j": (1, 3), "s": (0, 1)},
        "sum_k binom(n+k-1,k)_q b^k with b = +-q^j equals the series of prod (1 - b q^(i-1))^-1 mod q^20.",
        ("eq33",), _eq33_series,
    ),
    IdentityCase(
        "EULER-CLOSED-VS-INTEGRAL", MUST, {"n": (1, 2), "k": (0, 2), "x": (0, 1)},
        "n-fold mu_{-q} Riemann sums of [x_1+..+x_n+x]_q^k q^(sum_j (n-j) x_j) at p = 3, q = 4, N = 1..3: direct equals factorized, and the error to the closed Euler form has valuation >= N.",
        ("eq32", "sec4:euler-closed"), _euler_integral,
    ),
    IdentityCase(
        "PROP6", MUST, {"k": (0, 2), "n": (1, 2), "x": (0, 1)},
        "Closed higher-order q-Euler value equals its geometric-series expansion mod q^16.",
        ("prop6", "eq33"), _prop6,
    ),
    IdentityCase(
        "EQ34-EQ35-EQUIV", MUST, {"k": (0, 4), "n": (1, 4), "x": (0, 2)},
        "Negative-order q-Euler value: product form equals the q-binomial-theorem expansion.",
        ("eq34", "eq35"), _eq34_eq35, scalable=("k", "n"),
    ),
)

OUT_OF_SCOPE: Tuple[str, ...] = (
    "eq12 second expansion: exponent q^(binom(k,2)_q - binom(n-k,2)_q) has no clear meaning; not implemented",
    "sec1 Bernoulli-trials probability remark: no algorithm",
    "sec1 inverse-limit spaces X_d, X* and cosets a + d p^N Z_p for d > 1: all integrals are over Z_p",
)

NOTES: Tuple[str, ...] = (
    "THM2-CORRECTED reads s2(l, n-l) as the bivariate family (equal to S2(n, l)) and inserts (-1)^m in the inner sum",
    "EQ13-CORRECTED: the integral of binom(x,n)_q is (-1)^n q^-C(n,2)/[n+1]_q; the variant value is q times this",
    "EQ23-CORRECTED: sum_k s1(n,k) beta_k = (-1)^n [n]_q!/[n+1]_q",
    "THM1-CORRECTED drops the leading q and uses S2(m, k)",
    "EQ02-FORM2-CORRECTED uses exponent n-k+1",
    "S2-BETA-REL reads the order superscript as -n",
    "p-adic cases report valuations of (Riemann sum - exact value); inf means zero to working precision",
)

_BY_ID = {c.id: c for c in CATALOG}


def anchors_covered() -> Dict[str, List[str]]:
    """Map each anchor label to the case ids that exercise it."""
    out: Dict[str, List[str]] = {}
    for case in CATALOG:
        for a in case.anchors:
            out.setdefault(a, []).append(case.id)
    return out


def case_ids() -> List[str]:
    return [c.id for c in CATALOG]


def get_case(case_id: str) -> IdentityCase:
    try:
        return _BY_ID[case_id]
    except KeyError:
        raise UnknownCaseId(f"unknown case id {case_id!r}") from None


def _render(v: Value) -> str:
    return str(v)


def _effective_ranges(case: IdentityCase, overrides, max_n):
    ranges = {k: tuple(v) for k, v in case.ranges.items()}
    if max_n is not None:
        for name in case.scalable:
            lo, hi = ranges[name]
            ranges[name] = (lo, max(lo, min(hi, max_n)))
    if overrides:
        for name, span in (overrides.get(case.id) or {}).items():
            if name not in ranges:
                raise ValueError(f"case {case.id} has no parameter {name!r}")
            lo, hi = span
            if lo > hi:
                raise ValueError(f"empty range for {case.id}.{name}")
            ranges[name] = (lo, hi)
    return ranges


def run_case(
    case: Union[str, IdentityCase],
    ranges: Optional[Mapping[str, Tuple[int, int]]] = None,
    timings: bool = False,
) -> AuditResult:
    """Evaluate one case over its whole grid."""
    if isinstance(case, str):
        case = get_case(case)
    ranges = dict(case.ranges if ranges is None else ranges)
    start = time.perf_counter()
    checked = failed = 0
    first = None
    for params in case.grid(ranges):
        ok, lhs, rhs = case.check(**params)
        checked += 1
        if not ok:
            failed += 1
            if first is None:
                first = {"params": params, "lhs": _render(lhs), "rhs": _render(rhs)}
    if failed == 0:
        status = "pass"
    elif case.expected == MUST:
        status = "fail"
    else:
        status = "expected-fail-confirmed"
    ms = round((time.perf_counter() - start) * 1000, 1) if timings else None
    return AuditResult(case.id, case.expected, status, ranges, checked, failed, first, ms)


def run_audit(
    selection: Union[str, Sequence[str]] = "all",
    overrides: Optional[Mapping[str, Mapping[str, Tuple[int, int]]]] = None,
    max_n: Optional[int] = None,
    timings: bool = False,
) -> AuditReport:
    """Run the selected cases and collect an :class:`AuditReport`.

    ``overrides`` maps a case id to ``{symbol: (lo, hi)}``; ``max_n``
    caps the upper end of every size parameter.  Results are ordered by
    case id.
    """
    if selection == "all" or selection == ["all"]:
        cases = list(CATALOG)
    else:
        cases = [get_case(c) for c in selection]
    for cid in overrides or {}:
        get_case(cid)
    results = []
    for case in sorted(cases, key=lambda c: c.id):
        ranges = _effective_ranges(case, overrides, max_n)
        results.append(run_case(case, ranges, timings))
    return AuditReport(results, out_of_scope=OUT_OF_SCOPE, notes=NOTES)
