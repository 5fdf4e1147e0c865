import math
from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from qbernoulli.bernoulli import carlitz_beta, euler_order, moment_bosonic, moment_fermionic
from qbernoulli.errors import PrecisionExhausted, TermBudgetExceeded
from qbernoulli.exact import Q, QRat
from qbernoulli.padic import (
    IntegrandSpec,
    PadicQ,
    closed_form,
    convergence_probe,
    padic_arith,
    padic_from_rational,
    volkenborn,
    volkenborn_multi,
)
from qbernoulli.qcore import choose2, q_int


def test_from_rational_examples():
    a = padic_from_rational(10, 5, 4)
    assert (a.val, a.unit) == (1, 2)
    b = padic_from_rational(F(1, 2), 5, 2)
    assert (b.val, b.unit) == (0, 13)
    assert padic_from_rational(0, 5, 3).is_zero()
    with pytest.raises(PrecisionExhausted):
        padic_from_rational(3, 5, 0)


def test_arith_examples():
    a = padic_from_rational(F(7, 3), 5, 6)
    assert padic_arith("add", a, -a).is_zero()
    x = padic_from_rational(10, 5, 4)
    y = padic_from_rational(3, 5, 4)
    z = padic_arith("mul", x, y)
    assert (z.val, z.unit % 5**z.prec) == (1, 6)
    half = padic_from_rational(F(1, 2), 5, 6)
    assert (half * padic_from_rational(2, 5, 6)).residue(6) == 1


def test_padic_q_validation():
    with pytest.raises(ValueError):
        PadicQ(5, F(2))
    with pytest.raises(ValueError):
        PadicQ.from_offset(9, 1)
    assert PadicQ.from_offset(5, 1).q == 6


units = st.fractions(min_value=-50, max_value=50, max_denominator=50).filter(lambda r: r != 0 and r.denominator % 5)


@settings(max_examples=60, deadline=None)
@given(units, units, units)
def test_ring_laws(a, b, c):
    A, B, C = (padic_from_rational(r, 5, 8) for r in (a, b, c))
    prec = min(x.abs_prec for x in (A, B, C))

    def close(u, v):
        d = u - v
        return d.is_zero() or d.val >= prec

    assert close((A + B) + C, A + (B + C))
    assert close(A * (B + C), A * B + A * C)
    assert close(A * B, B * A)
    if A.val == 0:
        assert close(A * A.inverse(), padic_from_rational(1, 5, 8))


def test_integrand_parse():
    assert IntegrandSpec.parse("powq:2") == IntegrandSpec.powq(2)
    assert str(IntegrandSpec.parse("multiexp:2,1")) == "multiexp:2,1"
    assert IntegrandSpec.parse("eulerpow:1,1,0").multivariate
    with pytest.raises(ValueError):
        IntegrandSpec.parse("nope:1")


def test_normalization_is_exact():
    for p in (3, 5):
        q = PadicQ.from_offset(p, 1)
        for N in range(1, 6):
            for measure in ("bosonic", "fermionic"):
                one = volkenborn(IntegrandSpec.powq(0), q, N, measure)
                assert (one - q.evaluate(QRat(1), N + 8)).val >= one.abs_prec
    rows = convergence_probe(IntegrandSpec.powq(0), PadicQ.from_offset(5, 1), range(1, 5), "bosonic", QRat(1))
    assert all(v == math.inf for _, v in rows)


def test_eq5_convergence():
    q = PadicQ.from_offset(5, 1)
    for m in range(6):
        rows = convergence_probe(IntegrandSpec.powq(m), q, range(2, 7), "bosonic", carlitz_beta(m))
        vals = [v for _, v in rows]
        assert vals == sorted(vals) and vals[-1] >= 3
    rows = convergence_probe(IntegrandSpec.powq(1), q, range(2, 7), "bosonic", carlitz_beta(1))
    vals = [v for _, v in rows]
    assert all(a < b for a, b in zip(vals, vals[1:]))


def test_moments_converge():
    q = PadicQ.from_offset(5, 1)
    for n in range(4):
        for measure, exact in (("bosonic", moment_bosonic(n)), ("fermionic", moment_fermionic(n))):
            rows = convergence_probe(IntegrandSpec.qexp(n), q, range(2, 5), measure, exact)
            assert [v for _, v in rows][-1] >= 4


def test_gaussbinom_references():
    q = PadicQ.from_offset(5, 1)
    for n in (0, 1):
        corrected = (-1) ** n * QRat.q_power(-choose2(n)) / q_int(n + 1)
        printed = (-1) ** n * QRat.q_power(n + 1 - choose2(n + 1)) / q_int(n + 1)
        good = [v for _, v in convergence_probe(IntegrandSpec.gaussbinom(n), q, range(2, 6), "bosonic", corrected)]
        bad = [v for _, v in convergence_probe(IntegrandSpec.gaussbinom(n), q, range(2, 6), "bosonic", printed)]
        assert good == sorted(good) and good[-1] >= 5
        assert len(set(bad)) == 1


def test_multivariate_oracles():
    q = PadicQ.from_offset(3, 1)
    cases = [(IntegrandSpec.multiexp(2, 1), "bosonic"), (IntegrandSpec.eulerpow(1, 1, 0), "fermionic")]
    assert closed_form(IntegrandSpec.eulerpow(1, 1, 0), "fermionic") == euler_order(1, 1, 0) == -Q / (1 + Q**2)
    for f, measure in cases:
        exact = closed_form(f, measure)
        for N in (1, 2, 3):
            direct = volkenborn_multi(f, q, N, measure)
            factored = volkenborn_multi(f, q, N, measure, factorize=True)
            assert (direct - factored).val >= min(direct.abs_prec, factored.abs_prec)
            assert (direct - q.evaluate(exact, N + 12)).val >= N


def test_budget():
    q = PadicQ.from_offset(3, 1)
    with pytest.raises(TermBudgetExceeded):
        volkenborn(IntegrandSpec.powq(1), q, 20)
    with pytest.raises(TermBudgetExceeded):
        volkenborn_multi(IntegrandSpec.multiexp(2, 0), q, 6)


@pytest.mark.parametrize("measure,sign", [("bosonic", 1), ("fermionic", -1)])
def test_matches_rational_riemann_sum(measure, sign):
    p, N, m = 3, 2, 3
    q = F(4)
    M = p**N
    qi = lambda x: (1 - q**x) / (1 - q)
    total = sum(qi(x) ** m * (sign * q) ** x for x in range(M))
    total /= (1 - (sign * q) ** M) / (1 - sign * q)
    got = volkenborn(IntegrandSpec.powq(m), PadicQ(p, q), N, measure, digits=6)
    want = padic_from_rational(total, p, 12)
    assert (got - want).val >= got.abs_prec
