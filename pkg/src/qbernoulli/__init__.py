"""Exact q-calculus: Gaussian binomials, q-Stirling numbers, q-Bernoulli and
q-Euler numbers, p-adic q-Volkenborn sums and an identity audit."""

__version__ = "0.1.0"

from .errors import *  # noqa: F401,F403
from .exact import Q, QPoly, QRat, QSeries, qrat, qrat_arith, qrat_eval, qrat_limit_q1, qrat_to_series
from .qcore import (
    delta_q,
    gauss_binom,
    gauss_binom_partition_oracle,
    q_binom_product,
    q_binom_series,
    q_factorial,
    q_falling,
    q_int,
)
from .stirling import stirling1, stirling1_closed, stirling2_C, stirling2_S
from .bernoulli import (
    beta_neg_order,
    beta_order,
    carlitz_beta,
    euler_neg_order,
    euler_order,
    prop6_check,
)
from .padic import (
    IntegrandSpec,
    PadicNum,
    PadicQ,
    closed_form,
    convergence_probe,
    padic_arith,
    padic_from_rational,
    volkenborn,
    volkenborn_multi,
)
