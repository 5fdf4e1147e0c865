"""Tables of the number families in csv, json or LaTeX."""

from __future__ import annotations

import csv
import io
import json
from itertools import product
from fractions import Fraction
from typing import Callable, Dict, List, Mapping, Sequence, Tuple

from .bernoulli import (
    beta_neg_order,
    beta_order,
    carlitz_beta,
    classical_bernoulli,
    classical_euler_at_zero,
    euler_neg_order,
    euler_order,
)
from .errors import PoleAtOne, RangeBoundExceeded
from .exact import QRat, qrat_limit_q1
from .qcore import gauss_binom
from .stirling import stirling1, stirling2_C, stirling2_S

__all__ = ["FAMILIES", "FORMATS", "BOUNDS", "table_rows", "emit_table", "parse_range", "format_fraction"]

FORMATS = ("csv", "json", "latex")

# largest index admitted per family; keeps every table at desk scale
BOUNDS: Dict[str, int] = {
    "gauss-binom": 40,
    "stirling1": 30,
    "stirling2-S": 30,
    "stirling2-C": 20,
    "carlitz-beta": 40,
    "beta-order": 16,
    "beta-neg-order": 16,
    "euler-order": 16,
    "euler-neg-order": 16,
    "classical-limits": 40,
}

Span = Tuple[int, int]


def parse_range(text: str) -> Span:
    """'3' -> (3, 3); '0..5' -> (0, 5)."""
    if ".." in text:
        lo, hi = text.split("..", 1)
        span = (int(lo), int(hi))
    else:
        span = (int(text), int(text))
    if span[0] > span[1]:
        raise ValueError(f"empty range {text!r}")
    return span


def format_fraction(x: Fraction) -> str:
    return str(x)


def _limit(v: QRat) -> str:
    try:
        return format_fraction(qrat_limit_q1(v))
    except PoleAtOne:
        return "pole"


# family -> (index symbols in argument order, LaTeX symbol, value function)
_FAMILY_SPECS: Dict[str, Tuple[Tuple[str, ...], str, Callable[..., QRat]]] = {
    "gauss-binom": (("n", "k"), r"\binom{n}{k}_q", lambda n, k: QRat(gauss_binom(n, k))),
    "stirling1": (("n", "k"), r"s_1(n,k)", stirling1),
    "stirling2-S": (("n", "k"), r"S_2(n,k)", stirling2_S),
    "stirling2-C": (("n", "k"), r"s_2(n,k)", stirling2_C),
    "carlitz-beta": (("m",), r"\beta_m", carlitz_beta),
    "beta-order": (("n", "k", "x"), r"\beta^{(k)}_{n,q}(x)", beta_order),
    "beta-neg-order": (("n", "k", "x"), r"\beta^{(-k)}_{n,q}(x)", beta_neg_order),
    "euler-order": (("k", "n", "x"), r"E^{(n)}_{k,q}(x)", euler_order),
    "euler-neg-order": (("k", "n", "x"), r"E^{(-n)}_{k,q}(x)", euler_neg_order),
}

FAMILIES = tuple(_FAMILY_SPECS) + ("classical-limits",)


_ORDER_SYMBOL = {"beta-order": "k", "beta-neg-order": "k", "euler-order": "n", "euler-neg-order": "n"}


def _grid(family: str, ranges: Mapping[str, Span]) -> List[Dict[str, int]]:
    if family in ("carlitz-beta", "classical-limits"):
        span = ranges.get("m") or ranges.get("n")
        if span is None:
            raise ValueError(f"{family} needs an m range")
        return [{"m": m} for m in range(span[0], span[1] + 1)]
    if "n" not in ranges:
        raise ValueError(f"{family} needs an n range")
    symbols = _FAMILY_SPECS[family][0]
    if symbols == ("n", "k"):
        rows = []
        for n in range(ranges["n"][0], ranges["n"][1] + 1):
            k_lo, k_hi = ranges.get("k", (0, n))
            rows.extend({"n": n, "k": k} for k in range(k_lo, min(k_hi, n) + 1))
        return rows
    order = _ORDER_SYMBOL[family]
    defaults = {"x": (0, 0), order: (1, 1), "k": (0, 3)}
    spans = [ranges.get(s, defaults.get(s)) for s in symbols]
    rows = []
    for values in product(*(range(lo, hi + 1) for lo, hi in spans)):
        p = dict(zip(symbols, values))
        if p[order] >= 1:
            rows.append(p)
    return rows


def _check_bounds(family: str, ranges: Mapping[str, Span]):
    bound = BOUNDS[family]
    for name, (lo, hi) in ranges.items():
        if lo < 0:
            raise ValueError(f"{name} must be >= 0")
        if hi > bound:
            raise RangeBoundExceeded(f"{family}: {name} up to {hi} exceeds the bound {bound}")


def table_rows(family: str, ranges: Mapping[str, Span]) -> Tuple[List[str], List[List[str]]]:
    """Column names and string rows for one family."""
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}; choose from {', '.join(FAMILIES)}")
    _check_bounds(family, ranges)
    grid = _grid(family, ranges)
    if family == "classical-limits":
        cols = ["m", "beta_limit", "bernoulli", "euler_limit", "euler_classical"]
        rows = []
        for p in grid:
            m = p["m"]
            rows.append([
                str(m),
                _limit(carlitz_beta(m)),
                format_fraction(classical_bernoulli(m)),
                _limit(euler_order(m, 1, 0)),
                format_fraction(classical_euler_at_zero(m)),
            ])
        return cols, rows
    symbols, _, fn = _FAMILY_SPECS[family]
    cols = list(symbols) + ["value", "limit_q1"]
    rows = []
    for p in grid:
        v = fn(*(p[s] for s in symbols))
        rows.append([str(p[s]) for s in symbols] + [str(v), _limit(v)])
    return cols, rows


def _latex_cell(text: str) -> str:
    if text == "pole":
        return r"\text{pole}"
    frac = Fraction(text) if "/" in text and "(" not in text else None
    if frac is not None:
        sign = "-" if frac < 0 else ""
        return rf"{sign}\frac{{{abs(frac.numerator)}}}{{{frac.denominator}}}"
    return text


def emit_table(family: str, ranges: Mapping[str, Span], fmt: str = "csv") -> str:
    """Render a deterministic table document."""
    if fmt not in FORMATS:
        raise ValueError(f"unknown format {fmt!r}")
    cols, rows = table_rows(family, ranges)
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(cols)
        w.writerows(rows)
        return buf.getvalue()
    if fmt == "json":
        doc = {"family": family, "columns": cols, "rows": [dict(zip(cols, r)) for r in rows]}
        return json.dumps(doc, indent=2) + "\n"
    return _latex(family, cols, rows)


def _latex(family: str, cols: Sequence[str], rows: Sequence[Sequence[str]]) -> str:
    symbol = _FAMILY_SPECS[family][1] if family in _FAMILY_SPECS else None
    heads = []
    for c in cols:
        if c == "value" and symbol:
            heads.append(f"${symbol}$")
        elif c == "limit_q1":
            heads.append(r"$q \to 1$")
        else:
            heads.append(f"${c}$" if len(c) == 1 else c.replace("_", r"\_"))
    lines = [r"\begin{tabular}{" + "l" * len(cols) + "}", " & ".join(heads) + r" \\", r"\hline"]
    for r in rows:
        cells = []
        for c, v in zip(cols, r):
            if c == "value":
                cells.append(f"${_value_latex(family, r, cols)}$")
            else:
                cells.append(f"${_latex_cell(v)}$")
        lines.append(" & ".join(cells) + r" \\")
    lines.append(r"\end{tabular}")
    return "\n".join(lines) + "\n"


def _value_latex(family: str, row: Sequence[str], cols: Sequence[str]) -> str:
    symbols, _, fn = _FAMILY_SPECS[family]
    p = {c: int(v) for c, v in zip(cols, row) if c in ("n", "k", "m", "x")}
    return fn(*(p[s] for s in symbols)).latex()
