"""Sensitivity reports, parameter sweeps, closed-form verification, CSV.

A sensitivity report evaluates a measure on w and on reverse(w) and
records the additive (rev - fwd) and multiplicative (rev / fwd) change,
the latter as an exact Fraction so monotonicity claims can be checked
as strict inequality chains.

Sweeps evaluate whole parameter grids and emit rows for the swept
family and for its reversed partner (derived by swapping orientations,
never recomputed).  Output is deterministic: rows are ordered by
family block, then parameter, then measure id.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .bwt import bbwt, bwt, bwt_sentinel
from .families import (
    REV_PARTNER,
    FamilySpec,
    generate,
    predictions,
    transform_predictions,
)
from .lexparse import lex_parse
from .lz import lz_end_greedy, lz_end_optimal, lz_no_overlap, lz_parse
from .measures import right_extension_count, substring_complexity
from .suffixes import SuffixContext, build_suffix_context
from .text import Text, reverse

MEASURE_IDS = ("delta", "e", "r", "r_b", "r_dollar", "v", "z", "z_e", "z_end", "z_no")

DEFAULT_NODE_BUDGET = 10**6


class _MeasureRunner:
    """Evaluates measures on one text, sharing the suffix context."""

    def __init__(self, w: Text, node_budget: int = DEFAULT_NODE_BUDGET):
        self.w = w
        self.node_budget = node_budget
        self._ctx: SuffixContext | None = None

    @property
    def ctx(self) -> SuffixContext:
        if self._ctx is None:
            self._ctx = build_suffix_context(self.w)
        return self._ctx

    def value(self, measure: str) -> tuple[object, bool]:
        """(value, exact); exact is False only for budget-limited z_end."""
        w = self.w
        if measure == "r":
            return bwt(w).run_count, True
        if measure == "r_dollar":
            return bwt_sentinel(w).run_count, True
        if measure == "r_b":
            return bbwt(w).run_count, True
        if measure == "z":
            return len(lz_parse(w, self.ctx)), True
        if measure == "z_no":
            return len(lz_no_overlap(w, self.ctx)), True
        if measure == "z_e":
            return len(lz_end_greedy(w, self.ctx)), True
        if measure == "z_end":
            parsing, exact = lz_end_optimal(w, self.node_budget, self.ctx)
            return len(parsing), exact
        if measure == "v":
            return len(lex_parse(w, self.ctx)), True
        if measure == "delta":
            return substring_complexity(w, self.ctx), True
        if measure == "e":
            return right_extension_count(w), True
        raise KeyError(f"unknown measure id {measure!r}")


def measure_value(
    w: Text, measure: str, node_budget: int = DEFAULT_NODE_BUDGET
) -> tuple[object, bool]:
    if measure not in MEASURE_IDS:
        raise KeyError(f"unknown measure id {measure!r}")
    return _MeasureRunner(w, node_budget).value(measure)


@dataclass(frozen=True)
class SensitivityReport:
    measure: str
    value_fwd: object           # int | Fraction
    value_rev: object
    additive: object            # value_rev - value_fwd, exact
    multiplicative: Fraction | None  # value_rev / value_fwd when value_fwd > 0
    exact: bool

    def swapped(self) -> "SensitivityReport":
        mult = None
        if self.value_rev and self.value_rev > 0:
            mult = Fraction(self.value_fwd) / Fraction(self.value_rev)
        return SensitivityReport(
            self.measure, self.value_rev, self.value_fwd,
            self.value_fwd - self.value_rev, mult, self.exact,
        )


def _report(measure: str, fwd: tuple[object, bool], rev: tuple[object, bool]) -> SensitivityReport:
    vf, ef = fwd
    vr, er = rev
    mult = Fraction(vr) / Fraction(vf) if vf and vf > 0 else None
    return SensitivityReport(measure, vf, vr, vr - vf, mult, ef and er)


def sensitivity_report(
    w: Text, measures: Iterable[str], node_budget: int = DEFAULT_NODE_BUDGET
) -> list[SensitivityReport]:
    """One report per measure id, ordered by measure id."""
    if len(w) == 0:
        raise ValueError("sensitivity reports require a non-empty text")
    wanted = sorted(set(measures))
    for m in wanted:
        if m not in MEASURE_IDS:
            raise KeyError(f"unknown measure id {m!r}")
    fwd = _MeasureRunner(w, node_budget)
    rev = _MeasureRunner(reverse(w), node_budget)
    return [_report(m, fwd.value(m), rev.value(m)) for m in wanted]


@dataclass(frozen=True)
class SweepRow:
    family: str
    param: int | None
    n: int
    measure: str
    value_fwd: object
    value_rev: object
    additive: object
    multiplicative: Fraction | None
    exact: bool


def sweep(
    family: str,
    params: Sequence[int | None],
    measures: Iterable[str],
    node_budget: int = DEFAULT_NODE_BUDGET,
) -> list[SweepRow]:
    """Evaluate a parameter grid; emits the swept family's rows followed
    by the reversed partner's rows (derived, not recomputed)."""
    base_rows: list[SweepRow] = []
    partner_rows: list[SweepRow] = []
    partner = REV_PARTNER[family]
    for param in params:
        spec = FamilySpec(family, param)
        w = generate(spec)
        for rep in sensitivity_report(w, measures, node_budget):
            base_rows.append(SweepRow(
                family, param, len(w), rep.measure, rep.value_fwd, rep.value_rev,
                rep.additive, rep.multiplicative, rep.exact,
            ))
            back = rep.swapped()
            partner_rows.append(SweepRow(
                partner, param, len(w), back.measure, back.value_fwd, back.value_rev,
                back.additive, back.multiplicative, back.exact,
            ))
    return base_rows + partner_rows


CSV_HEADER = "family,param,n,measure,value_fwd,value_rev,additive,multiplicative_num,multiplicative_den,exact"


def _fmt_value(v: object) -> str:
    if isinstance(v, Fraction):
        return f"{v.numerator}/{v.denominator}"
    return str(v)


def _parse_value(s: str) -> object:
    if "/" in s:
        num, den = s.split("/")
        return Fraction(int(num), int(den))
    return int(s)


def rows_to_csv(rows: Iterable[SweepRow]) -> str:
    lines = [CSV_HEADER]
    for r in rows:
        mnum = str(r.multiplicative.numerator) if r.multiplicative is not None else ""
        mden = str(r.multiplicative.denominator) if r.multiplicative is not None else ""
        lines.append(",".join([
            r.family,
            "" if r.param is None else str(r.param),
            str(r.n),
            r.measure,
            _fmt_value(r.value_fwd),
            _fmt_value(r.value_rev),
            _fmt_value(r.additive),
            mnum,
            mden,
            "true" if r.exact else "false",
        ]))
    return "\n".join(lines) + "\n"


def rows_from_csv(text: str) -> list[SweepRow]:
    lines = [ln for ln in text.splitlines() if ln]
    if not lines or lines[0] != CSV_HEADER:
        raise ValueError("unrecognized CSV header")
    rows = []
    for ln in lines[1:]:
        f, param, n, measure, vf, vr, add, mnum, mden, exact = ln.split(",")
        mult = Fraction(int(mnum), int(mden)) if mnum else None
        rows.append(SweepRow(
            f, int(param) if param else None, int(n), measure,
            _parse_value(vf), _parse_value(vr), _parse_value(add), mult,
            exact == "true",
        ))
    return rows


@dataclass(frozen=True)
class VerifyRow:
    family: str
    param: int | None
    check: str                 # measure id, or "bwt"/"bbwt" for transform strings
    expected: object
    computed: object
    ok: bool


def verify(
    family: str,
    params: Sequence[int | None],
    node_budget: int = DEFAULT_NODE_BUDGET,
) -> list[VerifyRow]:
    """Compare every available closed-form prediction (measure values and
    transform strings) against direct computation."""
    rows: list[VerifyRow] = []
    for param in params:
        spec = FamilySpec(family, param)
        w = generate(spec)
        runner = _MeasureRunner(w, node_budget)
        for pred in predictions(spec):
            computed, exact = runner.value(pred.measure)
            ok = exact and computed == pred.value
            rows.append(VerifyRow(family, param, pred.measure, pred.value, computed, ok))
        for variant, expected in transform_predictions(spec):
            if variant == "plain":
                computed_t = bwt(w).output
                check = "bwt"
            else:
                computed_t = bbwt(w).output
                check = "bbwt"
            rows.append(VerifyRow(family, param, check, expected, computed_t,
                                  computed_t == expected))
    return rows
