"""Efficiency-table generation, serialization, and the printed-value audit.

Two stock grids are built in: `table_31` evaluates the plain shrinkage
estimator (efficiency, bias, and the per-block dominance ranges) over nine
departure rows, and `table_51` evaluates the truncated estimator over seven
guess intervals. Both take a GridSpec, so arbitrary grids work the same way.

The audit functions recompute every cell of the embedded printed tables and
classify disagreements instead of smoothing them over: a cell that reproduces
only under the source's rounded (sometimes misprinted) weight is an artifact
of the printing, and anything else outside tolerance is reported as a source
disagreement with its relative error.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass

from weibull_shrink import reference_data as ref
from weibull_shrink.model import BUILTIN_H
from weibull_shrink.risk import (
    DominanceRange,
    _arb_range_given_w,
    _bias_shrink_given_w,
    _mse_modified_given_w,
    _mse_range_given_w,
    _pre_shrink_given_w,
    admissible_p,
    arb_dominance_range,
    arb_shrink,
    best_range,
    mse_dominance_range,
    pre_modified,
    pre_shrink,
    rmse_mmse,
)

DEFAULT_DESIGNS = tuple(sorted((m, h) for (n, m), h in BUILTIN_H.items() if n == 20))

# audit tolerances: efficiencies are compared relatively, biases absolutely,
# range endpoints with an allowance for the source's truncate-vs-round habit
PRE_RTOL_31 = 0.01
ARB_ATOL_31 = 5e-3
PRE_RTOL_51 = 0.015
ENDPOINT_ATOL = 0.0101
LARGE_DISAGREEMENT = 0.05


class GridValidationError(ValueError):
    """Invalid grid; the message carries one line per offending entry."""


@dataclass(frozen=True)
class GridSpec:
    """Evaluation grid: designs as (m, h) pairs, p and q lists, departure rows."""

    h_values: tuple
    p_values: tuple
    q_values: tuple
    delta_rows: tuple

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "h_values", tuple((int(m), float(h)) for m, h in self.h_values)
        )
        object.__setattr__(self, "p_values", tuple(float(p) for p in self.p_values))
        object.__setattr__(self, "q_values", tuple(float(q) for q in self.q_values))
        object.__setattr__(
            self,
            "delta_rows",
            tuple((float(a), float(b)) for a, b in self.delta_rows),
        )
        problems = []
        if not self.h_values:
            problems.append("h_values is empty")
        if not self.p_values:
            problems.append("p_values is empty")
        if not self.q_values:
            problems.append("q_values is empty")
        if not self.delta_rows:
            problems.append("delta_rows is empty")
        for m, h in self.h_values:
            if not math.isfinite(h) or h <= 4.0:
                problems.append(f"design (m={m}, h={h}): need h > 4")
        for p in self.p_values:
            for m, h in self.h_values:
                if math.isfinite(h) and h > 4.0 and not admissible_p(p, h):
                    problems.append(f"p={p} is inadmissible at h={h} (m={m})")
        for q in self.q_values:
            if not math.isfinite(q) or q <= 0.0:
                problems.append(f"q={q}: need q > 0")
        for i, (d1, d2) in enumerate(self.delta_rows):
            if not (math.isfinite(d1) and math.isfinite(d2) and 0.0 < d1 <= d2):
                problems.append(f"delta row {i}: need 0 < delta1 <= delta2, got ({d1}, {d2})")
        if problems:
            raise GridValidationError(
                "invalid grid:\n  " + "\n  ".join(problems)
            )

    @classmethod
    def default_31(cls) -> "GridSpec":
        return cls(
            DEFAULT_DESIGNS,
            ref.GRID_P,
            ref.GRID_Q,
            tuple((a, b) for a, b, _ in ref.TABLE_31_DEPARTURES),
        )

    @classmethod
    def default_51(cls) -> "GridSpec":
        return cls(DEFAULT_DESIGNS, ref.GRID_P, ref.GRID_Q, ref.TABLE_51_INTERVALS)

    def subset(self, m=None, p=None, q=None) -> "GridSpec":
        """Restrict the grid to the given m, p, or q values (None keeps all)."""
        h_values = self.h_values if m is None else tuple(
            (mm, hh) for mm, hh in self.h_values if mm in set(int(x) for x in m)
        )
        p_values = self.p_values if p is None else tuple(
            x for x in self.p_values if x in set(float(v) for v in p)
        )
        q_values = self.q_values if q is None else tuple(
            x for x in self.q_values if x in set(float(v) for v in q)
        )
        return GridSpec(h_values, p_values, q_values, self.delta_rows)


@dataclass(frozen=True)
class TableCell:
    """One evaluated grid point; ranges ride along on plain-estimator cells."""

    m: int
    h: float
    p: float
    q: float
    delta1: float
    delta2: float
    delta: float
    pre: float
    arb: float | None = None
    mse_range: DominanceRange | None = None
    arb_range: DominanceRange | None = None
    best: DominanceRange | None = None

    def __post_init__(self) -> None:
        if not math.isfinite(self.pre) or self.pre < 0.0:
            raise ValueError(f"pre must be finite and >= 0, got {self.pre!r}")
        if self.arb is not None and (not math.isfinite(self.arb) or self.arb < 0.0):
            raise ValueError(f"arb must be finite and >= 0, got {self.arb!r}")

    def to_dict(self) -> dict:
        def span(r: DominanceRange | None):
            if r is None:
                return None
            if r.is_empty:
                return []
            return [r.lo, r.hi]

        return {
            "m": self.m,
            "h": self.h,
            "p": self.p,
            "q": self.q,
            "delta1": self.delta1,
            "delta2": self.delta2,
            "delta": self.delta,
            "pre": self.pre,
            "arb": self.arb,
            "mse_range": span(self.mse_range),
            "arb_range": span(self.arb_range),
            "best": span(self.best),
        }


def table_31(spec: GridSpec) -> list:
    """Plain-shrinkage efficiency/bias cells with per-(p,q,m) dominance ranges.

    Iteration order is q outermost, then departure row, then p, then design,
    mirroring the printed layout; the order is fixed regardless of how cells
    are evaluated.
    """
    cells = []
    ranges = {}
    for q in spec.q_values:
        for d1, d2 in spec.delta_rows:
            delta = 0.5 * (d1 + d2)
            for p in spec.p_values:
                for m, h in spec.h_values:
                    key = (p, q, m)
                    if key not in ranges:
                        ranges[key] = (
                            mse_dominance_range(h, p, q),
                            arb_dominance_range(h, p, q),
                            best_range(h, p, q),
                        )
                    r_mse, r_arb, r_best = ranges[key]
                    cells.append(
                        TableCell(
                            m=m,
                            h=h,
                            p=p,
                            q=q,
                            delta1=d1,
                            delta2=d2,
                            delta=delta,
                            pre=pre_shrink(h, p, q, delta),
                            arb=arb_shrink(h, p, q, delta),
                            mse_range=r_mse,
                            arb_range=r_arb,
                            best=r_best,
                        )
                    )
    return cells


def table_51(spec: GridSpec) -> list:
    """Truncated-shrinkage efficiency cells; no bias column, no ranges."""
    cells = []
    for q in spec.q_values:
        for d1, d2 in spec.delta_rows:
            for p in spec.p_values:
                for m, h in spec.h_values:
                    cells.append(
                        TableCell(
                            m=m,
                            h=h,
                            p=p,
                            q=q,
                            delta1=d1,
                            delta2=d2,
                            delta=0.5 * (d1 + d2),
                            pre=pre_modified(h, p, q, d1, d2),
                        )
                    )
    return cells


# ---------------------------------------------------------------------------
# serialization

CSV_HEADER = [
    "m", "h", "p", "q", "delta1", "delta2", "delta",
    "pre", "arb", "range_lo", "range_hi", "best_lo", "best_hi",
]


def _full(x) -> str:
    if x is None:
        return ""
    if isinstance(x, int):
        return str(x)
    return format(x, ".17g")


def _range_fields(r: DominanceRange | None) -> tuple[str, str]:
    if r is None or r.is_empty:
        return "", ""
    return _full(r.lo), _full(r.hi)


def cells_to_csv(cells) -> str:
    """RFC-4180 CSV at full precision; range_lo/range_hi hold the MSE range."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\r\n")
    writer.writerow(CSV_HEADER)
    for c in cells:
        lo, hi = _range_fields(c.mse_range)
        blo, bhi = _range_fields(c.best)
        writer.writerow(
            [
                _full(c.m), _full(c.h), _full(c.p), _full(c.q),
                _full(c.delta1), _full(c.delta2), _full(c.delta),
                _full(c.pre), _full(c.arb), lo, hi, blo, bhi,
            ]
        )
    return buf.getvalue()


def cells_to_json(cells) -> str:
    return json.dumps([c.to_dict() for c in cells], indent=2, allow_nan=False) + "\n"


def cells_to_text(cells) -> str:
    """Aligned plain text, four decimals, '-' where a column does not apply."""
    header = ["m", "h", "p", "q", "d1", "d2", "delta", "pre", "arb",
              "mse_lo", "mse_hi", "best_lo", "best_hi"]

    def fmt(x) -> str:
        return "-" if x is None else f"{x:.4f}"

    rows = [header]
    for c in cells:
        lo, hi = (None, None) if c.mse_range is None or c.mse_range.is_empty else (
            c.mse_range.lo, c.mse_range.hi)
        blo, bhi = (None, None) if c.best is None or c.best.is_empty else (
            c.best.lo, c.best.hi)
        rows.append([str(c.m), f"{c.h:.4f}", f"{c.p:g}", f"{c.q:g}",
                     f"{c.delta1:.4f}", f"{c.delta2:.4f}", f"{c.delta:.4f}",
                     f"{c.pre:.4f}", fmt(c.arb), fmt(lo), fmt(hi), fmt(blo), fmt(bhi)])
    widths = [max(len(r[i]) for r in rows) for i in range(len(header))]
    lines = ["  ".join(val.rjust(widths[i]) for i, val in enumerate(r)) for r in rows]
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# audit of the embedded printed tables

PASS = "pass"
ARTIFACT = "printed-weight-artifact"
DISAGREE = "source-disagreement"
UNVERIFIABLE = "unverifiable"
INCONSISTENT = "inconsistent"


@dataclass(frozen=True)
class CellAudit:
    table: str
    m: int
    p: float
    q: float
    delta1: float
    delta2: float
    printed_pre: float
    computed_pre: float
    rel_err_pre: float
    status: str
    printed_arb: float | None = None
    computed_arb: float | None = None
    abs_err_arb: float | None = None
    large: bool = False


@dataclass(frozen=True)
class RangeAudit:
    kind: str
    m: int
    p: float
    q: float
    printed: tuple | None
    computed: tuple
    status: str


def _h_for(m: int) -> float:
    return dict(DEFAULT_DESIGNS)[m]


def audit_table_31() -> list:
    """Classify every printed efficiency/bias cell of the nine-row table."""
    audits = []
    for q in ref.GRID_Q:
        for i, (d1, d2, delta) in enumerate(ref.TABLE_31_DEPARTURES):
            for p in ref.GRID_P:
                for m in ref.GRID_M:
                    h = _h_for(m)
                    printed_pre, printed_arb = ref.printed_pre_arb(p, q, i, m)
                    pre = pre_shrink(h, p, q, delta)
                    arb = arb_shrink(h, p, q, delta)
                    rel = abs(pre - printed_pre) / printed_pre
                    err_arb = abs(arb - printed_arb)
                    if rel <= PRE_RTOL_31 and err_arb <= ARB_ATOL_31:
                        status = PASS
                    else:
                        w_hdr = ref.W_PRINTED[p][m]
                        pre_hdr = _pre_shrink_given_w(h, q, delta, w_hdr)
                        arb_hdr = abs(_bias_shrink_given_w(q, delta, w_hdr))
                        ok_hdr = (
                            abs(pre_hdr - printed_pre) / printed_pre <= PRE_RTOL_31
                            and abs(arb_hdr - printed_arb) <= ARB_ATOL_31
                        )
                        status = ARTIFACT if ok_hdr else DISAGREE
                    audits.append(
                        CellAudit(
                            table="31",
                            m=m,
                            p=p,
                            q=q,
                            delta1=d1,
                            delta2=d2,
                            printed_pre=printed_pre,
                            computed_pre=pre,
                            rel_err_pre=rel,
                            printed_arb=printed_arb,
                            computed_arb=arb,
                            abs_err_arb=err_arb,
                            status=status,
                            large=rel > LARGE_DISAGREEMENT,
                        )
                    )
    return audits


def audit_table_51() -> list:
    """Classify every printed efficiency cell of the truncated-estimator table."""
    audits = []
    for q in ref.GRID_Q:
        for i, (d1, d2) in enumerate(ref.TABLE_51_INTERVALS):
            for p in ref.GRID_P:
                for m in ref.GRID_M:
                    h = _h_for(m)
                    printed = ref.TABLE_51[(q, p, m)][i]
                    pre = pre_modified(h, p, q, d1, d2)
                    rel = abs(pre - printed) / printed
                    if rel <= PRE_RTOL_51:
                        status = PASS
                    else:
                        w_hdr = ref.W_PRINTED[p][m]
                        pre_hdr = 100.0 * rmse_mmse(h) / _mse_modified_given_w(
                            h, q, d1, d2, w_hdr
                        )
                        ok_hdr = abs(pre_hdr - printed) / printed <= PRE_RTOL_51
                        status = ARTIFACT if ok_hdr else DISAGREE
                    audits.append(
                        CellAudit(
                            table="51",
                            m=m,
                            p=p,
                            q=q,
                            delta1=d1,
                            delta2=d2,
                            printed_pre=printed,
                            computed_pre=pre,
                            rel_err_pre=rel,
                            status=status,
                            large=rel > LARGE_DISAGREEMENT,
                        )
                    )
    return audits


def _endpoint_matches(computed: float, printed: float) -> bool:
    # the source truncated some endpoints instead of rounding (6.262 -> 6.25)
    truncated = math.floor(computed * 100.0) / 100.0
    return min(abs(computed - printed), abs(truncated - printed)) <= ENDPOINT_ATOL


def _ranges_given_w(h: float, q: float, w: float) -> dict:
    r_mse = _mse_range_given_w(h, q, w)
    r_arb = _arb_range_given_w(h, q, w)
    return {"mse": r_mse, "arb": r_arb, "best": r_mse.intersect(r_arb)}


def _range_matches(r: DominanceRange, printed: tuple) -> bool:
    return (not r.is_empty) and _endpoint_matches(r.lo, printed[0]) and _endpoint_matches(
        r.hi, printed[1]
    )


def audit_ranges_31() -> list:
    """Compare printed dominance-range endpoints against recomputation.

    Entries the source never printed come back `unverifiable`; endpoints that
    reproduce only under the printed rounded weight are artifacts; a printed
    best range that duplicates the MSE range where recomputation says it
    should be narrower is `inconsistent`.
    """
    audits = []
    for (p, q), rec in sorted(ref.RANGES_31.items()):
        for m in ref.GRID_M:
            h = _h_for(m)
            computed = {
                "mse": mse_dominance_range(h, p, q),
                "arb": arb_dominance_range(h, p, q),
                "best": best_range(h, p, q),
            }
            with_header_w = _ranges_given_w(h, q, ref.W_PRINTED[p][m])
            for kind in ("mse", "arb", "best"):
                printed = rec[kind][m]
                got = computed[kind]
                got_pair = (got.lo, got.hi)
                if printed is None:
                    status = UNVERIFIABLE
                elif _range_matches(got, printed):
                    status = PASS
                elif _range_matches(with_header_w[kind], printed):
                    status = ARTIFACT
                elif kind == "best" and printed == rec["mse"][m]:
                    status = INCONSISTENT
                else:
                    status = DISAGREE
                audits.append(
                    RangeAudit(
                        kind=kind,
                        m=m,
                        p=p,
                        q=q,
                        printed=printed,
                        computed=got_pair,
                        status=status,
                    )
                )
    return audits


@dataclass(frozen=True)
class AuditSummary:
    table: str
    total: int
    passed: int
    artifacts: int
    disagreements: int
    large: int

    @property
    def unambiguous(self) -> int:
        return self.total - self.artifacts

    @property
    def pass_rate(self) -> float:
        return 100.0 * self.passed / self.unambiguous


def summarize_audit(audits) -> AuditSummary:
    return AuditSummary(
        table=audits[0].table,
        total=len(audits),
        passed=sum(a.status == PASS for a in audits),
        artifacts=sum(a.status == ARTIFACT for a in audits),
        disagreements=sum(a.status == DISAGREE for a in audits),
        large=sum(a.large for a in audits),
    )


def format_diff_report(audits, range_audits=None) -> str:
    """Human-readable audit: one line per non-passing cell plus a summary."""
    lines = []
    for a in audits:
        if a.status == PASS:
            continue
        mark = " (>5%)" if a.large else ""
        detail = f"printed pre={a.printed_pre} computed={a.computed_pre:.2f} rel={a.rel_err_pre:.2%}"
        if a.printed_arb is not None:
            detail += f"; printed arb={a.printed_arb} computed={a.computed_arb:.4f}"
        lines.append(
            f"[{a.status}{mark}] m={a.m} p={a.p:g} q={a.q:g} "
            f"rows ({a.delta1:g}, {a.delta2:g}): {detail}"
        )
    s = summarize_audit(audits)
    lines.append(
        f"summary: {s.passed}/{s.unambiguous} unambiguous cells within tolerance "
        f"({s.pass_rate:.1f}%); {s.artifacts} cells reproduce only under the "
        f"printed rounded weight; {s.disagreements} source disagreements; "
        f"{s.large} flagged cells off by more than 5%"
    )
    if range_audits is not None:
        for r in range_audits:
            if r.status == PASS:
                continue
            lines.append(
                f"[range {r.status}] {r.kind} m={r.m} p={r.p:g} q={r.q:g}: "
                f"printed={r.printed} computed=({r.computed[0]:.4f}, {r.computed[1]:.4f})"
            )
        counts = {}
        for r in range_audits:
            counts[r.status] = counts.get(r.status, 0) + 1
        lines.append(
            "range summary: "
            + ", ".join(
                f"{counts.get(k, 0)} {k}"
                for k in (PASS, ARTIFACT, UNVERIFIABLE, INCONSISTENT, DISAGREE)
            )
        )
    return "\n".join(lines) + "\n"
