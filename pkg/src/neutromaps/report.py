"""JSON and Markdown renderings of a RunReport.

JSON output is deterministic: keys are sorted and every vector or matrix
carries both a 2-decimal ``display`` form and an ``exact`` token form.
"""

from __future__ import annotations

import json

from .associative import FitVector, FixedSignalPair
from .cognitive import HiddenPattern, PatternKind
from .interval import RunFailure
from .matrix import ModelMatrix
from .relational import BidirectionalPattern
from .scalar import display_token, format_number, format_token


def _vec(values) -> dict:
    values = tuple(values)
    return {"display": [display_token(v) for v in values], "exact": [format_token(v) for v in values]}


def _mat(m: ModelMatrix) -> dict:
    return {"display": [[display_token(v) for v in row] for row in m.entries],
            "exact": [[format_token(v) for v in row] for row in m.entries],
            "scale": str(m.domain)}


def _pattern_fields(kind: PatternKind, period) -> dict:
    out = {"pattern": kind.value}
    if kind is PatternKind.LIMIT_CYCLE:
        out["period"] = period
    return out


def _result_json(key, res, trace: bool) -> dict:
    if isinstance(res, RunFailure):
        return {"key": key, "status": "error", "error": type(res.error).__name__,
                "message": res.message}
    out = {"key": key, "status": "ok"}
    if isinstance(res, HiddenPattern):
        out.update(_pattern_fields(res.kind, res.period), steps=res.steps)
        if res.kind is PatternKind.LIMIT_CYCLE:
            out["cycle"] = [_vec(s) for s in res.cycle]
        else:
            out["state"] = _vec(res.terminal)
        if trace:
            out["trajectory"] = [_vec(s) for s in res.trajectory]
    elif isinstance(res, BidirectionalPattern):
        out.update(_pattern_fields(res.kind, res.period), sweeps=res.sweeps,
                   domain=_vec(res.domain_terminal), range=_vec(res.range_terminal))
        if trace:
            out["trajectory"] = [{"side": s.side.value, **_vec(s.values)} for s in res.trajectory]
    elif isinstance(res, FitVector):
        out.update(side=res.side.value, fit=_vec(res.values))
    elif isinstance(res, FixedSignalPair):
        out.update(_pattern_fields(res.kind, res.period), sweeps=res.iterations,
                   row=res.row_signal.tokens, column=res.col_signal.tokens)
        if trace:
            out["trajectory"] = [
                {"side": a.side.value, "raw": _vec(a.raw) if a.raw is not None else None,
                 "signal": a.signal.tokens}
                for a in res.trajectory]
    else:
        out["vector"] = _vec(res)
    return out


def report_dict(report) -> dict:
    out = {
        "tool": {"name": "neutromaps", "version": report.version},
        "model": report.model,
        "order": report.order.value,
        "inputs": [{"path": d.name, "sha256": d.sha256} for d in report.inputs],
    }
    if report.side:
        out["side"] = report.side
    if report.interval is not None:
        iv = report.interval
        out["interval"] = {"members": list(iv.panel.member_ids),
                           "min": _mat(iv.a_min), "max": _mat(iv.b_max),
                           "opt": _mat(iv.o_opt), "avg": _mat(iv.m_avg)}
    if report.runs:
        out["runs"] = [
            {"state": _vec(run.state),
             "results": [_result_json(k, v, report.trace) for k, v in run.results.items()]}
            for run in report.runs]
    if report.solutions:
        out["solutions"] = [
            {"pair": label, "status": sol.status.value, "rule": sol.rule.value,
             "residual": format_number(sol.residual),
             "p_hat": _mat(sol.p_hat) if sol.p_hat is not None else None,
             "candidate": _mat(sol.candidate) if sol.candidate is not None else None}
            for label, sol in report.solutions]
    return out


def emit_json(report) -> str:
    return json.dumps(report_dict(report), sort_keys=True, indent=2, ensure_ascii=False) + "\n"


# ---------------------------------------------------------------- markdown


def _table(header, rows) -> list:
    lines = ["| " + " | ".join(header) + " |", "|" + "|".join("---" for _ in header) + "|"]
    lines += ["| " + " | ".join(str(c) for c in row) + " |" for row in rows]
    return lines


def _labels(labels, n, prefix):
    return list(labels) if labels else [f"{prefix}{k}" for k in range(1, n + 1)]


def _md_columns(report, res):
    """Header cells for one successful result."""
    rl, cl = report.row_labels, report.col_labels
    if isinstance(res, HiddenPattern):
        return _labels(rl, len(res.trajectory[0]), "C") + ["pattern", "steps"]
    if isinstance(res, BidirectionalPattern):
        d = _labels(rl, len(res.domain_terminal), "D")
        r = _labels(cl, len(res.range_terminal), "R")
        if set(d) & set(r):
            d, r = [f"x.{t}" for t in d], [f"y.{t}" for t in r]
        return d + r + ["pattern", "sweeps"]
    if isinstance(res, FitVector):
        labels = cl if res.side.value == "column" else rl
        return _labels(labels, len(res.values), "F")
    if isinstance(res, FixedSignalPair):
        return ["row signal", "column signal", "pattern", "sweeps"]
    # a forward run lands on the row labels, a reverse run on the column labels
    labels = rl if report.side == "forward" else cl
    return _labels(labels, len(res), "V")


def _md_cells(res) -> list:
    def pattern(kind, period):
        return kind.value if kind is not PatternKind.LIMIT_CYCLE else f"{kind.value} (period {period})"

    if isinstance(res, HiddenPattern):
        state = res.terminal if res.kind is not PatternKind.LIMIT_CYCLE else res.cycle[0]
        return [display_token(v) for v in state] + [pattern(res.kind, res.period), res.steps]
    if isinstance(res, BidirectionalPattern):
        return ([display_token(v) for v in res.domain_terminal]
                + [display_token(v) for v in res.range_terminal]
                + [pattern(res.kind, res.period), res.sweeps])
    if isinstance(res, FitVector):
        return [display_token(v) for v in res.values]
    if isinstance(res, FixedSignalPair):
        return [f"({res.row_signal.tokens})", f"({res.col_signal.tokens})",
                pattern(res.kind, res.period), res.iterations]
    return [display_token(v) for v in res]


def emit_markdown(report) -> str:
    lines = [f"# {report.model} report", "",
             f"neutromaps {report.version}, order {report.order.value}"
             + (f", side {report.side}" if report.side else ""), ""]
    lines += ["## Inputs", ""]
    lines += _table(["path", "sha256"], [(d.name, d.sha256) for d in report.inputs]) + [""]
    if report.interval is not None and not report.runs:
        iv = report.interval
        for key, m in (("min", iv.a_min), ("max", iv.b_max), ("opt", iv.o_opt), ("avg", iv.m_avg)):
            lines += [f"## {key}", ""]
            header = [""] + _labels(m.col_labels, m.cols, "")
            rows = [[lab] + [display_token(v) for v in row]
                    for lab, row in zip(_labels(m.row_labels, m.rows, ""), m.entries)]
            lines += _table(header, rows) + [""]
    for run in report.runs:
        lines += ["## State (" + " ".join(display_token(v) for v in run.state) + ")", ""]
        ok = [r for r in run.results.values() if not isinstance(r, RunFailure)]
        header = ["key"] + (_md_columns(report, ok[0]) if ok else ["result"])
        rows = []
        for key, res in run.results.items():
            if isinstance(res, RunFailure):
                rows.append([key, f"error: {res.message}"] + [""] * (len(header) - 2))
            else:
                rows.append([key] + _md_cells(res))
        lines += _table(header, rows) + [""]
    for label, sol in report.solutions:
        lines += [f"## {label}: {sol.status.value}", ""]
        m = sol.p_hat if sol.p_hat is not None else sol.candidate
        if sol.p_hat is None:
            lines += [f"no solution; residual of the greatest candidate is "
                      f"{format_number(sol.residual)}", ""]
        header = [""] + _labels(m.col_labels, m.cols, "p")
        rows = [[lab] + [display_token(v) for v in row]
                for lab, row in zip(_labels(m.row_labels, m.rows, "r"), m.entries)]
        lines += _table(header, rows) + [""]
    return "\n".join(lines).rstrip() + "\n"


def emit_report(report, fmt: str = "json") -> str:
    if fmt == "json":
        return emit_json(report)
    if fmt == "md":
        return emit_markdown(report)
    raise ValueError(f"unknown report format {fmt!r}")
