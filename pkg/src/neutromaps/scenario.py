"""Declarative run requests and their reports.

A scenario file is JSON::

    {
      "model": "fcim",
      "experts": ["symptom_disease/M1.matrix", "symptom_disease/M2.matrix"],
      "order": "usual",
      "states": ["1 0 0 0 0"],
      "dynamics": {"kind": "weighted", "threshold": 0, "clamp": [1], "max_iters": 1000},
      "side": "domain",
      "rule": "maxmin",
      "format": "json",
      "trace": false
    }

Paths resolve against the scenario's directory, then the working directory,
then the fixture directory.  Clamp entries are 1-based indices or concept
labels; without ``clamp`` the coordinates equal to 1 in each state stay on.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Optional

from . import __version__
from .associative import BamOptions, Engine, FitVector, VectorSide, _check_alphabet, bam_converge, fam_recall
from .cognitive import Dynamics, DynamicsKind, hidden_pattern
from .documents import MatrixDocument, load_document, parse_document, print_document, resolve_path
from .errors import ConfigError, EmptyPanel, InputError, NeutroError
from .fre import max_solution_matrix
from .interval import ExpertPanel, IntervalModel, RunFailure, build_interval
from .matrix import CompositionRule, ModelMatrix, vec_compose
from .relational import BipartiteState, Side, frm_hidden_pattern
from .scalar import ONE, OrderMode, format_token, vector

MODELS = ("fcim", "frim", "faim", "ibam", "nbam", "ncm", "fre")
_DEFAULT_DYNAMICS = {"fcim": "weighted", "ncm": "trinary", "frim": "weighted"}
_SIDES = {
    "frim": ("domain", "range"),
    "faim": ("row", "column"),
    "ibam": ("row", "column"),
    "nbam": ("row", "column"),
    "fre": ("forward", "reverse"),
}


@dataclass(frozen=True)
class Scenario:
    model: str
    experts: tuple = ()
    order: OrderMode = OrderMode.USUAL
    states: tuple = ()
    dynamics_kind: Optional[DynamicsKind] = None
    threshold: Fraction = Fraction(0)
    clamp: Optional[tuple] = None
    retention: bool = False
    max_iters: int = 1000
    side: Optional[str] = None
    rule: CompositionRule = CompositionRule.MAX_MIN
    q: tuple = ()
    r: tuple = ()
    report_format: str = "json"
    trace: bool = False
    base: Optional[Path] = None

    def __post_init__(self):
        if self.model not in MODELS:
            raise ConfigError(f"model must be one of {', '.join(MODELS)}, got {self.model!r}")
        if self.side is not None and self.side not in _SIDES.get(self.model, ()):
            raise ConfigError(f"side {self.side!r} is not valid for {self.model}")
        if self.report_format not in ("json", "md"):
            raise ConfigError("format must be json or md")

    @classmethod
    def from_dict(cls, data: dict, base: Optional[Path] = None) -> "Scenario":
        data = dict(data)
        known = {"model", "experts", "order", "states", "dynamics", "side", "rule", "q", "r",
                 "format", "trace"}
        unknown = set(data) - known
        if unknown:
            raise ConfigError(f"unknown scenario keys: {', '.join(sorted(unknown))}")
        dyn = dict(data.get("dynamics") or {})
        bad = set(dyn) - {"kind", "threshold", "clamp", "retention", "max_iters"}
        if bad:
            raise ConfigError(f"unknown dynamics keys: {', '.join(sorted(bad))}")
        try:
            return cls(
                model=str(data.get("model", "")).lower(),
                experts=tuple(data.get("experts", ())),
                order=OrderMode.parse(data.get("order", "usual")),
                states=tuple(_state_tokens(s) for s in data.get("states", ())),
                dynamics_kind=DynamicsKind(dyn["kind"]) if "kind" in dyn else None,
                threshold=Fraction(str(dyn.get("threshold", 0))),
                clamp=tuple(dyn["clamp"]) if dyn.get("clamp") is not None else None,
                retention=bool(dyn.get("retention", False)),
                max_iters=int(dyn.get("max_iters", 1000)),
                side=data.get("side"),
                rule=CompositionRule.parse(data.get("rule", "maxmin")),
                q=_as_tuple(data.get("q", ())),
                r=_as_tuple(data.get("r", ())),
                report_format=data.get("format", "json"),
                trace=bool(data.get("trace", False)),
                base=base,
            )
        except ValueError as exc:
            if isinstance(exc, InputError):
                raise
            raise ConfigError(str(exc)) from None


def _as_tuple(v):
    return (v,) if isinstance(v, (str, dict)) else tuple(v)


def _state_tokens(s) -> tuple:
    if isinstance(s, str):
        return tuple(format_token(t) for t in vector(s))
    return tuple(str(t) for t in s)


def load_scenario(path) -> Scenario:
    path = Path(path)
    try:
        data = json.loads(path.read_text(encoding="utf-8"))
    except OSError as exc:
        raise ConfigError(f"cannot read scenario {path}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise ConfigError(f"{path}: line {exc.lineno}, col {exc.colno}: {exc.msg}") from None
    if not isinstance(data, dict):
        raise ConfigError(f"{path}: scenario must be a JSON object")
    return Scenario.from_dict(data, path.parent)


# ----------------------------------------------------------------- reports


@dataclass(frozen=True)
class InputDigest:
    name: str
    sha256: str


@dataclass(frozen=True)
class StateRun:
    state: tuple
    results: dict


@dataclass(frozen=True)
class RunReport:
    model: str
    order: OrderMode
    inputs: tuple
    interval: Optional[IntervalModel]
    runs: tuple = ()
    solutions: tuple = ()  # (label, FreSolution) pairs
    row_labels: Optional[tuple] = None
    col_labels: Optional[tuple] = None
    side: Optional[str] = None
    trace: bool = False
    version: str = __version__

    @property
    def failures(self) -> list:
        return [res for run in self.runs for res in run.results.values()
                if isinstance(res, RunFailure)]

    @property
    def empty_solution(self) -> bool:
        return any(sol.status.value == "empty" for _, sol in self.solutions)


def _load(entry, base) -> tuple:
    """Return ``(document, digest)`` for a path or an inline document."""
    if isinstance(entry, dict):
        if "text" not in entry:
            raise ConfigError("inline experts need a 'text' field holding a matrix document")
        doc = parse_document(entry["text"])
        if entry.get("id"):
            doc = MatrixDocument(doc.kind, doc.matrix, entry["id"], doc.annotations)
        name = f"inline:{doc.member_id or 'expert'}"
        raw = print_document(doc).encode("utf-8")
    else:
        path = resolve_path(entry, base)
        doc = load_document(entry, base)
        name = str(entry)
        raw = path.read_bytes()
    return doc, InputDigest(name, hashlib.sha256(raw).hexdigest())


def _clamp_indices(spec, state, labels) -> frozenset:
    if spec is None:
        return frozenset(i for i, v in enumerate(state) if v == ONE)
    out = set()
    for item in spec:
        if isinstance(item, int) or str(item).isdigit():
            k = int(item)
            if not 1 <= k <= len(state):
                raise ConfigError(f"clamp index {k} out of range 1..{len(state)}")
            out.add(k - 1)
        elif labels and item in labels:
            out.add(labels.index(item))
        else:
            raise ConfigError(f"unknown clamp concept {item!r}")
    return frozenset(out)


def _guarded(key, fn):
    try:
        return fn()
    except NeutroError as exc:
        return RunFailure(key, exc)


def run_scenario(sc: Scenario) -> RunReport:
    if sc.model == "fre" and sc.r:
        return _run_fre_solve(sc)
    if not sc.experts:
        raise EmptyPanel("scenario has no experts")
    loaded = [_load(e, sc.base) for e in sc.experts]
    docs = [d for d, _ in loaded]
    digests = tuple(g for _, g in loaded)
    panel = ExpertPanel(tuple(d.matrix for d in docs),
                        tuple(d.member_id or f"M{k}" for k, d in enumerate(docs, 1)),
                        kind=docs[0].kind)
    iv = build_interval(panel, sc.order) if len(panel) > 1 else None
    keyed = iv.keyed() if iv is not None else dict(zip(panel.member_ids, panel.members))
    first = panel.members[0]

    if not sc.states:
        raise ConfigError("scenario has no initial states")
    runs = []
    for tokens in sc.states:
        state = vector(tokens)
        runner = _runner(sc, first, state, docs[0].kind)
        results = {key: _guarded(key, lambda m=m: runner(m)) for key, m in keyed.items()}
        runs.append(StateRun(state, results))
    return RunReport(sc.model, sc.order, digests, iv, tuple(runs), (),
                     first.row_labels, first.col_labels, _side(sc), sc.trace)


def _side(sc: Scenario) -> Optional[str]:
    if sc.model in _SIDES:
        return sc.side or _SIDES[sc.model][0]
    return None


def _expect_len(state, n, what):
    if len(state) != n:
        raise ConfigError(f"state has {len(state)} entries, {what} needs {n}")


def _runner(sc: Scenario, first: ModelMatrix, state, doc_kind):
    model = sc.model
    side = _side(sc)
    if model in ("fcim", "ncm", "frim"):
        kind = sc.dynamics_kind or DynamicsKind(
            "trinary" if model == "frim" and doc_kind == "nrm" else _DEFAULT_DYNAMICS[model])
        if model == "frim":
            n = first.rows if side == "domain" else first.cols
            labels = first.row_labels if side == "domain" else first.col_labels
        else:
            n, labels = first.rows, first.row_labels
        _expect_len(state, n, f"the {side or 'concept'} side")
        dyn = Dynamics(kind, sc.threshold, _clamp_indices(sc.clamp, state, labels), sc.max_iters)
        if model == "frim":
            seed = BipartiteState(Side(side), state)
            return lambda m: frm_hidden_pattern(m, seed, dyn)
        return lambda m: hidden_pattern(m, state, dyn)
    if model == "faim":
        vside = VectorSide(side)
        _expect_len(state, first.rows if vside is VectorSide.ROW else first.cols, f"the {side} side")
        fit = FitVector(state, vside)
        return lambda m: fam_recall(m, fit)
    if model in ("ibam", "nbam"):
        vside = VectorSide(side)
        _expect_len(state, first.rows if vside is VectorSide.ROW else first.cols, f"the {side} side")
        engine = Engine.BAM if model == "ibam" else Engine.NBAM
        opts = BamOptions(retention=sc.retention, max_sweeps=sc.max_iters)

        def run(m):
            _check_alphabet(m, engine)
            return bam_converge(m, state, opts, vside)
        return run
    # fre forward: P o Q^T for a column-side input, P^T o R for a row-side one
    rule = sc.rule
    if side == "forward":
        _expect_len(state, first.cols, "the forward input")
        return lambda m: vec_compose(state, m.T, rule)
    _expect_len(state, first.rows, "the reverse input")
    return lambda m: vec_compose(state, m, rule)


def _run_fre_solve(sc: Scenario) -> RunReport:
    if len(sc.q) != len(sc.r):
        raise ConfigError(f"{len(sc.q)} Q files for {len(sc.r)} R files")
    digests, solutions = [], []
    for q_entry, r_entry in zip(sc.q, sc.r):
        q_doc, q_dig = _load(q_entry, sc.base)
        r_doc, r_dig = _load(r_entry, sc.base)
        digests += [q_dig, r_dig]
        # P o Q = R with Q n x s and R m x s
        q, r = q_doc.matrix, r_doc.matrix
        label = f"{q_doc.member_id}/{r_doc.member_id}"
        solutions.append((label, max_solution_matrix(q, r, sc.rule)))
    return RunReport("fre", sc.order, tuple(digests), None, (), tuple(solutions), trace=sc.trace)


def interval_report(experts, order: OrderMode = OrderMode.USUAL, base=None) -> RunReport:
    """Report carrying only the interval built from ``experts``."""
    if not experts:
        raise EmptyPanel("no experts given")
    loaded = [_load(e, base) for e in experts]
    docs = [d for d, _ in loaded]
    panel = ExpertPanel(tuple(d.matrix for d in docs),
                        tuple(d.member_id or f"M{k}" for k, d in enumerate(docs, 1)),
                        kind=docs[0].kind)
    iv = build_interval(panel, order)
    first = panel.members[0]
    return RunReport("interval", order, tuple(g for _, g in loaded), iv,
                     row_labels=first.row_labels, col_labels=first.col_labels)
