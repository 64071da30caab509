"""FAM recall and discrete BAM / NBAM convergence."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional, Sequence, Union

from .cognitive import PatternKind, iterate
from .errors import DimensionMismatch, DomainViolation, ShapeMismatch
from .interval import IntervalModel, IntervalStack, run_keyed
from .matrix import CompositionRule, ModelMatrix, vec_compose
from .scalar import ZERO, NeutroScalar, SignalValue, bam_signal, scalar


class VectorSide(Enum):
    ROW = "row"
    COLUMN = "column"

    @property
    def other(self) -> "VectorSide":
        return VectorSide.COLUMN if self is VectorSide.ROW else VectorSide.ROW


class Engine(Enum):
    FAM = "fam"
    BAM = "bam"
    NBAM = "nbam"


@dataclass(frozen=True)
class FitVector:
    values: tuple
    side: VectorSide = VectorSide.ROW

    def __post_init__(self):
        values = tuple(scalar(v) for v in self.values)
        for i, v in enumerate(values):
            if v.indet != 0 or not 0 <= v.real <= 1:
                raise DomainViolation(i, v, reason="is not a fuzzy-unit fit value")
        object.__setattr__(self, "values", values)


def fam_recall(m: ModelMatrix, fit: FitVector) -> FitVector:
    """Row fit ``a`` gives ``a o M``; column fit ``b`` gives ``b o M^T``."""
    target = m if fit.side is VectorSide.ROW else m.T
    return FitVector(vec_compose(fit.values, target, CompositionRule.MAX_MIN), fit.side.other)


# --------------------------------------------------------------------- BAM


@dataclass(frozen=True)
class SignalVector:
    values: tuple
    side: VectorSide = VectorSide.ROW

    def __post_init__(self):
        vals = tuple(v if isinstance(v, SignalValue) else SignalValue.from_token(str(v))
                     for v in self.values)
        object.__setattr__(self, "values", vals)

    @property
    def tokens(self) -> str:
        return " ".join(v.token for v in self.values)

    @property
    def scalars(self) -> tuple:
        return tuple(v.scalar for v in self.values)


@dataclass(frozen=True)
class BamOptions:
    """Sweep options; thresholds and external inputs default to zero."""

    retention: bool = False
    row_thresholds: Optional[tuple] = None
    col_thresholds: Optional[tuple] = None
    row_inputs: Optional[tuple] = None
    col_inputs: Optional[tuple] = None
    max_sweeps: int = 10_000


@dataclass(frozen=True)
class Activation:
    """One half-sweep: the raw field activation and its signal."""

    side: VectorSide
    raw: Optional[tuple]
    signal: SignalVector


@dataclass(frozen=True)
class FixedSignalPair:
    row_signal: SignalVector
    col_signal: SignalVector
    iterations: int
    trajectory: tuple
    kind: PatternKind = PatternKind.FIXED_POINT
    period: Optional[int] = None

    @property
    def pair(self) -> tuple:
        return (self.row_signal.tokens, self.col_signal.tokens)


def _signals(raw, side, opts: BamOptions, previous=None) -> SignalVector:
    n = len(raw)
    thresholds = opts.row_thresholds if side is VectorSide.ROW else opts.col_thresholds
    inputs = opts.row_inputs if side is VectorSide.ROW else opts.col_inputs
    thresholds = tuple(scalar(t) for t in thresholds) if thresholds else (ZERO,) * n
    inputs = tuple(scalar(t) for t in inputs) if inputs else (ZERO,) * n
    if len(thresholds) != n or len(inputs) != n:
        raise DimensionMismatch(f"{side.value} thresholds/inputs do not match {n} neurons")
    out = []
    for k, (x, u, ext) in enumerate(zip(raw, thresholds, inputs)):
        net = x + ext - u
        if opts.retention and previous is not None and net == ZERO:
            out.append(previous.values[k])
        else:
            out.append(bam_signal(net))
    return SignalVector(tuple(out), side)


def bam_converge(m: ModelMatrix, seed: Union[SignalVector, Sequence], opts: BamOptions = BamOptions(),
                 side: VectorSide = VectorSide.ROW) -> FixedSignalPair:
    """Synchronous sweeps until the (row, column) signal pair repeats.

    ``seed`` is either a SignalVector or raw activations on ``side``.
    """
    if isinstance(seed, SignalVector):
        side, raw0 = seed.side, None
        s0 = seed
    else:
        raw0 = tuple(scalar(v) for v in seed)
        s0 = None
    fwd, back = (m, m.T) if side is VectorSide.ROW else (m.T, m)
    n0 = len(s0.values) if s0 is not None else len(raw0)
    if n0 != fwd.rows:
        raise DimensionMismatch(f"{side.value} seed of length {n0} for a {m.rows}x{m.cols} matrix")
    if s0 is None:
        s0 = _signals(raw0, side, opts)
    other = side.other
    half_sweeps = [Activation(side, raw0, s0)]

    def forward(sig, previous=None):
        raw = vec_compose(sig.scalars, fwd, CompositionRule.SUM_PRODUCT)
        out = _signals(raw, other, opts, previous)
        half_sweeps.append(Activation(other, raw, out))
        return out

    def sweep(pair):
        sx, sy = pair
        raw = vec_compose(sy.scalars, back, CompositionRule.SUM_PRODUCT)
        sx = _signals(raw, side, opts, sx)
        half_sweeps.append(Activation(side, raw, sx))
        return (sx, forward(sx, sy))

    kind, pairs, period = iterate(sweep, (s0, forward(s0)), opts.max_sweeps)
    sx, sy = pairs[-1]
    row, col = (sx, sy) if side is VectorSide.ROW else (sy, sx)
    return FixedSignalPair(row, col, len(pairs) - 1, tuple(half_sweeps), kind, period)


def _check_alphabet(m: ModelMatrix, engine: Engine):
    if engine is Engine.BAM:
        for i, row in enumerate(m.entries):
            for j, x in enumerate(row):
                if x.indet != 0:
                    raise DomainViolation((i, j), x, reason="carries I; use the nbam engine")


def panel_run(iv: IntervalModel, seed, engine: Engine = Engine.BAM,
              opts: BamOptions = BamOptions(), side: VectorSide = VectorSide.ROW) -> dict:
    """Run one engine over every member and min/max/opt/avg."""
    if engine is Engine.FAM:
        return run_keyed(iv, lambda m: fam_recall(m, seed))

    def run(m):
        _check_alphabet(m, engine)
        return bam_converge(m, seed, opts, side)

    return run_keyed(iv, run)


def stack_converge(stack, seeds: Sequence, opts: BamOptions = BamOptions(),
                   engine: Engine = Engine.BAM, side: VectorSide = VectorSide.ROW) -> tuple:
    """Componentwise convergence.

    A sequence of matrices gives a tuple of FixedSignalPair; an IntervalStack
    gives a tuple of keyed panel results.
    """
    if isinstance(stack, IntervalStack):
        return stack.map(lambda iv, s: panel_run(iv, s, engine, opts, side), seeds)
    mats = tuple(stack)
    if len(mats) != len(seeds):
        raise ShapeMismatch(f"{len(seeds)} seeds for {len(mats)} components")
    out = []
    for m, s in zip(mats, seeds):
        _check_alphabet(m, engine)
        out.append(bam_converge(m, s, opts, side))
    return tuple(out)
