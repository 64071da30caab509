"""FCM / NCM state dynamics and FCIM panel runs."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from functools import reduce
from typing import Optional, Sequence

from .errors import ConfigError, DimensionMismatch, DomainViolation, ShapeMismatch
from .interval import IntervalModel, check_zero_diagonal, run_keyed
from .matrix import CompositionRule, Domain, ModelMatrix, add, vec_compose
from .scalar import ONE, ZERO, NeutroScalar, SignalValue, ncm_threshold, scalar


class DynamicsKind(Enum):
    BINARY = "binary"
    TRINARY = "trinary"
    WEIGHTED = "weighted"


@dataclass(frozen=True)
class Dynamics:
    kind: DynamicsKind = DynamicsKind.WEIGHTED
    threshold: Fraction = Fraction(0)
    clamp_on: frozenset = field(default_factory=frozenset)
    max_iters: int = 1000

    def __post_init__(self):
        object.__setattr__(self, "clamp_on", frozenset(self.clamp_on))
        object.__setattr__(self, "threshold", Fraction(self.threshold))
        if self.threshold < 0:
            raise ConfigError("threshold must be non-negative")
        if self.max_iters < 1:
            raise ConfigError("max_iters must be positive")

    @property
    def rule(self) -> CompositionRule:
        if self.kind is DynamicsKind.WEIGHTED:
            return CompositionRule.MAX_MIN
        return CompositionRule.SUM_PRODUCT


class PatternKind(Enum):
    FIXED_POINT = "fixed-point"
    LIMIT_CYCLE = "limit-cycle"
    DIVERGED = "diverged"


@dataclass(frozen=True)
class HiddenPattern:
    kind: PatternKind
    trajectory: tuple
    period: Optional[int] = None

    @property
    def steps(self) -> int:
        return len(self.trajectory) - 1

    @property
    def cycle(self) -> tuple:
        """States of the attractor (one state for a fixed point)."""
        if self.kind is PatternKind.DIVERGED:
            return ()
        return self.trajectory[-self.period - 1:-1]

    @property
    def fixed_point(self):
        return self.trajectory[-1] if self.kind is PatternKind.FIXED_POINT else None

    @property
    def terminal(self):
        """Fixed-point state, the tuple of cycle states, or the last state reached."""
        if self.kind is PatternKind.FIXED_POINT:
            return self.trajectory[-1]
        if self.kind is PatternKind.LIMIT_CYCLE:
            return self.cycle
        return self.trajectory[-1]


def _check_state(x, kind: DynamicsKind):
    for i, v in enumerate(x):
        if kind is DynamicsKind.WEIGHTED:
            ok = v.indet == 0
        elif kind is DynamicsKind.BINARY:
            ok = v in (ZERO, ONE)
        else:
            ok = v in (ZERO, ONE, SignalValue.INDETERMINATE.scalar)
        if not ok:
            raise DomainViolation(i, v, reason=f"is not a {kind.value} state value")


def _threshold(raw: NeutroScalar, dyn: Dynamics) -> NeutroScalar:
    if dyn.kind is DynamicsKind.WEIGHTED:
        return raw
    if dyn.kind is DynamicsKind.TRINARY:
        return ncm_threshold(raw, dyn.threshold).scalar
    if raw.indet != 0:
        raise DomainViolation(None, raw, reason="binary dynamics cannot threshold I")
    return ONE if raw.real > dyn.threshold else ZERO


def propagate(m: ModelMatrix, x: Sequence[NeutroScalar], dyn: Dynamics,
              clamp=frozenset()) -> tuple:
    """One pass of ``x`` through ``m``: compose, threshold, clamp."""
    raw = vec_compose(tuple(x), m, dyn.rule)
    out = [_threshold(v, dyn) for v in raw]
    for i in clamp:
        if not 0 <= i < len(out):
            raise DimensionMismatch(f"clamp index {i} out of range for {len(out)} concepts")
        out[i] = ONE
    return tuple(out)


def _check_map(e: ModelMatrix, x, dyn: Dynamics):
    check_zero_diagonal(e)
    if len(x) != e.rows:
        raise DimensionMismatch(f"state of length {len(x)} for {e.rows} concepts")
    _check_state(x, dyn.kind)


def fcm_step(e: ModelMatrix, x, dyn: Dynamics = Dynamics()) -> tuple:
    x = tuple(scalar(v) for v in x)
    _check_map(e, x, dyn)
    return propagate(e, x, dyn, dyn.clamp_on)


def iterate(step, x0, max_iters: int):
    """Follow ``step`` from ``x0`` until a state repeats.

    Returns ``(kind, trajectory, period)``; the trajectory ends with the
    first repeated state.
    """
    trajectory = [x0]
    seen = {x0: 0}
    current = x0
    for _ in range(max_iters):
        nxt = step(current)
        trajectory.append(nxt)
        if nxt == current:
            return PatternKind.FIXED_POINT, tuple(trajectory), 1
        if nxt in seen:
            return PatternKind.LIMIT_CYCLE, tuple(trajectory), len(trajectory) - 1 - seen[nxt]
        seen[nxt] = len(trajectory) - 1
        current = nxt
    return PatternKind.DIVERGED, tuple(trajectory), None


def hidden_pattern(e: ModelMatrix, x0, dyn: Dynamics = Dynamics()) -> HiddenPattern:
    x0 = tuple(scalar(v) for v in x0)
    _check_map(e, x0, dyn)
    kind, trajectory, period = iterate(lambda x: propagate(e, x, dyn, dyn.clamp_on),
                                       x0, dyn.max_iters)
    return HiddenPattern(kind, trajectory, period)


def combined_map(maps: Sequence[ModelMatrix]) -> ModelMatrix:
    """Entrywise sum of several maps; tagged unnormalized."""
    maps = list(maps)
    if not maps:
        raise ShapeMismatch("no maps to combine")
    total = reduce(add, maps)
    domain = Domain.neutrosophic() if any(x.indet for x in total.flat()) else Domain.unbounded()
    return total.with_domain(domain)


def fcim_panel_run(iv: IntervalModel, x0, dyn: Dynamics = Dynamics()) -> dict:
    """Hidden pattern for every member and for min/max/opt/avg."""
    return run_keyed(iv, lambda m: hidden_pattern(m, x0, dyn))
