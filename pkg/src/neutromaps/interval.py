"""Intervals of matrices built from expert panels, and n-matrix stacks."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Callable, Optional, Sequence

from .errors import (EmptyPanel, InputError, NeutroError, NonZeroDiagonal, ShapeMismatch,
                     StackComponentError)
from .matrix import Domain, ModelMatrix, add, average, check_panel, elementwise_extrema
from .scalar import OrderMode, less_equal

SUMMARY_KEYS = ("min", "max", "opt", "avg")
CAUSAL_KINDS = frozenset({"fcm", "ncm"})


@dataclass(frozen=True)
class ExpertPanel:
    members: tuple
    member_ids: Optional[tuple] = None
    scale: Optional[Domain] = None
    kind: Optional[str] = None  # "fcm"/"ncm" panels must have a zero diagonal

    def __post_init__(self):
        members = tuple(self.members)
        object.__setattr__(self, "members", members)
        if not members:
            raise EmptyPanel("panel has no members")
        ids = self.member_ids
        ids = tuple(f"M{k}" for k in range(1, len(members) + 1)) if ids is None else tuple(ids)
        if len(ids) != len(members):
            raise InputError(f"{len(ids)} member ids for {len(members)} members")
        if len(set(ids)) != len(ids) or set(ids) & set(SUMMARY_KEYS):
            raise InputError(f"member ids must be unique and not reuse {SUMMARY_KEYS}")
        object.__setattr__(self, "member_ids", ids)
        check_panel(members)
        if self.scale is None:
            object.__setattr__(self, "scale", members[0].domain)
        elif members[0].domain != self.scale:
            raise InputError(f"members declare {members[0].domain}, panel scale is {self.scale}")

    def __len__(self):
        return len(self.members)

    @property
    def shape(self):
        return self.members[0].shape


@dataclass(frozen=True)
class IntervalModel:
    panel: ExpertPanel
    mode: OrderMode
    a_min: ModelMatrix
    b_max: ModelMatrix
    o_opt: ModelMatrix
    m_avg: ModelMatrix

    @property
    def shape(self):
        return self.a_min.shape

    def keyed(self) -> dict:
        """Member matrices then min/max/opt/avg, in report order."""
        out = dict(zip(self.panel.member_ids, self.panel.members))
        out.update(zip(SUMMARY_KEYS, (self.a_min, self.b_max, self.o_opt, self.m_avg)))
        return out

    def contains(self, m: ModelMatrix) -> bool:
        return contains(self, m)


def check_zero_diagonal(m: ModelMatrix, member=None) -> None:
    if m.rows != m.cols:
        raise ShapeMismatch(f"{member or 'matrix'} is {m.rows}x{m.cols}, causal maps are square")
    for i in range(m.rows):
        if m.entries[i][i] != 0:
            raise NonZeroDiagonal(i, m.entries[i][i], member)


def midpoint(a: ModelMatrix, b: ModelMatrix) -> ModelMatrix:
    return add(a, b).map(lambda x: x / 2, a.domain)


def build_interval(panel: ExpertPanel, mode: OrderMode = OrderMode.USUAL) -> IntervalModel:
    if panel.kind in CAUSAL_KINDS:
        for mid, m in zip(panel.member_ids, panel.members):
            check_zero_diagonal(m, mid)
    a, b = elementwise_extrema(panel.members, mode)
    return IntervalModel(panel, mode, a, b, midpoint(a, b), average(panel.members))


def interval_from_bounds(a: ModelMatrix, b: ModelMatrix,
                         mode: OrderMode = OrderMode.USUAL) -> IntervalModel:
    """Interval ``[a, b]`` given directly by its endpoints."""
    iv = build_interval(ExpertPanel((a, b), ("lower", "upper")), mode)
    if not iv.a_min.same_values(a):
        raise InputError("lower endpoint is not entrywise below the upper endpoint")
    return iv


def contains(iv: IntervalModel, m: ModelMatrix) -> bool:
    if m.shape != iv.shape:
        raise ShapeMismatch(f"matrix {m.shape} against interval of {iv.shape}")
    for lo_row, row, hi_row in zip(iv.a_min.entries, m.entries, iv.b_max.entries):
        for lo, x, hi in zip(lo_row, row, hi_row):
            if not (less_equal(iv.mode, lo, x) and less_equal(iv.mode, x, hi)):
                return False
    return True


def medial(iv: IntervalModel) -> ModelMatrix:
    """The medianal matrix ``(A + B) / 2``, which is the optimal matrix."""
    if iv.mode is not OrderMode.USUAL:
        raise InputError("the medianal matrix is defined for the usual order only")
    return iv.o_opt


class Closedness(Enum):
    CLOSED = "closed"
    OPEN_LOW = "open-low"
    OPEN_HIGH = "open-high"
    OPEN = "open"


def classify_closedness(iv: IntervalModel, lo, hi) -> Closedness:
    """Closed when A touches ``lo`` and B touches ``hi``."""
    if iv.mode is not OrderMode.USUAL:
        raise InputError("closedness is defined for the usual order only")
    lo, hi = (Fraction(str(v)) if isinstance(v, float) else Fraction(v) for v in (lo, hi))
    a_vals = iv.a_min.flat()
    b_vals = iv.b_max.flat()
    if any(x.indet for x in a_vals + b_vals):
        raise InputError("closedness needs real entries")
    lo_hit = min(x.real for x in a_vals) == lo
    hi_hit = max(x.real for x in b_vals) == hi
    if lo_hit and hi_hit:
        return Closedness.CLOSED
    if hi_hit:
        return Closedness.OPEN_LOW
    if lo_hit:
        return Closedness.OPEN_HIGH
    return Closedness.OPEN


# ------------------------------------------------------------------ runs


@dataclass(frozen=True)
class RunFailure:
    """Placeholder for a panel key whose engine run raised."""

    key: str
    error: NeutroError

    @property
    def message(self) -> str:
        return str(self.error)


def run_keyed(iv: IntervalModel, fn: Callable[[ModelMatrix], object]) -> dict:
    """Apply ``fn`` to every keyed matrix; failures become RunFailure markers."""
    out = {}
    for key, m in iv.keyed().items():
        try:
            out[key] = fn(m)
        except NeutroError as exc:
            out[key] = RunFailure(key, exc)
    return out


# ----------------------------------------------------------------- stacks


@dataclass(frozen=True)
class IntervalStack:
    components: tuple

    def __len__(self):
        return len(self.components)

    @property
    def a_min(self):
        return tuple(c.a_min for c in self.components)

    @property
    def b_max(self):
        return tuple(c.b_max for c in self.components)

    @property
    def o_opt(self):
        return tuple(c.o_opt for c in self.components)

    @property
    def m_avg(self):
        return tuple(c.m_avg for c in self.components)

    @property
    def shapes(self):
        return tuple(c.shape for c in self.components)

    def contains(self, parts: Sequence[ModelMatrix]) -> bool:
        parts = tuple(parts)
        if len(parts) != len(self.components):
            raise ShapeMismatch(f"{len(parts)} parts for a stack of {len(self.components)}")
        return all(contains(c, m) for c, m in zip(self.components, parts))

    def map(self, fn: Callable, inputs: Sequence) -> tuple:
        """Run ``fn(component, input)`` componentwise."""
        if len(inputs) != len(self.components):
            raise ShapeMismatch(f"{len(inputs)} inputs for a stack of {len(self.components)}")
        out = []
        for k, (comp, inp) in enumerate(zip(self.components, inputs)):
            try:
                out.append(fn(comp, inp))
            except NeutroError as exc:
                raise StackComponentError(k, exc) from exc
        return tuple(out)


def build_stack(panels: Sequence) -> IntervalStack:
    """Build one interval per ``(panel, mode)`` pair."""
    comps = []
    for k, (panel, mode) in enumerate(panels):
        try:
            comps.append(build_interval(panel, mode))
        except NeutroError as exc:
            raise StackComponentError(k, exc) from exc
    if not comps:
        raise EmptyPanel("stack has no components")
    return IntervalStack(tuple(comps))
