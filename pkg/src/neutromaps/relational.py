"""FRM / NRM bidirectional dynamics between a domain space and a range space."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional

from .cognitive import Dynamics, PatternKind, _check_state, iterate, propagate
from .errors import DimensionMismatch
from .interval import IntervalModel, run_keyed
from .matrix import ModelMatrix
from .scalar import scalar


class Side(Enum):
    DOMAIN = "domain"
    RANGE = "range"

    @property
    def other(self) -> "Side":
        return Side.RANGE if self is Side.DOMAIN else Side.DOMAIN


@dataclass(frozen=True)
class BipartiteState:
    side: Side
    values: tuple

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(scalar(v) for v in self.values))


@dataclass(frozen=True)
class BidirectionalPattern:
    kind: PatternKind
    domain_terminal: tuple
    range_terminal: tuple
    trajectory: tuple
    period: Optional[int] = None

    @property
    def sweeps(self) -> int:
        return len(self.trajectory) // 2 - 1


def frm_hidden_pattern(e: ModelMatrix, seed: BipartiteState,
                       dyn: Dynamics = Dynamics()) -> BidirectionalPattern:
    """Alternate ``x o E`` and ``y o E^T`` until a (domain, range) pair repeats.

    The clamp applies only to the seed's side.
    """
    fwd, back = (e, e.T) if seed.side is Side.DOMAIN else (e.T, e)
    if len(seed.values) != fwd.rows:
        raise DimensionMismatch(
            f"{seed.side.value} seed of length {len(seed.values)} for a {e.rows}x{e.cols} map")
    _check_state(seed.values, dyn.kind)

    def sweep(pair):
        x = propagate(back, pair[1], dyn, dyn.clamp_on)
        return (x, propagate(fwd, x, dyn))

    start = (seed.values, propagate(fwd, seed.values, dyn))
    kind, pairs, period = iterate(sweep, start, dyn.max_iters)

    trajectory = tuple(state for x, y in pairs
                       for state in (BipartiteState(seed.side, x), BipartiteState(seed.side.other, y)))
    x_end, y_end = pairs[-1]
    if seed.side is Side.DOMAIN:
        return BidirectionalPattern(kind, x_end, y_end, trajectory, period)
    return BidirectionalPattern(kind, y_end, x_end, trajectory, period)


def frim_panel_run(iv: IntervalModel, seed: BipartiteState,
                   dyn: Dynamics = Dynamics()) -> dict:
    return run_keyed(iv, lambda m: frm_hidden_pattern(m, seed, dyn))
