"""Fuzzy relational equations ``P o Q = R``.

Only the greatest solution is constructed.  The set of minimal solutions
is not enumerated; asking a solution for it raises ``NotImplementedError``.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Optional, Sequence

from .errors import DimensionMismatch, InputError
from .interval import ExpertPanel, IntervalModel, build_interval
from .matrix import CompositionRule, Domain, ModelMatrix, compose
from .scalar import NeutroScalar, OrderMode, scalar

_MAX_RULES = (CompositionRule.MAX_MIN, CompositionRule.MAX_PRODUCT)


class FreStatus(Enum):
    UNIQUE_FORWARD = "unique-forward"
    MAX_SOLUTION = "max-solution"
    EMPTY = "empty"


@dataclass(frozen=True)
class FreSolution:
    status: FreStatus
    p_hat: Optional[ModelMatrix]
    residual: Optional[Fraction]
    rule: CompositionRule = CompositionRule.MAX_MIN
    candidate: Optional[ModelMatrix] = None  # the sigma matrix, kept even when Empty

    @property
    def minimal_solutions(self):
        raise NotImplementedError("minimal solutions are not constructed; only the maximum is")


@dataclass(frozen=True)
class FreProblem:
    q: ModelMatrix
    r: Optional[ModelMatrix] = None
    p: Optional[ModelMatrix] = None
    rule: CompositionRule = CompositionRule.MAX_MIN

    def solve(self) -> FreSolution:
        if self.r is not None:
            return max_solution_matrix(self.q, self.r, self.rule)
        if self.p is None:
            raise InputError("a relational equation needs either R or P")
        fwd = forward(self.p, self.q, self.rule)
        return FreSolution(FreStatus.UNIQUE_FORWARD, self.p, Fraction(0), self.rule, fwd)


def _check_rule(rule):
    if rule not in _MAX_RULES:
        raise InputError(f"relational equations use maxmin or maxprod, not {rule.value}")


def _as_row(r) -> tuple:
    if isinstance(r, ModelMatrix):
        if r.rows != 1:
            raise DimensionMismatch(f"target must be a single row, got {r.rows}x{r.cols}")
        return r.entries[0]
    return tuple(scalar(v) for v in r)


def forward(p: ModelMatrix, q: ModelMatrix,
            rule: CompositionRule = CompositionRule.MAX_MIN) -> ModelMatrix:
    _check_rule(rule)
    return compose(p, q, rule)


def solvable_necessary(q: ModelMatrix, r) -> bool:
    """False when some target exceeds its column maximum (then no solution)."""
    r = _as_row(r)
    if len(r) != q.cols:
        raise DimensionMismatch(f"target of length {len(r)} for {q.cols} columns")
    return all(max(x.real for x in q.column(k)) >= r[k].real for k in range(q.cols))


def _sigma(qv: Fraction, rv: Fraction, rule) -> Fraction:
    if rule is CompositionRule.MAX_MIN:
        return rv if qv > rv else Fraction(1)
    if qv == 0:
        return Fraction(1)
    return min(Fraction(1), rv / qv)


def _residual(a: ModelMatrix, b: ModelMatrix) -> Fraction:
    return max(abs(x.real - y.real) for x, y in zip(a.flat(), b.flat()))


def max_solution(q: ModelMatrix, r, rule: CompositionRule = CompositionRule.MAX_MIN) -> FreSolution:
    """Greatest ``p`` (1 x n) with ``p o q = r``, or Empty."""
    _check_rule(rule)
    row = _as_row(r)
    if len(row) != q.cols:
        raise DimensionMismatch(f"target of length {len(row)} for {q.cols} columns")
    for v in list(row) + list(q.flat()):
        if v.indet != 0 or not 0 <= v.real <= 1:
            raise InputError(f"relational equations need fuzzy-unit entries, got {v}")
    p_hat = tuple(
        NeutroScalar(min(_sigma(q.entries[j][k].real, row[k].real, rule) for k in range(q.cols)))
        for j in range(q.rows)
    )
    candidate = ModelMatrix((p_hat,), Domain.fuzzy_unit(), None, q.row_labels)
    target = ModelMatrix((row,), Domain.fuzzy_unit())
    gap = _residual(compose(candidate, q, rule), target)
    if gap == 0:
        return FreSolution(FreStatus.MAX_SOLUTION, candidate, gap, rule, candidate)
    return FreSolution(FreStatus.EMPTY, None, gap, rule, candidate)


def max_solution_matrix(q: ModelMatrix, r: ModelMatrix,
                        rule: CompositionRule = CompositionRule.MAX_MIN) -> FreSolution:
    """Row-wise greatest solution of ``P o Q = R``; Empty if any row fails."""
    if r.cols != q.cols:
        raise DimensionMismatch(f"R has {r.cols} columns, Q has {q.cols}")
    rows = [max_solution(q, r_row, rule) for r_row in r.entries]
    grid = tuple(s.candidate.entries[0] for s in rows)
    candidate = ModelMatrix(grid, Domain.fuzzy_unit(), r.row_labels, q.row_labels)
    gap = max(s.residual for s in rows)
    if all(s.status is FreStatus.MAX_SOLUTION for s in rows):
        return FreSolution(FreStatus.MAX_SOLUTION, candidate, gap, rule, candidate)
    return FreSolution(FreStatus.EMPTY, None, gap, rule, candidate)


def frie_compose(iv_p: IntervalModel, iv_q: IntervalModel,
                 rule: CompositionRule = CompositionRule.MAX_MIN) -> IntervalModel:
    """``[A, B] o [X, Y] = [A o X, B o Y]``; O and the mean come from the endpoints."""
    if iv_p.mode is not OrderMode.USUAL or iv_q.mode is not OrderMode.USUAL:
        raise InputError("interval composition needs the usual order")
    lower = forward(iv_p.a_min, iv_q.a_min, rule)
    upper = forward(iv_p.b_max, iv_q.b_max, rule)
    panel = ExpertPanel((lower, upper), ("synthetic:lower", "synthetic:upper"))
    return build_interval(panel, OrderMode.USUAL)


def optimal_resultant(iv_p: IntervalModel, iv_q: IntervalModel,
                      rule: CompositionRule = CompositionRule.MAX_MIN) -> ModelMatrix:
    """Composition of the two optimal matrices."""
    return forward(iv_p.o_opt, iv_q.o_opt, rule)
