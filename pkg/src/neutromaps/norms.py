"""Neutrosophic t-norms and t-conorms on ``[0, 1] U {I}``.

Any operand carrying an I component is indeterminate and absorbs:
``norm(a, I) = I`` and ``conorm(a, I) = I``.  The drastic operators follow
their literal case split, so ``drastic_norm(I, 1)`` is I and
``drastic_norm(0.4, 1)`` is 0.4.
"""

from __future__ import annotations

from enum import Enum
from functools import reduce

from .errors import DimensionMismatch, DomainViolation
from .matrix import Domain, ModelMatrix
from .scalar import I, NeutroScalar


def _real(x: NeutroScalar, where="operand"):
    if not 0 <= x.real <= 1:
        raise DomainViolation(None, x, reason=f"{where} outside [0,1] U {{I}}")
    return x.real


def _indeterminate(*xs) -> bool:
    return any(x.indet != 0 for x in xs)


def standard_min(a, b):
    if _indeterminate(a, b):
        return I
    return NeutroScalar(min(_real(a), _real(b)))


def algebraic_product(a, b):
    if _indeterminate(a, b):
        return I
    return NeutroScalar(_real(a) * _real(b))


def bounded_difference(a, b):
    if _indeterminate(a, b):
        return I
    return NeutroScalar(max(0, _real(a) + _real(b) - 1))


def drastic_norm(a, b):
    if b == NeutroScalar(1):
        return a
    if a == NeutroScalar(1):
        return b
    if _indeterminate(a, b):
        return I
    _real(a), _real(b)
    return NeutroScalar(0)


def standard_max(a, b):
    if _indeterminate(a, b):
        return I
    return NeutroScalar(max(_real(a), _real(b)))


def algebraic_sum(a, b):
    if _indeterminate(a, b):
        return I
    x, y = _real(a), _real(b)
    return NeutroScalar(x + y - x * y)


def bounded_sum(a, b):
    if _indeterminate(a, b):
        return I
    return NeutroScalar(min(1, _real(a) + _real(b)))


def drastic_conorm(a, b):
    if b == NeutroScalar(0):
        return a
    if a == NeutroScalar(0):
        return b
    if _indeterminate(a, b):
        return I
    _real(a), _real(b)
    return NeutroScalar(1)


class TNorm(Enum):
    STANDARD_MIN = "min"
    ALGEBRAIC_PRODUCT = "product"
    BOUNDED_DIFFERENCE = "bounded-difference"
    DRASTIC = "drastic"

    def __call__(self, a, b) -> NeutroScalar:
        return _NORMS[self](a, b)


class TCoNorm(Enum):
    STANDARD_MAX = "max"
    ALGEBRAIC_SUM = "algebraic-sum"
    BOUNDED_SUM = "bounded-sum"
    DRASTIC = "drastic"

    def __call__(self, a, b) -> NeutroScalar:
        return _CONORMS[self](a, b)


_NORMS = {
    TNorm.STANDARD_MIN: standard_min,
    TNorm.ALGEBRAIC_PRODUCT: algebraic_product,
    TNorm.BOUNDED_DIFFERENCE: bounded_difference,
    TNorm.DRASTIC: drastic_norm,
}

_CONORMS = {
    TCoNorm.STANDARD_MAX: standard_max,
    TCoNorm.ALGEBRAIC_SUM: algebraic_sum,
    TCoNorm.BOUNDED_SUM: bounded_sum,
    TCoNorm.DRASTIC: drastic_conorm,
}


def tnorm_compose(p: ModelMatrix, q: ModelMatrix, norm: TNorm = TNorm.STANDARD_MIN,
                  conorm: TCoNorm = TCoNorm.STANDARD_MAX) -> ModelMatrix:
    """``r_ik = conorm over j of norm(p_ij, q_jk)``."""
    if p.cols != q.rows:
        raise DimensionMismatch(f"cannot compose {p.rows}x{p.cols} with {q.rows}x{q.cols}")
    cols = list(zip(*q.entries))
    grid = tuple(
        tuple(reduce(conorm, (norm(a, b) for a, b in zip(row, col))) for col in cols)
        for row in p.entries
    )
    has_i = any(x.indet for row in grid for x in row)
    domain = Domain.neutrosophic(1) if has_i else Domain.fuzzy_unit()
    return ModelMatrix(grid, domain, p.row_labels, q.col_labels)
