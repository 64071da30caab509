"""Dense matrices over neutrosophic scalars and their compositions."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from functools import reduce
from typing import Callable, Iterable, Optional, Sequence

from .errors import (ConfigError, DimensionMismatch, DomainMismatch, DomainViolation, EmptyPanel,
                     IncomparableEntry, ShapeMismatch)
from .scalar import (ZERO, NeutroScalar, Ordering, OrderMode, compare, extremum,
                     format_number, format_token, scalar)


class DomainKind(Enum):
    FUZZY_UNIT = "fuzzy-unit"
    SIGNED_FUZZY = "signed-fuzzy"
    BOUNDED = "bounded"
    NEUTROSOPHIC = "neutrosophic"
    UNBOUNDED = "unbounded"


@dataclass(frozen=True)
class Domain:
    """Declared value domain of a matrix.

    ``BOUNDED`` is the integer scale ``[-a, a]`` (averages may be
    fractional, so entries are any reals in range).  ``NEUTROSOPHIC`` with a
    bound means ``<[-a, a] U [-aI, aI]>``.  ``UNBOUNDED`` tags unnormalized
    results such as combined maps.
    """

    kind: DomainKind
    bound: Optional[Fraction] = None

    def __post_init__(self):
        if self.bound is not None:
            object.__setattr__(self, "bound", Fraction(self.bound))
        if self.kind is DomainKind.BOUNDED and self.bound is None:
            raise ValueError("bounded domain needs a bound")

    @classmethod
    def fuzzy_unit(cls):
        return cls(DomainKind.FUZZY_UNIT)

    @classmethod
    def signed_fuzzy(cls):
        return cls(DomainKind.SIGNED_FUZZY)

    @classmethod
    def bounded(cls, a):
        return cls(DomainKind.BOUNDED, a)

    @classmethod
    def neutrosophic(cls, bound=None):
        return cls(DomainKind.NEUTROSOPHIC, bound)

    @classmethod
    def unbounded(cls):
        return cls(DomainKind.UNBOUNDED)

    @property
    def normalized(self) -> bool:
        return self.kind is not DomainKind.UNBOUNDED

    def admits(self, x: NeutroScalar) -> bool:
        kind = self.kind
        if kind is DomainKind.NEUTROSOPHIC:
            if self.bound is None:
                return True
            return abs(x.real) <= self.bound and abs(x.indet) <= self.bound
        if x.indet != 0:
            return False
        if kind is DomainKind.FUZZY_UNIT:
            return 0 <= x.real <= 1
        if kind is DomainKind.SIGNED_FUZZY:
            return -1 <= x.real <= 1
        if kind is DomainKind.BOUNDED:
            return -self.bound <= x.real <= self.bound
        return True

    def __str__(self):
        kind = self.kind
        if kind is DomainKind.FUZZY_UNIT:
            return "[0,1]"
        if kind is DomainKind.SIGNED_FUZZY:
            return "[-1,1]"
        if kind is DomainKind.BOUNDED:
            a = format_number(self.bound)
            return f"[-{a},{a}]"
        if kind is DomainKind.NEUTROSOPHIC:
            if self.bound is None:
                return "neutrosophic"
            a = format_number(self.bound)
            return f"<[-{a},{a}]U[-{a}I,{a}I]>"
        return "unbounded"

    @classmethod
    def parse(cls, text: str) -> "Domain":
        """Inverse of ``str``; accepts the scale notations used in documents."""
        t = re.sub(r"\s+", "", text).replace("−", "-").replace("∪", "U").lower()
        if t in ("[0,1]", "fuzzy", "fuzzy-unit"):
            return cls.fuzzy_unit()
        if t in ("[-1,1]", "signed", "signed-fuzzy"):
            return cls.signed_fuzzy()
        if t in ("neutrosophic", "neutro"):
            return cls.neutrosophic()
        if t == "unbounded":
            return cls.unbounded()
        m = re.fullmatch(r"\[-([\d./]+),([\d./]+)\]", t)
        if m and m.group(1) == m.group(2):
            return cls.bounded(Fraction(m.group(1)))
        m = re.fullmatch(r"[<(]\[-([\d./]+),([\d./]+)\]u\[-([\d./]+)i,([\d./]+)i\][>)]", t)
        if m and len(set(m.groups())) == 1:
            return cls.neutrosophic(Fraction(m.group(1)))
        raise ValueError(f"unknown scale {text!r}")


def infer_domain(rows) -> Domain:
    """Smallest standard domain admitting every entry."""
    flat = [x for row in rows for x in row]
    if any(x.indet != 0 for x in flat):
        return Domain.neutrosophic()
    if all(0 <= x.real <= 1 for x in flat):
        return Domain.fuzzy_unit()
    if all(-1 <= x.real <= 1 for x in flat):
        return Domain.signed_fuzzy()
    return Domain.unbounded()


@dataclass(frozen=True)
class ModelMatrix:
    """Immutable rectangular matrix of NeutroScalar with a value domain."""

    entries: tuple
    domain: Domain = field(default_factory=Domain.neutrosophic)
    row_labels: Optional[tuple] = None
    col_labels: Optional[tuple] = None

    def __post_init__(self):
        rows = self.entries
        if not rows or not rows[0]:
            raise ShapeMismatch("a matrix needs at least one row and one column")
        width = len(rows[0])
        for i, row in enumerate(rows):
            if len(row) != width:
                raise ShapeMismatch(f"row {i + 1} has {len(row)} entries, expected {width}")
            for j, x in enumerate(row):
                if not self.domain.admits(x):
                    raise DomainViolation((i, j), x, self.domain)
        for name, labels, n in (("row", self.row_labels, len(rows)),
                                ("column", self.col_labels, width)):
            if labels is not None and len(labels) != n:
                raise ShapeMismatch(f"{len(labels)} {name} labels for {n} {name}s")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable], domain: Optional[Domain] = None,
                  row_labels=None, col_labels=None) -> "ModelMatrix":
        grid = tuple(tuple(scalar(x) for x in row) for row in rows)
        if domain is None:
            domain = infer_domain(grid)
        return cls(grid, domain,
                   tuple(row_labels) if row_labels is not None else None,
                   tuple(col_labels) if col_labels is not None else None)

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0])

    @property
    def shape(self) -> tuple:
        return (self.rows, self.cols)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def __iter__(self):
        return iter(self.entries)

    def row(self, i: int) -> tuple:
        return self.entries[i]

    def column(self, j: int) -> tuple:
        return tuple(row[j] for row in self.entries)

    @property
    def T(self) -> "ModelMatrix":
        return transpose(self)

    def flat(self) -> tuple:
        return tuple(x for row in self.entries for x in row)

    def with_domain(self, domain: Domain) -> "ModelMatrix":
        return ModelMatrix(self.entries, domain, self.row_labels, self.col_labels)

    def map(self, fn: Callable, domain: Optional[Domain] = None) -> "ModelMatrix":
        grid = tuple(tuple(fn(x) for x in row) for row in self.entries)
        return ModelMatrix(grid, domain or infer_domain(grid), self.row_labels, self.col_labels)

    def same_values(self, other: "ModelMatrix") -> bool:
        return self.entries == other.entries

    def tokens(self) -> list:
        return [[format_token(x) for x in row] for row in self.entries]

    def __str__(self):
        grid = self.tokens()
        width = max(len(t) for row in grid for t in row)
        return "\n".join(" ".join(t.rjust(width) for t in row) for row in grid)


def transpose(m: ModelMatrix) -> ModelMatrix:
    grid = tuple(zip(*m.entries))
    return ModelMatrix(grid, m.domain, m.col_labels, m.row_labels)


def identity(n: int, domain: Optional[Domain] = None) -> ModelMatrix:
    return ModelMatrix.from_rows([[1 if i == j else 0 for j in range(n)] for i in range(n)],
                                 domain or Domain.fuzzy_unit())


# ------------------------------------------------------------- composition


class CompositionRule(Enum):
    MAX_MIN = "maxmin"
    MAX_PRODUCT = "maxprod"
    SUM_PRODUCT = "sumprod"

    @classmethod
    def parse(cls, text: str) -> "CompositionRule":
        aliases = {"max-min": "maxmin", "max-product": "maxprod", "maxproduct": "maxprod",
                   "sum-product": "sumprod", "sumproduct": "sumprod"}
        key = text.strip().lower()
        try:
            return cls(aliases.get(key, key))
        except ValueError:
            raise ConfigError(f"unknown composition rule {text!r}") from None


def _check_fuzzy(values, rule, allow_negative, where):
    for pos, x in values:
        if x.indet != 0:
            raise DomainViolation(pos, x, reason=f"carries I; {rule.value} needs real operands ({where})")
        lo = -1 if allow_negative else 0
        if not lo <= x.real <= 1:
            raise DomainViolation(pos, x, reason=f"outside [{lo},1] required by {rule.value} ({where})")


def _check_operands(rule, *operands):
    """Validate max-min / max-product operands (matrices or plain vectors)."""
    if rule is CompositionRule.SUM_PRODUCT:
        return
    matrices = [m for m in operands if isinstance(m, ModelMatrix)]
    for m in matrices:
        if not m.domain.normalized:
            raise DomainViolation(None, "matrix", reason=f"is unnormalized; only sumprod accepts it")
    allow_negative = rule is CompositionRule.MAX_MIN and any(
        m.domain.kind is DomainKind.SIGNED_FUZZY for m in matrices)
    for k, m in enumerate(operands):
        where = f"operand {k + 1}"
        if isinstance(m, ModelMatrix):
            cells = (((i, j), x) for i, row in enumerate(m.entries) for j, x in enumerate(row))
        else:
            cells = ((i, x) for i, x in enumerate(m))
        _check_fuzzy(cells, rule, allow_negative, where)


def _combine(pairs, rule):
    if rule is CompositionRule.SUM_PRODUCT:
        total = ZERO
        for p, q in pairs:
            total = total + p * q
        return total
    if rule is CompositionRule.MAX_MIN:
        return NeutroScalar(max(min(p.real, q.real) for p, q in pairs), 0)
    return NeutroScalar(max(p.real * q.real for p, q in pairs), 0)


def _result_domain(grid, rule, *operands):
    if rule is CompositionRule.SUM_PRODUCT:
        return Domain.neutrosophic() if any(x.indet for row in grid for x in row) else Domain.unbounded()
    if any(isinstance(m, ModelMatrix) and m.domain.kind is DomainKind.SIGNED_FUZZY for m in operands) \
            and any(x.real < 0 for row in grid for x in row):
        return Domain.signed_fuzzy()
    return Domain.fuzzy_unit()


def vec_compose(x: Sequence[NeutroScalar], m: ModelMatrix,
                rule: CompositionRule = CompositionRule.MAX_MIN) -> tuple:
    """Row vector ``x`` (length m.rows) composed with ``m``; length m.cols."""
    if len(x) != m.rows:
        raise DimensionMismatch(f"vector of length {len(x)} against {m.rows}x{m.cols} matrix")
    _check_operands(rule, x, m)
    cols = list(zip(*m.entries))
    return tuple(_combine(zip(x, col), rule) for col in cols)


def compose(p: ModelMatrix, q: ModelMatrix,
            rule: CompositionRule = CompositionRule.MAX_MIN) -> ModelMatrix:
    """``r_ik`` = combine over j of ``p_ij`` with ``q_jk`` under ``rule``."""
    if p.cols != q.rows:
        raise DimensionMismatch(f"cannot compose {p.rows}x{p.cols} with {q.rows}x{q.cols}")
    _check_operands(rule, p, q)
    cols = list(zip(*q.entries))
    grid = tuple(tuple(_combine(zip(row, col), rule) for col in cols) for row in p.entries)
    return ModelMatrix(grid, _result_domain(grid, rule, p, q), p.row_labels, q.col_labels)


def add(p: ModelMatrix, q: ModelMatrix, domain: Optional[Domain] = None) -> ModelMatrix:
    if p.shape != q.shape:
        raise ShapeMismatch(f"cannot add {p.shape} and {q.shape}")
    grid = tuple(tuple(a + b for a, b in zip(r1, r2)) for r1, r2 in zip(p.entries, q.entries))
    return ModelMatrix(grid, domain or infer_domain(grid), p.row_labels, p.col_labels)


def scale(m: ModelMatrix, c) -> ModelMatrix:
    """Multiply every entry by the real ``c``; domain re-inferred."""
    c = scalar(c)
    return m.map(lambda x: x * c)


# ----------------------------------------------------------------- panels


def check_panel(panel: Sequence[ModelMatrix]) -> None:
    if not panel:
        raise EmptyPanel("panel has no members")
    first = panel[0]
    for k, m in enumerate(panel[1:], start=2):
        if m.shape != first.shape:
            raise ShapeMismatch(f"member {k} has shape {m.shape}, expected {first.shape}")
        if m.domain != first.domain:
            raise DomainMismatch(f"member {k} declares {m.domain}, expected {first.domain}")
        if (m.row_labels, m.col_labels) != (first.row_labels, first.col_labels):
            raise ShapeMismatch(f"member {k} labels differ from member 1")


def _select(values, mode, position):
    if mode is OrderMode.USUAL:
        for a_i, a in enumerate(values):
            for b in values[a_i + 1:]:
                if compare(a, b) is Ordering.INCOMPARABLE:
                    raise IncomparableEntry(position, (a, b))
    lo = reduce(lambda acc, x: extremum(mode, acc, x)[0], values)
    hi = reduce(lambda acc, x: extremum(mode, acc, x)[1], values)
    return lo, hi


def elementwise_extrema(panel: Sequence[ModelMatrix],
                        mode: OrderMode = OrderMode.USUAL) -> tuple:
    """Entrywise minimal and maximal matrices of a panel."""
    panel = list(panel)
    check_panel(panel)
    first = panel[0]
    lo_grid, hi_grid = [], []
    for i in range(first.rows):
        lo_row, hi_row = [], []
        for j in range(first.cols):
            lo, hi = _select([m.entries[i][j] for m in panel], mode, (i, j))
            lo_row.append(lo)
            hi_row.append(hi)
        lo_grid.append(tuple(lo_row))
        hi_grid.append(tuple(hi_row))
    make = lambda g: ModelMatrix(tuple(g), first.domain, first.row_labels, first.col_labels)
    return make(lo_grid), make(hi_grid)


def average(panel: Sequence[ModelMatrix]) -> ModelMatrix:
    """Entrywise arithmetic mean (exact for rational entries)."""
    panel = list(panel)
    check_panel(panel)
    first = panel[0]
    n = len(panel)
    grid = tuple(
        tuple(reduce(lambda a, b: a + b, cell) / n for cell in zip(*rows))
        for rows in zip(*(m.entries for m in panel))
    )
    return ModelMatrix(grid, first.domain, first.row_labels, first.col_labels)
