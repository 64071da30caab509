"""Neutrosophic scalars ``a + bI`` with ``I * I = I``.

Parts are exact :class:`fractions.Fraction` values by default.  Passing a
float for either part switches that scalar to float mode; comparisons in
float mode use an absolute tolerance of ``FLOAT_TOL``.

Token grammar (used by every file format in the package)::

    a   bI   a+bI   a-bI   I   -I   bI+a

``a`` and ``b`` are decimal literals (``0.5``, ``-3``, ``.25``) or integer
ratios (``2/3``).  Ratios are only printed for values whose decimal
expansion does not terminate.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from decimal import ROUND_HALF_UP, Decimal
from enum import Enum
from fractions import Fraction
from numbers import Rational
from typing import Union

from .errors import ConfigError, IncomparableUnderUsual, InputError, TokenError

Real = Union[Fraction, float]

FLOAT_TOL = 1e-9


def _part(value) -> Real:
    if isinstance(value, bool):
        raise TypeError("bool is not a scalar part")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    if isinstance(value, float):
        return value + 0.0 if value else 0.0
    if isinstance(value, (str, Decimal)):
        return Fraction(value)
    raise TypeError(f"cannot use {type(value).__name__} as a scalar part")


@dataclass(frozen=True, eq=False)
class NeutroScalar:
    """The value ``real + indet * I``."""

    real: Real = Fraction(0)
    indet: Real = Fraction(0)

    def __post_init__(self):
        real, indet = _part(self.real), _part(self.indet)
        if isinstance(real, float) or isinstance(indet, float):
            real, indet = float(real) + 0.0, float(indet) + 0.0
        object.__setattr__(self, "real", real)
        object.__setattr__(self, "indet", indet)

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self.real == other.real and self.indet == other.indet

    def __hash__(self):
        # equal to plain numbers when pure real, so hash like them
        return hash(self.real) if self.indet == 0 else hash((self.real, self.indet))

    @property
    def is_pure_real(self) -> bool:
        return self.indet == 0

    @property
    def is_pure_neutrosophic(self) -> bool:
        return self.real == 0 and self.indet != 0

    @property
    def is_float(self) -> bool:
        return isinstance(self.real, float)

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return NeutroScalar(self.real + other.real, self.indet + other.indet)

    __radd__ = __add__

    def __neg__(self):
        return NeutroScalar(-self.real, -self.indet)

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return NeutroScalar(self.real - other.real, self.indet - other.indet)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        a1, b1, a2, b2 = self.real, self.indet, other.real, other.indet
        return NeutroScalar(a1 * a2, a1 * b2 + a2 * b1 + b1 * b2)

    __rmul__ = __mul__

    def __truediv__(self, k):
        # division only by a real; a + bI has no general inverse
        if isinstance(k, NeutroScalar):
            if not k.is_pure_real:
                raise ZeroDivisionError("division by a scalar carrying I is undefined")
            k = k.real
        if isinstance(k, float) or self.is_float:
            return NeutroScalar(float(self.real) / k, float(self.indet) / k)
        k = _part(k)
        return NeutroScalar(self.real / k, self.indet / k)

    def __abs__(self):
        return NeutroScalar(abs(self.real), abs(self.indet))

    def __str__(self):
        return format_token(self)

    def __repr__(self):
        return f"NeutroScalar('{format_token(self)}')"

    def as_fraction(self) -> Fraction:
        """Real value of a pure-real scalar."""
        if not self.is_pure_real:
            raise ValueError(f"{self} carries an indeterminate part")
        return Fraction(self.real)


ZERO = NeutroScalar(0, 0)
ONE = NeutroScalar(1, 0)
I = NeutroScalar(0, 1)


def _coerce(value):
    if isinstance(value, NeutroScalar):
        return value
    if isinstance(value, (int, float, Fraction, Decimal)) and not isinstance(value, bool):
        return NeutroScalar(value, 0)
    return NotImplemented


def scalar(value, exact: bool = True) -> NeutroScalar:
    """Coerce ``value`` (scalar, number or token string) to a NeutroScalar."""
    if isinstance(value, NeutroScalar):
        return value
    if isinstance(value, str):
        return parse_token(value, exact=exact)
    if isinstance(value, tuple) and len(value) == 2:
        return NeutroScalar(*value)
    coerced = _coerce(value)
    if coerced is NotImplemented:
        raise TypeError(f"cannot interpret {value!r} as a scalar")
    return coerced


def vector(values, exact: bool = True) -> tuple:
    """Tuple of scalars from tokens, numbers, or a whitespace/comma separated string."""
    if isinstance(values, str):
        values = [t for t in re.split(r"[\s,]+", values.strip()) if t]
    return tuple(scalar(v, exact=exact) for v in values)


def isclose(x, y, tol: float = FLOAT_TOL) -> bool:
    x, y = scalar(x), scalar(y)
    return abs(x.real - y.real) <= tol and abs(x.indet - y.indet) <= tol


# ---------------------------------------------------------------- ordering


class Ordering(Enum):
    LESS = "less"
    EQUAL = "equal"
    GREATER = "greater"
    INCOMPARABLE = "incomparable"


class OrderMode(Enum):
    USUAL = "usual"
    PSEUDO_REAL = "pseudo-real"
    PSEUDO_NEUTRO = "pseudo-neutro"

    @classmethod
    def parse(cls, text: str) -> "OrderMode":
        aliases = {"pseudo-neutrosophic": "pseudo-neutro", "pseudo_real": "pseudo-real",
                   "pseudo_neutro": "pseudo-neutro"}
        key = text.strip().lower()
        try:
            return cls(aliases.get(key, key))
        except ValueError:
            raise ConfigError(f"unknown order mode {text!r}") from None


def _sign(d) -> int:
    if isinstance(d, float) and abs(d) <= FLOAT_TOL:
        return 0
    return (d > 0) - (d < 0)


def compare(x: NeutroScalar, y: NeutroScalar) -> Ordering:
    """Componentwise (usual) order; a partial order."""
    sr = _sign(x.real - y.real)
    si = _sign(x.indet - y.indet)
    if sr == 0 and si == 0:
        return Ordering.EQUAL
    if sr <= 0 and si <= 0:
        return Ordering.LESS
    if sr >= 0 and si >= 0:
        return Ordering.GREATER
    return Ordering.INCOMPARABLE


def pseudo_key(mode: OrderMode, x: NeutroScalar) -> tuple:
    """Total sort key behind the pseudo selections.

    Pseudo-real orders by real part, then I coefficient.  Pseudo-neutrosophic
    puts every value carrying I below the pure reals, then orders by the I
    coefficient and finally the real part (so {7I, 25} has minimum 7I).
    """
    if mode is OrderMode.PSEUDO_REAL:
        return (x.real, x.indet)
    if mode is OrderMode.PSEUDO_NEUTRO:
        return (x.indet == 0, x.indet, x.real)
    raise ValueError("pseudo_key needs a pseudo order mode")


def extremum(mode: OrderMode, x: NeutroScalar, y: NeutroScalar) -> tuple:
    """Return ``(min, max)`` of two scalars under ``mode``."""
    if mode is OrderMode.USUAL:
        order = compare(x, y)
        if order is Ordering.INCOMPARABLE:
            raise IncomparableUnderUsual(None, (x, y))
        return (y, x) if order is Ordering.GREATER else (x, y)
    return (x, y) if pseudo_key(mode, x) <= pseudo_key(mode, y) else (y, x)


def less_equal(mode: OrderMode, x: NeutroScalar, y: NeutroScalar) -> bool:
    if mode is OrderMode.USUAL:
        return compare(x, y) in (Ordering.LESS, Ordering.EQUAL)
    return pseudo_key(mode, x) <= pseudo_key(mode, y)


# ----------------------------------------------------------------- signals


class SignalValue(Enum):
    OFF = "0"
    ON = "1"
    INDETERMINATE = "I"

    @property
    def token(self) -> str:
        return self.value

    @property
    def scalar(self) -> NeutroScalar:
        return _SIGNAL_SCALARS[self]

    @classmethod
    def from_token(cls, token: str) -> "SignalValue":
        return cls(token.strip())

    @classmethod
    def from_scalar(cls, x: NeutroScalar) -> "SignalValue":
        for sig, val in _SIGNAL_SCALARS.items():
            if val == x:
                return sig
        raise InputError(f"{x} is not a signal value (0, 1 or I)")


_SIGNAL_SCALARS = {SignalValue.OFF: ZERO, SignalValue.ON: ONE, SignalValue.INDETERMINATE: I}


def bam_signal(x: NeutroScalar) -> SignalValue:
    """Signal of an activation: positive real evidence wins, then positive I."""
    if x.real > 0:
        return SignalValue.ON
    if x.indet > 0:
        return SignalValue.INDETERMINATE
    return SignalValue.OFF


def ncm_threshold(x: NeutroScalar, k=0) -> SignalValue:
    """NCM thresholding: above ``k`` is On; otherwise any I makes it Indeterminate."""
    if k < 0:
        raise ConfigError("threshold k must be non-negative")
    if x.real > k:
        return SignalValue.ON
    if x.indet != 0:
        return SignalValue.INDETERMINATE
    return SignalValue.OFF


# ------------------------------------------------------------ token grammar

_NUM = r"(?:\d+/\d+|\d+(?:\.\d+)?|\.\d+)"
_TERM = re.compile(rf"([+-]?)({_NUM})?(I?)")


def parse_token(text: str, exact: bool = True) -> NeutroScalar:
    """Parse one scalar token such as ``-1+2I``, ``0.3I``, ``2/3`` or ``I``."""
    token = text.strip().replace("−", "-")
    if not token:
        raise TokenError(text, 1, "empty scalar token")
    real = indet = None
    pos = 0
    while pos < len(token):
        m = _TERM.match(token, pos)
        sign, num, unit = m.group(1), m.group(2), m.group(3)
        if m.end() == pos or (num is None and not unit):
            raise TokenError(text, pos + 1)
        if pos > 0 and not sign:
            raise TokenError(text, pos + 1)
        try:
            value = Fraction(num) if num is not None else Fraction(1)
        except ZeroDivisionError:
            raise TokenError(text, pos + 1, "zero denominator") from None
        if sign == "-":
            value = -value
        if unit:
            if indet is not None:
                raise TokenError(text, pos + 1, "two I terms")
            indet = value
        else:
            if real is not None:
                raise TokenError(text, pos + 1, "two real terms")
            real = value
        pos = m.end()
    real = real if real is not None else Fraction(0)
    indet = indet if indet is not None else Fraction(0)
    if not exact:
        return NeutroScalar(float(real), float(indet))
    return NeutroScalar(real, indet)


def _terminating_digits(q: Fraction):
    """Exact decimal string of ``q`` or None if it does not terminate."""
    den = q.denominator
    twos = fives = 0
    while den % 2 == 0:
        den //= 2
        twos += 1
    while den % 5 == 0:
        den //= 5
        fives += 1
    if den != 1:
        return None
    places = max(twos, fives)
    scaled = abs(q.numerator) * 10 ** places // q.denominator
    digits = str(scaled).rjust(places + 1, "0")
    whole, frac = digits[: len(digits) - places], digits[len(digits) - places:].rstrip("0")
    text = whole + ("." + frac if frac else "")
    return ("-" if q < 0 else "") + text


def format_number(v: Real) -> str:
    if isinstance(v, float):
        v = Fraction(Decimal(repr(v)))
    text = _terminating_digits(v)
    return text if text is not None else f"{v.numerator}/{v.denominator}"


def _format_parts(real_text: str, indet, real_is_zero: bool, fmt) -> str:
    if indet == 0:
        return real_text
    mag = abs(indet)
    coef = "" if mag == 1 else fmt(mag)
    if real_is_zero:
        return ("-" if indet < 0 else "") + coef + "I"
    return real_text + ("-" if indet < 0 else "+") + coef + "I"


def format_token(x: NeutroScalar) -> str:
    """Canonical token; ``parse_token(format_token(x)) == x`` in exact mode."""
    return _format_parts(format_number(x.real), x.indet, x.real == 0, format_number)


def round_half_up(v: Real, places: int = 2) -> Decimal:
    q = Fraction(Decimal(repr(v))) if isinstance(v, float) else Fraction(v)
    exact = Decimal(q.numerator) / Decimal(q.denominator)
    return exact.quantize(Decimal(1).scaleb(-places), rounding=ROUND_HALF_UP)


def _display_number(v, places: int) -> str:
    d = round_half_up(v, places)
    text = format(d.normalize(), "f") if d else "0"
    return text


def display_token(x: NeutroScalar, places: int = 2) -> str:
    """Token with each part rounded half-up to ``places`` decimals (for reports)."""
    real_text = _display_number(x.real, places)
    indet = round_half_up(x.indet, places)
    return _format_parts(real_text, indet, round_half_up(x.real, places) == 0,
                         lambda m: _display_number(m, places))
