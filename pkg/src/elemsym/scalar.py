"""Complex scalars in three interchangeable arithmetic modes.

A scalar is an (re, im) pair under

    (a,b) + (c,d) = (a+c, b+d)
    (a,b) * (c,d) = (ac - bd, ad + bc)

``exact`` uses Python's arbitrary-precision integers (Gaussian integers,
never overflows), ``wrap64`` reproduces two's-complement 64-bit integer
arithmetic with silent overflow, and ``float`` uses double precision.
Scalars of different modes never mix; attempting to combine them raises
``TypeError``.
"""

from __future__ import annotations

import re as _re

_U64 = 1 << 64
_I64_MAX = (1 << 63) - 1

DEFAULT_TOLERANCE = 1e-9


def wrap_i64(v: int) -> int:
    """Reduce an integer to signed 64-bit two's complement."""
    v &= _U64 - 1
    return v - _U64 if v > _I64_MAX else v


class _ComplexBase:
    __slots__ = ("re", "im")
    mode = ""

    def __init__(self, re=0, im=0):
        self.re = self._coerce(re)
        self.im = self._coerce(im)

    @staticmethod
    def _coerce(v):
        raise NotImplementedError

    def _operand(self, other):
        # Same-mode scalars pass through; plain ints are promoted; any
        # other scalar mode is a usage error, everything else is left to
        # the other operand's reflected method.
        if type(other) is type(self):
            return other
        if isinstance(other, _ComplexBase):
            raise TypeError(f"mode mismatch: {self.mode} vs {other.mode}")
        if isinstance(other, int) and not isinstance(other, bool):
            return type(self)(other, 0)
        return None

    def __add__(self, other):
        o = self._operand(other)
        if o is None:
            return NotImplemented
        return type(self)(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._operand(other)
        if o is None:
            return NotImplemented
        return type(self)(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = self._operand(other)
        if o is None:
            return NotImplemented
        return type(self)(o.re - self.re, o.im - self.im)

    def __mul__(self, other):
        o = self._operand(other)
        if o is None:
            return NotImplemented
        return type(self)(
            self.re * o.re - self.im * o.im,
            self.re * o.im + self.im * o.re,
        )

    __rmul__ = __mul__

    def __neg__(self):
        return type(self)(-self.re, -self.im)

    def __eq__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.mode, self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    @property
    def is_zero(self):
        return not self

    def __repr__(self):
        return f"{type(self).__name__}({self.re!r}, {self.im!r})"

    def __str__(self):
        # "(re,im)" with no spaces, matching the legacy text protocol.
        return f"({self.re},{self.im})"


class ExactComplex(_ComplexBase):
    """Gaussian integer: exact, closed under + and *."""

    __slots__ = ()
    mode = "exact"

    @staticmethod
    def _coerce(v):
        if isinstance(v, int) and not isinstance(v, bool):
            return v
        raise TypeError(f"exact parts must be int, got {type(v).__name__}")


class Wrap64Complex(_ComplexBase):
    """Integer pair with silent two's-complement wrapping at 64 bits."""

    __slots__ = ()
    mode = "wrap64"

    @staticmethod
    def _coerce(v):
        if isinstance(v, int) and not isinstance(v, bool):
            return wrap_i64(v)
        raise TypeError(f"wrap64 parts must be int, got {type(v).__name__}")


class FloatComplex(_ComplexBase):
    """Double-precision pair; equality is exact, use isclose for checks."""

    __slots__ = ()
    mode = "float"

    @staticmethod
    def _coerce(v):
        return float(v)

    def isclose(self, other, tol=DEFAULT_TOLERANCE):
        if type(other) is not FloatComplex:
            raise TypeError("isclose compares float-mode scalars")
        return abs(self.re - other.re) <= tol and abs(self.im - other.im) <= tol

    def abs(self) -> float:
        return (self.re * self.re + self.im * self.im) ** 0.5


MODES = {
    "exact": ExactComplex,
    "wrap64": Wrap64Complex,
    "float": FloatComplex,
}


def scalar_class(mode: str):
    try:
        return MODES[mode]
    except KeyError:
        raise ValueError(f"unknown arithmetic mode: {mode!r}") from None


def make(mode: str, re=0, im=0):
    return scalar_class(mode)(re, im)


def zero(mode: str):
    return scalar_class(mode)()


def one(mode: str):
    return scalar_class(mode)(1)


_PAIR_RE = _re.compile(r"\(\s*([^\s,()]+)\s*,\s*([^\s,()]+)\s*\)$")


def parse_complex(text: str, mode: str = "exact"):
    """Parse "a", "bi", "a+bi", "a-bi" or "(a,b)" into a scalar.

    Exact and wrap64 modes take integer parts; float mode also accepts
    decimal and exponent notation.  Raises ValueError on anything else.
    """
    cls = scalar_class(mode)
    s = text.strip()
    if not s:
        raise ValueError("empty complex literal")

    def part(p: str):
        p = p.strip()
        try:
            if mode == "float":
                return float(p)
            return int(p, 10)
        except ValueError:
            raise ValueError(f"bad complex literal: {text!r}") from None

    m = _PAIR_RE.match(s)
    if m:
        return cls(part(m.group(1)), part(m.group(2)))

    if s.endswith(("i", "I")):
        body = s[:-1]
        # Split off a real part at the last top-level sign (skipping a
        # leading sign and any exponent sign like "1e-3").
        split = -1
        for idx in range(len(body) - 1, 0, -1):
            if body[idx] in "+-" and body[idx - 1] not in "eE":
                split = idx
                break
        if split > 0:
            re_part, im_part = body[:split], body[split:]
        else:
            re_part, im_part = None, body
        if im_part in ("", "+"):
            im_val = part("1")
        elif im_part == "-":
            im_val = -part("1")
        else:
            im_val = part(im_part)
        re_val = part(re_part) if re_part is not None else (0.0 if mode == "float" else 0)
        return cls(re_val, im_val)

    return cls(part(s), 0 if mode != "float" else 0.0)


def pretty_parts(c):
    """Split a scalar into (sign, body) for rendering inside a term.

    Pure-real and pure-imaginary values pull their sign out: the result is
    (+1 or -1, magnitude text).  Mixed values return (None, "(a+bi)") with
    the signs kept inside the parentheses.
    """
    re_, im_ = c.re, c.im

    def num(v):
        return str(v)

    if im_ == 0:
        if re_ == 0:
            return 1, "0"
        return (1 if re_ > 0 else -1), num(abs(re_))
    if re_ == 0:
        mag = abs(im_)
        return (1 if im_ > 0 else -1), ("i" if mag == 1 else f"{num(mag)}i")
    imag = "i" if abs(im_) == 1 else f"{num(abs(im_))}i"
    return None, f"({num(re_)}{'+' if im_ > 0 else '-'}{imag})"
