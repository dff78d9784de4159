"""Symbolic layer over the generator algebra of symmetric polynomials.

A ``GenPoly`` is a polynomial in abstract generator symbols e_1..e_n,
held as a sparse map from canonical monomials (sorted tuples of generator
indices) to exact Gaussian-integer coefficients.  The empty tuple is the
constant monomial.  On this basis the module implements:

* the index shift ``shift_U`` (each e_k becomes e_{k-1}, e_0 collapses to
  the multiplicative identity, constants are killed),
* the one-variable extension ``alpha_gen`` (e_k becomes e_k + e_{k-1}*g
  where g is the adjoined generator, index n+1),
* its linear multiplicative extension ``phi`` to whole polynomials,
* the generator partition of the extended algebra and the additive split
  along the adjoined generator,
* evaluation against a concrete assignment via the table engine.
"""

from __future__ import annotations

import re as _re

from elemsym import esp
from elemsym.scalar import ExactComplex, make, parse_complex, pretty_parts


class VarSet:
    """Ordered set of distinct variable names."""

    __slots__ = ("names",)

    def __init__(self, names):
        names = tuple(names)
        if len(set(names)) != len(names):
            raise ValueError("duplicate variable names")
        self.names = names

    def merge(self, other: "VarSet") -> "VarSet":
        """Ordered union; names shared with ``other`` are counted once."""
        seen = set(self.names)
        merged = list(self.names)
        for name in other.names:
            if name not in seen:
                seen.add(name)
                merged.append(name)
        return VarSet(merged)

    def __eq__(self, other):
        if not isinstance(other, VarSet):
            return NotImplemented
        return self.names == other.names

    def __hash__(self):
        return hash(self.names)

    def __len__(self):
        return len(self.names)

    def __iter__(self):
        return iter(self.names)

    def __contains__(self, name):
        return name in self.names

    def __repr__(self):
        return f"VarSet({list(self.names)!r})"


def merge_varsets(a: VarSet, b: VarSet) -> VarSet:
    return a.merge(b)


_ZERO = ExactComplex(0)


def _coeff(c):
    if isinstance(c, ExactComplex):
        return c
    if isinstance(c, int) and not isinstance(c, bool):
        return ExactComplex(c)
    raise TypeError("generator coefficients must be exact")


class GenPoly:
    """Sparse polynomial in the generators e_1..e_n."""

    __slots__ = ("n", "terms")

    def __init__(self, n, terms=None):
        if n < 0:
            raise ValueError("generator count must be >= 0")
        canon = {}
        for mono, c in (terms or {}).items():
            mono = tuple(sorted(mono))
            for j in mono:
                if not 1 <= j <= n:
                    raise ValueError(f"generator index {j} outside 1..{n}")
            c = _coeff(c)
            if mono in canon:
                c = canon[mono] + c
            if c == _ZERO:
                canon.pop(mono, None)
            else:
                canon[mono] = c
        self.n = n
        self.terms = canon

    @classmethod
    def zero(cls, n):
        return cls(n)

    @classmethod
    def const(cls, n, value):
        return cls(n, {(): value})

    @classmethod
    def gen(cls, n, k):
        if not 1 <= k <= n:
            raise ValueError(f"generator index {k} outside 1..{n}")
        return cls(n, {(k,): 1})

    @classmethod
    def monomial(cls, n, indices, coeff=1):
        return cls(n, {tuple(indices): coeff})

    @property
    def is_zero(self):
        return not self.terms

    def degree(self):
        return max((len(m) for m in self.terms), default=0)

    def _other(self, other):
        if isinstance(other, GenPoly):
            if other.n != self.n:
                raise ValueError(f"ambient mismatch: {self.n} vs {other.n}")
            return other
        if isinstance(other, (int, ExactComplex)) and not isinstance(other, bool):
            return GenPoly.const(self.n, other)
        return None

    def __add__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        out = dict(self.terms)
        for mono, c in o.terms.items():
            s = out.get(mono, _ZERO) + c
            if s == _ZERO:
                out.pop(mono, None)
            else:
                out[mono] = s
        return GenPoly(self.n, out)

    __radd__ = __add__

    def __neg__(self):
        return GenPoly(self.n, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in o.terms.items():
                mono = tuple(sorted(m1 + m2))
                c = c1 * c2
                s = out.get(mono, _ZERO) + c
                if s == _ZERO:
                    out.pop(mono, None)
                else:
                    out[mono] = s
        return GenPoly(self.n, out)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, GenPoly):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __repr__(self):
        return f"GenPoly({self.n}, {self.terms!r})"

    def __str__(self):
        return format_genpoly(self)


def gp_add(p: GenPoly, q: GenPoly) -> GenPoly:
    return p + q


def gp_mul(p: GenPoly, q: GenPoly) -> GenPoly:
    return p * q


def shift_U(p: GenPoly) -> GenPoly:
    """Decrement every generator index in every monomial; kill constants.

    The shift is linear over the monomial basis.  A factor that reaches
    index 0 is the identity and drops out of the monomial; the constant
    monomial itself maps to 0.
    """
    out = {}
    for mono, c in p.terms.items():
        if not mono:
            continue
        shifted = tuple(sorted(j - 1 for j in mono if j > 1))
        s = out.get(shifted, _ZERO) + c
        if s == _ZERO:
            out.pop(shifted, None)
        else:
            out[shifted] = s
    return GenPoly(p.n, out)


def alpha_gen(k: int, n: int) -> GenPoly:
    """Image of e_k when one variable is adjoined: e_k + e_{k-1} * g.

    The result lives over n+1 generators; g is generator n+1 and stands
    for the adjoined variable itself.  e_0 is the identity, so k = 1
    gives e_1 + g.
    """
    if not 1 <= k <= n:
        raise ValueError(f"generator index {k} outside 1..{n}")
    second = (k - 1, n + 1) if k >= 2 else (n + 1,)
    return GenPoly(n + 1, {(k,): 1, second: 1})


def phi(p: GenPoly) -> GenPoly:
    """Extend alpha_gen linearly and multiplicatively; constants are fixed."""
    n = p.n
    out = GenPoly.zero(n + 1)
    for mono, c in p.terms.items():
        term = GenPoly.const(n + 1, c)
        for j in mono:
            term = term * alpha_gen(j, n)
        out = out + term
    return out


def generator_partition(n: int):
    """Generators of the one-variable extension, split by origin.

    Returns (image, complement): image[k-1] is alpha_gen(k, n) and
    evaluates to the k-th symmetric value of the extended assignment;
    the complement monomial e_n * g evaluates to the top value, index
    n+1.
    """
    if n < 1:
        raise ValueError("generator count must be >= 1")
    image = [alpha_gen(k, n) for k in range(1, n + 1)]
    complement = GenPoly.monomial(n + 1, (n, n + 1))
    return image, complement


def split_by_top_generator(p: GenPoly):
    """Additive split of p by membership of its top generator index.

    Returns (p0, p1) with p = p0 + p1, where p1 collects exactly the
    monomials containing generator p.n and p0 the rest.
    """
    top = p.n
    t0, t1 = {}, {}
    for mono, c in p.terms.items():
        (t1 if top in mono else t0)[mono] = c
    return GenPoly(p.n, t0), GenPoly(p.n, t1)


def _eval_on(p: GenPoly, gen_vals, mode):
    total = make(mode)
    for mono, c in p.terms.items():
        acc = make(mode, c.re, c.im)
        for j in mono:
            acc = acc * gen_vals[j - 1]
        total = total + acc
    return total


def eval_genpoly(p: GenPoly, xs: esp.Assignment):
    """Evaluate p with e_k bound to the k-th symmetric value of xs."""
    if xs.n != p.n:
        raise ValueError(f"assignment length {xs.n} != generator count {p.n}")
    return _eval_on(p, esp.build_table(xs).last_row(), xs.mode)


def eval_extended(p: GenPoly, xs: esp.Assignment):
    """Evaluate an extension output (alpha_gen / phi / generator_partition).

    In those polynomials the generators keep their pre-extension meaning:
    e_j for j <= n is the j-th symmetric value of the base variables, and
    the top generator n+1 is the adjoined variable itself.  So here the
    last value of xs binds generator p.n directly and the rest bind the
    lower generators through their symmetric values.
    """
    if xs.n != p.n:
        raise ValueError(f"assignment length {xs.n} != generator count {p.n}")
    if xs.n == 1:
        gen_vals = [xs.values[-1]]
    else:
        base = esp.Assignment(xs.values[:-1])
        gen_vals = esp.build_table(base).last_row() + [xs.values[-1]]
    return _eval_on(p, gen_vals, xs.mode)


def _mono_key(mono):
    return (len(mono), mono)


def _mono_text(mono):
    parts = []
    run_idx, run_len = mono[0], 0
    for j in mono:
        if j == run_idx:
            run_len += 1
        else:
            parts.append(f"e{run_idx}" if run_len == 1 else f"e{run_idx}^{run_len}")
            run_idx, run_len = j, 1
    parts.append(f"e{run_idx}" if run_len == 1 else f"e{run_idx}^{run_len}")
    return "*".join(parts)


def format_genpoly(p: GenPoly) -> str:
    """Render a GenPoly like "3 + 2*e1*e2 - e3^2"; parse_genpoly inverts it."""
    if p.is_zero:
        return "0"
    chunks = []
    for mono in sorted(p.terms, key=_mono_key):
        c = p.terms[mono]
        sign, body = pretty_parts(c)
        if mono:
            factors = _mono_text(mono)
            body = factors if body == "1" else f"{body}*{factors}"
        if not chunks:
            if sign is None or sign > 0:
                chunks.append(body)
            else:
                chunks.append(f"-{body}")
        elif sign is None or sign > 0:
            chunks.append(f"+ {body}")
        else:
            chunks.append(f"- {body}")
    return " ".join(chunks)


_FACTOR_RE = _re.compile(r"e(\d+)(?:\^(\d+))?$")


def _split_terms(s):
    """Yield (sign, chunk) for each top-level +/- separated piece."""
    depth = 0
    sign = 1
    start = 0
    if s and s[0] in "+-":
        sign = -1 if s[0] == "-" else 1
        start = 1
    pos = start
    for idx in range(start, len(s)):
        ch = s[idx]
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise ValueError("unbalanced parentheses")
        elif ch in "+-" and depth == 0:
            yield sign, s[pos:idx]
            sign = -1 if ch == "-" else 1
            pos = idx + 1
    if depth != 0:
        raise ValueError("unbalanced parentheses")
    yield sign, s[pos:]


def parse_genpoly(text: str, n: int | None = None) -> GenPoly:
    """Parse the format_genpoly round-trip form.

    The ambient generator count defaults to the largest index seen; pass
    ``n`` to widen it (it must cover every index in the text).
    """
    s = "".join(text.split())
    if not s:
        raise ValueError("empty generator polynomial")
    terms = {}
    max_idx = 0
    if s != "0":
        for sign, chunk in _split_terms(s):
            if not chunk:
                raise ValueError(f"bad generator polynomial: {text!r}")
            coeff = ExactComplex(sign)
            factors = []
            for piece in chunk.split("*"):
                m = _FACTOR_RE.match(piece)
                if m:
                    idx = int(m.group(1))
                    if idx < 1:
                        raise ValueError(f"bad generator index in {piece!r}")
                    power = int(m.group(2)) if m.group(2) else 1
                    factors.extend([idx] * power)
                    max_idx = max(max_idx, idx)
                else:
                    lit = piece[1:-1] if piece.startswith("(") and piece.endswith(")") else piece
                    coeff = coeff * parse_complex(lit)
            mono = tuple(sorted(factors))
            prev = terms.get(mono, _ZERO) + coeff
            if prev == _ZERO:
                terms.pop(mono, None)
            else:
                terms[mono] = prev
    if n is None:
        n = max_idx
    elif n < max_idx:
        raise ValueError(f"generator count {n} below largest index {max_idx}")
    return GenPoly(n, terms)
