"""Single-variable polynomials built and modified by their zeroes.

Coefficients are stored leading-first: ``Poly1([t0, .., tn])`` is
f(z) = sum t_k z^(n-k).  Under this convention the coefficients of a
monic polynomial are exactly the symmetric values of the negated roots,
which is what ``from_roots`` computes; ``mul_linear`` appends a factor
(z + x) by one linear pass, ``insert_zero`` adds the root lambda via
x = -lambda, and ``deflate`` divides the factor back out.
"""

from __future__ import annotations

import json

from elemsym import esp
from elemsym.scalar import _ComplexBase, make, one, pretty_parts, scalar_class


class Poly1:
    """Coefficient vector t_0..t_n, all in one arithmetic mode."""

    __slots__ = ("coeffs", "mode")

    def __init__(self, coeffs):
        coeffs = tuple(coeffs)
        if not coeffs:
            raise ValueError("a polynomial needs at least one coefficient")
        cls = type(coeffs[0])
        if not issubclass(cls, _ComplexBase):
            raise TypeError("coefficients must be scalars")
        for c in coeffs[1:]:
            if type(c) is not cls:
                raise ValueError("coefficients mix arithmetic modes")
        self.coeffs = coeffs
        self.mode = coeffs[0].mode

    @classmethod
    def from_pairs(cls, pairs, mode="exact"):
        return cls([make(mode, re, im) for re, im in pairs])

    @classmethod
    def from_ints(cls, ints, mode="exact"):
        return cls([make(mode, v, 0) for v in ints])

    @classmethod
    def from_roots(cls, roots, mode=None) -> "Poly1":
        """Monic polynomial with exactly the given zeroes.

        t_k is the k-th symmetric value of the negated roots, so exact
        evaluation at every root is exactly zero.
        """
        roots = list(roots)
        if mode is None:
            mode = roots[0].mode if roots else "exact"
        elif roots and roots[0].mode != mode:
            raise ValueError(f"mode {mode!r} does not match the roots' mode")
        if not roots:
            return cls([one(mode)])
        table = esp.build_table(esp.Assignment([-r for r in roots]))
        return cls([one(mode)] + table.last_row())

    @property
    def ncoeffs(self):
        return len(self.coeffs)

    def degree(self):
        """Formal degree: index of the last coefficient."""
        return len(self.coeffs) - 1

    def _check_scalar(self, x):
        if type(x) is not scalar_class(self.mode):
            raise ValueError(f"scalar mode does not match polynomial mode {self.mode}")
        return x

    def mul_linear(self, x) -> "Poly1":
        """Multiply by (z + x): s_k = t_k + x * t_{k-1}, one extra coefficient."""
        x = self._check_scalar(x)
        t = self.coeffs
        out = [t[0]]
        for k in range(1, len(t)):
            out.append(t[k] + x * t[k - 1])
        out.append(x * t[-1])
        return Poly1(out)

    def insert_zero(self, lam) -> "Poly1":
        """Multiply by (z - lambda), adding lambda to the zero set."""
        return self.mul_linear(-self._check_scalar(lam))

    def deflate(self, lam):
        """Synthetic division by (z - lambda).

        Returns (quotient, remainder) with p(z) = q(z)*(z - lambda) + r
        and r = p(lambda); inverse of insert_zero when r = 0.
        """
        lam = self._check_scalar(lam)
        if len(self.coeffs) < 2:
            raise ValueError("cannot deflate a degree-0 polynomial")
        acc = self.coeffs[0]
        out = [acc]
        for t in self.coeffs[1:]:
            acc = t + lam * acc
            out.append(acc)
        return Poly1(out[:-1]), out[-1]

    def eval(self, z):
        """Horner evaluation, n multiplies and n adds."""
        z = self._check_scalar(z)
        acc = self.coeffs[0]
        for t in self.coeffs[1:]:
            acc = acc * z + t
        return acc

    def __eq__(self, other):
        if not isinstance(other, Poly1):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __repr__(self):
        return f"Poly1({list(self.coeffs)!r})"

    def __str__(self):
        return self.pretty()

    def pretty(self) -> str:
        """Render like "z^5 + (-2+i) z^4 - 2i z^3 + z^2 + i z + 3i"."""
        n = len(self.coeffs) - 1
        chunks = []
        for k, c in enumerate(self.coeffs):
            if c.is_zero and not (n == 0 and k == 0):
                continue
            power = n - k
            sign, body = pretty_parts(c)
            if power > 0:
                zpow = "z" if power == 1 else f"z^{power}"
                body = zpow if body == "1" else f"{body} {zpow}"
            if not chunks:
                if sign is None or sign > 0:
                    chunks.append(body)
                else:
                    chunks.append(f"-{body}")
            elif sign is None or sign > 0:
                chunks.append(f"+ {body}")
            else:
                chunks.append(f"- {body}")
        if not chunks:
            return "0"
        return " ".join(chunks)

    def to_json(self) -> dict:
        def enc(v):
            return str(v) if self.mode == "exact" else v

        return {
            "convention": "t0-leading",
            "mode": self.mode,
            "coeffs": [[enc(c.re), enc(c.im)] for c in self.coeffs],
        }

    def to_json_str(self) -> str:
        return json.dumps(self.to_json())

    @classmethod
    def from_json(cls, doc):
        if isinstance(doc, str):
            doc = json.loads(doc)
        if doc.get("convention") != "t0-leading":
            raise ValueError("unknown coefficient convention")
        mode = doc["mode"]
        dec = int if mode in ("exact", "wrap64") else float
        return cls([make(mode, dec(re_s), dec(im_s)) for re_s, im_s in doc["coeffs"]])
