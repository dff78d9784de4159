"""Evaluation of elementary symmetric polynomials over concrete values.

Two routes are provided on purpose: ``build_table`` fills the O(n^2)
recurrence table

    e[i][k] = e[i-1][k] + e[i-1][k-1] * x_i        (e[i-1][0] = 1,
                                                    e[i-1][k] = 0 for k > i-1)

row by row over prefixes of the assignment, while ``direct_eps`` expands
the defining sum over all k-element index subsets.  The direct route is
exponential and exists as the independent oracle for the table.
"""

from __future__ import annotations

import itertools
import json
from array import array

from elemsym import _backend
from elemsym.scalar import _ComplexBase, make, one, zero


class Assignment:
    """Ordered, single-mode list of values for the variables x_1..x_n."""

    __slots__ = ("values", "labels")

    def __init__(self, values, labels=None):
        values = tuple(values)
        if not values:
            raise ValueError("empty assignment")
        cls = type(values[0])
        if not issubclass(cls, _ComplexBase):
            raise TypeError("assignment values must be scalars")
        for v in values[1:]:
            if type(v) is not cls:
                raise ValueError("assignment mixes arithmetic modes")
        if labels is not None:
            labels = tuple(labels)
            if len(labels) != len(values):
                raise ValueError("labels do not match values")
        self.values = values
        self.labels = labels

    @classmethod
    def from_pairs(cls, pairs, mode="exact", labels=None):
        return cls([make(mode, re, im) for re, im in pairs], labels)

    @property
    def n(self):
        return len(self.values)

    @property
    def mode(self):
        return self.values[0].mode

    def omit(self, i0: int) -> tuple:
        """Values with x_{i0} removed (1-based); may be empty."""
        if not 1 <= i0 <= self.n:
            raise ValueError(f"index {i0} out of range 1..{self.n}")
        return self.values[: i0 - 1] + self.values[i0:]

    def __len__(self):
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def __repr__(self):
        return f"Assignment({list(self.values)!r})"


class EpsTable:
    """Triangular table of symmetric values over prefixes of an assignment.

    Row i covers x_1..x_i; entry (i, k) is the k-th symmetric value of
    that prefix.  Storage is a flattened triangle of raw parts so the
    fixed-width modes can be filled by the kernel backend.
    """

    __slots__ = ("n", "mode", "_re", "_im")

    def __init__(self, n, mode, re_parts, im_parts):
        if len(re_parts) != n * (n + 1) // 2 or len(im_parts) != len(re_parts):
            raise ValueError("table parts do not form an n-row triangle")
        self.n = n
        self.mode = mode
        self._re = re_parts
        self._im = im_parts

    @staticmethod
    def _offset(i, k):
        return i * (i - 1) // 2 + k - 1

    def query(self, i: int, k: int):
        """Entry (i, k), with e(i, 0) = 1 and e(i, k) = 0 for k > i."""
        if not 1 <= i <= self.n:
            raise ValueError(f"row {i} out of range 1..{self.n}")
        if k == 0:
            return one(self.mode)
        if k < 0 or k > i:
            return zero(self.mode)
        off = self._offset(i, k)
        return make(self.mode, self._re[off], self._im[off])

    def row(self, i: int) -> list:
        """Entries (i, 1) .. (i, i) as scalars."""
        if not 1 <= i <= self.n:
            raise ValueError(f"row {i} out of range 1..{self.n}")
        base = self._offset(i, 1)
        return [
            make(self.mode, self._re[base + j], self._im[base + j])
            for j in range(i)
        ]

    def last_row(self) -> list:
        return self.row(self.n)

    def to_json(self) -> dict:
        def enc(v):
            return str(v) if self.mode == "exact" else v

        rows = []
        for i in range(1, self.n + 1):
            base = self._offset(i, 1)
            rows.append(
                [[enc(self._re[base + j]), enc(self._im[base + j])] for j in range(i)]
            )
        return {"n": self.n, "mode": self.mode, "rows": rows}

    def to_json_str(self) -> str:
        return json.dumps(self.to_json())

    @classmethod
    def from_json(cls, doc):
        if isinstance(doc, str):
            doc = json.loads(doc)
        n = doc["n"]
        mode = doc["mode"]
        dec = int if mode in ("exact", "wrap64") else float
        re_parts, im_parts = [], []
        for row in doc["rows"]:
            for re_s, im_s in row:
                re_parts.append(dec(re_s))
                im_parts.append(dec(im_s))
        return cls(n, mode, re_parts, im_parts)

    def __eq__(self, other):
        if not isinstance(other, EpsTable):
            return NotImplemented
        return (
            self.n == other.n
            and self.mode == other.mode
            and list(self._re) == list(other._re)
            and list(self._im) == list(other._im)
        )

    def __repr__(self):
        return f"EpsTable(n={self.n}, mode={self.mode!r})"


def _build_exact(re_parts, im_parts):
    n = len(re_parts)
    m = n * (n + 1) // 2
    tre = [0] * m
    tim = [0] * m
    tre[0] = re_parts[0]
    tim[0] = im_parts[0]
    prev = 0
    for i in range(1, n):
        base = prev + i
        xr = re_parts[i]
        xi = im_parts[i]
        tre[base] = tre[prev] + xr
        tim[base] = tim[prev] + xi
        for k in range(1, i):
            pr = tre[prev + k - 1]
            pi = tim[prev + k - 1]
            tre[base + k] = tre[prev + k] + pr * xr - pi * xi
            tim[base + k] = tim[prev + k] + pr * xi + pi * xr
        pr = tre[prev + i - 1]
        pi = tim[prev + i - 1]
        tre[base + i] = pr * xr - pi * xi
        tim[base + i] = pr * xi + pi * xr
        prev = base
    return tre, tim


def build_table(xs: Assignment) -> EpsTable:
    """Fill the full recurrence table for the assignment, O(n^2) ops."""
    mode = xs.mode
    re_parts = [v.re for v in xs.values]
    im_parts = [v.im for v in xs.values]
    if mode == "wrap64":
        tre, tim = _backend.kernels.build_wrap64(
            array("q", re_parts), array("q", im_parts)
        )
    elif mode == "float":
        tre, tim = _backend.kernels.build_float(
            array("d", re_parts), array("d", im_parts)
        )
    else:
        tre, tim = _build_exact(re_parts, im_parts)
    return EpsTable(xs.n, mode, tre, tim)


def _direct_eps(values, k, mode):
    """Sum over all k-subsets of the product of the chosen values."""
    if k == 0:
        return one(mode)
    if k < 0 or k > len(values):
        return zero(mode)
    total = zero(mode)
    for combo in itertools.combinations(values, k):
        prod = combo[0]
        for v in combo[1:]:
            prod = prod * v
        total = total + prod
    return total


def direct_eps(xs: Assignment, k: int):
    """The k-th symmetric value by direct subset expansion, C(n,k) terms.

    Total in k: returns 1 for k = 0 and 0 outside 0..n.
    """
    return _direct_eps(xs.values, k, xs.mode)


def eps_omit_identity(xs: Assignment, i0: int, k: int):
    """Both sides of the omit-one-variable identity, for the caller to compare.

    lhs is the k-th symmetric value of all n variables; rhs rebuilds it
    from the n-1 variables with x_{i0} removed:
    rhs = eps_k(rest) + eps_{k-1}(rest) * x_{i0}.
    """
    rest = xs.omit(i0)
    mode = xs.mode
    lhs = _direct_eps(xs.values, k, mode)
    rhs = _direct_eps(rest, k, mode) + _direct_eps(rest, k - 1, mode) * xs.values[i0 - 1]
    return lhs, rhs
