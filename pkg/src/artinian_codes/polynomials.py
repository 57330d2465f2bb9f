"""Exact integer polynomials.

Univariate polynomials in z are plain tuples of Python ints, lowest degree
first, with trailing zeros trimmed (the zero polynomial is ``()``).
:class:`TrivariatePoly` is a sparse map over (x, y, z) exponents; z may carry
negative exponents while a Laurent computation is in flight.
"""
from __future__ import annotations

from collections import defaultdict
from math import comb

UPoly = tuple


def utrim(c) -> UPoly:
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def uadd(a: UPoly, b: UPoly) -> UPoly:
    n = max(len(a), len(b))
    return utrim((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n))


def uscale(a: UPoly, k: int) -> UPoly:
    return utrim(k * c for c in a)


def umonomial(exp: int, coeff: int = 1) -> UPoly:
    return utrim([0] * exp + [coeff])


def ueval(a: UPoly, z: int) -> int:
    acc = 0
    for c in reversed(a):
        acc = acc * z + c
    return acc


def usubs_power(a: UPoly, theta: int) -> UPoly:
    """a(z**theta)."""
    out = [0] * ((len(a) - 1) * theta + 1) if a else []
    for i, c in enumerate(a):
        out[i * theta] = c
    return utrim(out)


def ujson(a: UPoly) -> list[int]:
    return list(a) if a else [0]


class TrivariatePoly:
    """Sparse polynomial in x, y, z with integer coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms: dict[tuple[int, int, int], int] = {}
        if terms:
            for k, c in dict(terms).items():
                if c:
                    self.terms[tuple(k)] = int(c)

    @classmethod
    def monomial(cls, xe=0, ye=0, ze=0, coeff=1) -> "TrivariatePoly":
        return cls({(xe, ye, ze): coeff})

    @classmethod
    def x(cls):
        return cls.monomial(1, 0, 0)

    @classmethod
    def y(cls):
        return cls.monomial(0, 1, 0)

    @classmethod
    def z(cls, power=1):
        return cls.monomial(0, 0, power)

    @classmethod
    def constant(cls, c):
        return cls.monomial(0, 0, 0, c)

    def __add__(self, other):
        out = defaultdict(int, self.terms)
        for k, c in _coerce(other).terms.items():
            out[k] += c
        return TrivariatePoly(out)

    __radd__ = __add__

    def __neg__(self):
        return TrivariatePoly({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        other = _coerce(other)
        out = defaultdict(int)
        for (a, b, c), u in self.terms.items():
            for (d, e, f), v in other.terms.items():
                out[(a + d, b + e, c + f)] += u * v
        return TrivariatePoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        result = TrivariatePoly.constant(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        return isinstance(other, TrivariatePoly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def shift_z(self, k: int) -> "TrivariatePoly":
        """Multiply by z**k (k may be negative)."""
        return TrivariatePoly({(a, b, c + k): v for (a, b, c), v in self.terms.items()})

    def min_z_exponent(self) -> int:
        return min((c for _, _, c in self.terms), default=0)

    def substitute(self, x: "TrivariatePoly", y: "TrivariatePoly") -> "TrivariatePoly":
        """Replace x and y by polynomials; z is left alone."""
        xp: dict[int, TrivariatePoly] = {}
        yp: dict[int, TrivariatePoly] = {}
        acc: dict = defaultdict(int)
        for (a, b, c), v in self.terms.items():
            if a not in xp:
                xp[a] = x**a
            if b not in yp:
                yp[b] = y**b
            for (d, e, f), w in (xp[a] * yp[b]).terms.items():
                acc[(d, e, f + c)] += v * w
        return TrivariatePoly(acc)

    def evaluate_z(self, z: int) -> "TrivariatePoly":
        if any(c < 0 for _, _, c in self.terms):
            raise ValueError("cannot evaluate negative z powers at an integer")
        out = defaultdict(int)
        for (a, b, c), v in self.terms.items():
            out[(a, b, 0)] += v * z**c
        return TrivariatePoly(out)

    def xy_coefficient(self, xe: int, ye: int) -> dict[int, int]:
        """Coefficient of x^xe y^ye as a map z-exponent -> integer."""
        return {c: v for (a, b, c), v in self.terms.items() if a == xe and b == ye}

    def total_mass(self) -> int:
        return sum(self.terms.values())

    def sorted_terms(self) -> list[tuple[int, int, int, int]]:
        return [(a, b, c, v) for (a, b, c), v in sorted(self.terms.items())]

    def to_json(self) -> list:
        """Quadruples ``[xe, ye, ze, "coeff"]`` sorted lexicographically."""
        return [[a, b, c, str(v)] for a, b, c, v in self.sorted_terms()]

    @classmethod
    def from_json(cls, data) -> "TrivariatePoly":
        return cls({(int(a), int(b), int(c)): int(v) for a, b, c, v in data})

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for a, b, c, v in sorted(self.sorted_terms(), key=lambda t: (-t[0], t[1], -t[2])):
            mono = "*".join(
                s
                for s in (
                    "" if a == 0 else ("x" if a == 1 else f"x^{a}"),
                    "" if b == 0 else ("y" if b == 1 else f"y^{b}"),
                    "" if c == 0 else ("z" if c == 1 else f"z^{c}"),
                )
                if s
            )
            if not mono:
                parts.append(str(v))
            elif v == 1:
                parts.append(mono)
            elif v == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{v}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")


def _coerce(p) -> TrivariatePoly:
    if isinstance(p, TrivariatePoly):
        return p
    return TrivariatePoly.constant(int(p))


def binomial_power(n: int) -> TrivariatePoly:
    """(x + y)**n."""
    return TrivariatePoly({(n - k, k, 0): comb(n, k) for k in range(n + 1)})
