"""Finite fields F_q, q = p^m, as F_p[u]/(modulus) with lookup tables.

Elements are integers in ``range(q)``; the base-p digits of an element are
the coefficients of its polynomial representative in ``u`` (lowest first).
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product

import numpy as np

from .errors import RingConstructionError

# Conway polynomials, coefficients lowest degree first.
DEFAULT_MODULI = {
    4: (1, 1, 1),
    8: (1, 1, 0, 1),
    9: (2, 2, 1),
    16: (1, 1, 0, 0, 1),
    25: (2, 4, 1),
    27: (1, 2, 0, 1),
}


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    f = 2
    while f * f <= p:
        if p % f == 0:
            return False
        f += 1
    return True


def prime_power(q: int) -> tuple[int, int]:
    """Return ``(p, m)`` with ``q == p**m``; raise if q is not a prime power."""
    if q < 2:
        raise RingConstructionError(f"{q} is not a prime power")
    p = 2
    while q % p:
        p += 1
    m, r = 0, q
    while r % p == 0:
        r //= p
        m += 1
    if r != 1:
        raise RingConstructionError(f"{q} is not a prime power")
    return p, m


def _poly_mod(a: list[int], mod: tuple[int, ...], p: int) -> list[int]:
    a = list(a)
    m = len(mod) - 1
    for i in range(len(a) - 1, m - 1, -1):
        c = a[i] % p
        if c:
            for j in range(m + 1):
                a[i - m + j] = (a[i - m + j] - c * mod[j]) % p
    a = [c % p for c in a[:m]]
    return a + [0] * (m - len(a))


def is_irreducible(mod: tuple[int, ...], p: int) -> bool:
    """Trial division by every monic polynomial of degree <= deg/2."""
    m = len(mod) - 1
    if m < 1 or mod[-1] % p != 1:
        return False
    if m == 1:
        return True
    for d in range(1, m // 2 + 1):
        for low in product(range(p), repeat=d):
            divisor = tuple(low) + (1,)
            if not any(_poly_mod(list(mod), divisor, p)):
                return False
    return True


@dataclass(frozen=True)
class FieldDescriptor:
    p: int
    m: int = 1
    modulus: tuple[int, ...] | None = None

    def __post_init__(self):
        if not is_prime(self.p):
            raise RingConstructionError(f"p = {self.p} is not prime")
        if self.m < 1:
            raise RingConstructionError("extension degree must be >= 1")
        if self.m == 1:
            object.__setattr__(self, "modulus", None)
            return
        mod = self.modulus
        if mod is None:
            mod = DEFAULT_MODULI.get(self.p**self.m)
            if mod is None:
                raise RingConstructionError(
                    f"no built-in modulus for q = {self.p ** self.m}; supply field_poly"
                )
        mod = tuple(int(c) % self.p for c in mod)
        if len(mod) != self.m + 1:
            raise RingConstructionError(f"modulus must have degree {self.m}")
        if not is_irreducible(mod, self.p):
            raise RingConstructionError(f"modulus {mod} is reducible over F_{self.p}")
        object.__setattr__(self, "modulus", mod)

    @property
    def q(self) -> int:
        return self.p**self.m

    @classmethod
    def of_order(cls, q: int, modulus=None) -> "FieldDescriptor":
        p, m = prime_power(q)
        return cls(p, m, tuple(modulus) if modulus is not None else None)


class GF:
    """Arithmetic in F_q through precomputed ``q x q`` numpy tables.

    The tables broadcast, so ``F.mul[a, M]`` multiplies every entry of the
    integer array ``M`` by the scalar ``a``.
    """

    def __init__(self, desc: FieldDescriptor):
        self.desc = desc
        self.p, self.m, self.q = desc.p, desc.m, desc.q
        q, p = self.q, self.p
        digits = [self._digits(a) for a in range(q)]
        self.add = np.empty((q, q), dtype=np.int64)
        self.mul = np.empty((q, q), dtype=np.int64)
        for a in range(q):
            for b in range(q):
                self.add[a, b] = self._number([(x + y) % p for x, y in zip(digits[a], digits[b])])
                self.mul[a, b] = self._number(self._mul_digits(digits[a], digits[b]))
        self.neg = np.array(
            [self._number([(-x) % p for x in digits[a]]) for a in range(q)], dtype=np.int64
        )
        self.sub = self.add[:, self.neg]
        self.inv = np.zeros(q, dtype=np.int64)
        for a in range(1, q):
            self.inv[a] = int(np.nonzero(self.mul[a] == 1)[0][0])

    def _digits(self, a: int) -> list[int]:
        out = []
        for _ in range(self.m):
            out.append(a % self.p)
            a //= self.p
        return out

    def _number(self, digits) -> int:
        return sum(int(c) * self.p**i for i, c in enumerate(digits))

    def _mul_digits(self, a, b):
        if self.m == 1:
            return [(a[0] * b[0]) % self.p]
        prod_ = [0] * (2 * self.m - 1)
        for i, x in enumerate(a):
            for j, y in enumerate(b):
                prod_[i + j] += x * y
        return _poly_mod(prod_, self.desc.modulus, self.p)

    def digits(self, a: int) -> list[int]:
        return self._digits(int(a))

    def from_digits(self, digits) -> int:
        digits = list(digits) + [0] * (self.m - len(digits))
        if len(digits) > self.m:
            digits = _poly_mod(digits, self.desc.modulus, self.p) if self.m > 1 else [digits[0]]
        return self._number([c % self.p for c in digits])

    def format(self, a: int) -> str:
        """Render an element; non-prime fields print as a polynomial in u."""
        a = int(a)
        if self.m == 1:
            return str(a)
        terms = []
        for i, c in reversed(list(enumerate(self._digits(a)))):
            if not c:
                continue
            mono = "" if i == 0 else ("u" if i == 1 else f"u^{i}")
            if not mono:
                terms.append(str(c))
            elif c == 1:
                terms.append(mono)
            else:
                terms.append(f"{c}*{mono}")
        return "+".join(terms) if terms else "0"

    def __repr__(self):
        return f"GF({self.q})"


@lru_cache(maxsize=None)
def get_field(desc: FieldDescriptor) -> GF:
    return GF(desc)
