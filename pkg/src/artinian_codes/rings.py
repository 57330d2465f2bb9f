"""Finite Artinian local rings: Z/p^e, monomial quotient algebras over F_q,
and Nagata idealizations of monomial algebras with their canonical module.

Every algebra here has a K-basis ``e_0 = 1, e_1, ...`` whose products are
either zero or a single basis element, so multiplication is a table lookup.
Basis elements other than ``e_0`` span the maximal ideal.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import product
from typing import Union

import numpy as np

from . import linalg
from .errors import NotFrobenius, RingConstructionError
from .fields import FieldDescriptor, get_field, is_prime

Monomial = tuple[int, ...]


def grlex_key(mono: Monomial):
    # ascending degree; within a degree, x1 > x2 > ... comes first
    return (sum(mono), tuple(-a for a in mono))


def divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def monomial_name(mono: Monomial, names) -> str:
    parts = []
    for v, a in zip(names, mono):
        if a == 1:
            parts.append(v)
        elif a > 1:
            parts.append(f"{v}^{a}")
    return "*".join(parts) if parts else "1"


# ----------------------------------------------------------------- descriptors


@dataclass(frozen=True)
class MonomialAlgebraDesc:
    """``K[vars] / (ideal)`` with ``ideal`` given by exponent vectors."""

    field: FieldDescriptor
    vars: tuple[str, ...] = ()
    ideal: tuple[Monomial, ...] = ()

    def __post_init__(self):
        names = tuple(self.vars)
        if len(set(names)) != len(names):
            raise RingConstructionError("duplicate variable names")
        ideal = []
        for mono in self.ideal:
            mono = tuple(int(a) for a in mono)
            if len(mono) != len(names) or any(a < 0 for a in mono):
                raise RingConstructionError(f"bad exponent vector {mono}")
            if not any(mono):
                raise RingConstructionError("the unit monomial generates the whole ring")
            ideal.append(mono)
        minimal = {
            m for m in ideal if not any(o != m and divides(o, m) for o in ideal)
        }
        ideal = sorted(minimal, key=grlex_key)
        for i, v in enumerate(names):
            if not any(all(a == 0 for j, a in enumerate(m) if j != i) for m in ideal):
                raise RingConstructionError(
                    f"ideal is not zero-dimensional: no pure power of {v}"
                )
        object.__setattr__(self, "vars", names)
        object.__setattr__(self, "ideal", tuple(ideal))

    @property
    def q(self) -> int:
        return self.field.q


@dataclass(frozen=True)
class IntegerChainDesc:
    p: int
    e: int = 1

    def __post_init__(self):
        if not is_prime(self.p):
            raise RingConstructionError(f"p = {self.p} is not prime")
        if self.e < 1:
            raise RingConstructionError("e must be >= 1")


@dataclass(frozen=True)
class IdealizationDesc:
    base: MonomialAlgebraDesc

    def __post_init__(self):
        if not isinstance(self.base, MonomialAlgebraDesc):
            raise RingConstructionError("idealization base must be a monomial algebra")


RingDescriptor = Union[MonomialAlgebraDesc, IntegerChainDesc, IdealizationDesc]


def monomial_algebra(q: int, vars=(), ideal=(), modulus=None) -> MonomialAlgebraDesc:
    """Descriptor helper; ``ideal`` entries may be exponent tuples or strings
    such as ``"x^2*y"``."""
    vars = tuple(vars)
    exps = []
    for m in ideal:
        if isinstance(m, str):
            m = parse_monomial(m, vars)
        exps.append(tuple(m))
    return MonomialAlgebraDesc(FieldDescriptor.of_order(q, modulus), vars, tuple(exps))


def parse_monomial(text: str, vars) -> Monomial:
    exps = [0] * len(vars)
    for part in text.replace(" ", "").split("*"):
        if part in ("", "1"):
            continue
        name, _, power = part.partition("^")
        if name not in vars:
            raise RingConstructionError(f"unknown variable {name!r}")
        exps[vars.index(name)] += int(power) if power else 1
    return tuple(exps)


def descriptor_to_json(desc: RingDescriptor) -> dict:
    if isinstance(desc, IntegerChainDesc):
        return {"kind": "zmod", "p": desc.p, "e": desc.e}
    if isinstance(desc, IdealizationDesc):
        return {"kind": "idealize", "base": descriptor_to_json(desc.base)}
    out = {
        "kind": "algebra",
        "q": desc.q,
        "vars": list(desc.vars),
        "ideal": [list(m) for m in desc.ideal],
    }
    if desc.field.modulus is not None:
        out["field_poly"] = list(desc.field.modulus)
    return out


def descriptor_from_json(data: dict) -> RingDescriptor:
    kind = data["kind"]
    if kind == "zmod":
        return IntegerChainDesc(int(data["p"]), int(data["e"]))
    if kind == "idealize":
        return IdealizationDesc(descriptor_from_json(data["base"]))
    fd = FieldDescriptor.of_order(int(data["q"]), data.get("field_poly"))
    return MonomialAlgebraDesc(fd, tuple(data["vars"]), tuple(tuple(m) for m in data["ideal"]))


# ----------------------------------------------------------------------- rings


@dataclass(frozen=True)
class RingInvariants:
    lambda_R: int
    type_R: int
    socle_basis: tuple
    frobenius: bool
    maximal_ideal_gens: tuple


class ChainRing:
    """Z/p^e.  Elements are ints in ``range(p**e)``."""

    kind = "chain"

    def __init__(self, desc: IntegerChainDesc):
        self.descriptor = desc
        self.p, self.e = desc.p, desc.e
        self.modulus = self.p**self.e
        self.field = get_field(FieldDescriptor(self.p))
        self.q = self.p
        self.length = self.e
        self.zero, self.one = 0, 1
        self.maximal_ideal_gens = (self.p,) if self.e > 1 else ()

    @property
    def size(self) -> int:
        return self.modulus

    def elements(self):
        return range(self.modulus)

    def coerce(self, a) -> int:
        if isinstance(a, (bool, np.bool_)) or not isinstance(a, (int, np.integer)):
            raise TypeError(f"{a!r} is not an element of Z/{self.modulus}")
        return int(a) % self.modulus

    def add(self, a, b):
        return (a + b) % self.modulus

    def neg(self, a):
        return (-a) % self.modulus

    def mul(self, a, b):
        return (a * b) % self.modulus

    def is_zero(self, a) -> bool:
        return a % self.modulus == 0

    def is_unit(self, a) -> bool:
        return a % self.p != 0

    def residue(self, a) -> int:
        return a % self.p

    def section(self, k) -> int:
        return int(k) % self.p

    def format_element(self, a) -> str:
        return str(int(a))

    def __repr__(self):
        return f"Z/{self.modulus}"


class AlgebraRing:
    """A finite local K-algebra with a multiplicative monomial-like basis.

    ``table[i, j]`` is the index of ``e_i * e_j`` or -1 when the product is 0.
    Elements are tuples of field elements (coefficients on the basis).
    """

    kind = "algebra"

    def __init__(self, desc, field_desc: FieldDescriptor, names, table, gens, monomials=None):
        self.descriptor = desc
        self.field = get_field(field_desc)
        self.q = self.field.q
        self.names = tuple(names)
        self.table = np.asarray(table, dtype=np.int64)
        self.length = len(self.names)
        self.maximal_ideal_gens = tuple(gens)
        self.monomials = monomials
        self.zero = (0,) * self.length
        self.one = (1,) + (0,) * (self.length - 1)

    @property
    def size(self) -> int:
        return self.q**self.length

    def elements(self):
        return product(range(self.q), repeat=self.length)

    def coerce(self, a) -> tuple:
        a = tuple(int(c) for c in a)
        if len(a) != self.length or any(not 0 <= c < self.q for c in a):
            raise TypeError(f"{a!r} is not an element of {self!r}")
        return a

    def basis_element(self, i: int) -> tuple:
        out = [0] * self.length
        out[i] = 1
        return tuple(out)

    def scalar(self, k: int) -> tuple:
        return (int(k),) + (0,) * (self.length - 1)

    def add(self, a, b):
        F = self.field
        return tuple(int(F.add[x, y]) for x, y in zip(a, b))

    def neg(self, a):
        return tuple(int(self.field.neg[x]) for x in a)

    def mul(self, a, b):
        F = self.field
        out = [0] * self.length
        for i, x in enumerate(a):
            if not x:
                continue
            for j, y in enumerate(b):
                k = self.table[i, j]
                if y and k >= 0:
                    out[k] = int(F.add[out[k], F.mul[x, y]])
        return tuple(out)

    def is_zero(self, a) -> bool:
        return not any(a)

    def is_unit(self, a) -> bool:
        return a[0] != 0

    def residue(self, a) -> int:
        return int(a[0])

    def section(self, k) -> tuple:
        return self.scalar(k)

    def mult_matrix(self, r) -> np.ndarray:
        """Matrix of ``s -> r*s`` acting on coefficient columns."""
        F = self.field
        M = np.zeros((self.length, self.length), dtype=np.int64)
        for i, c in enumerate(r):
            if not c:
                continue
            for j in range(self.length):
                k = self.table[i, j]
                if k >= 0:
                    M[k, j] = F.add[M[k, j], c]
        return M

    @cached_property
    def basis_maps(self) -> list[tuple[np.ndarray, np.ndarray]]:
        """For each basis index i, the pairs ``(src, dst)`` with e_i e_src = e_dst."""
        out = []
        for i in range(self.length):
            src = np.flatnonzero(self.table[i] >= 0)
            out.append((src, self.table[i, src]))
        return out

    def format_element(self, a) -> str:
        F = self.field
        terms = []
        for c, name in zip(a, self.names):
            if not c:
                continue
            coeff_terms = F.format(c).split("+")
            for ct in coeff_terms:
                if name == "1":
                    terms.append(ct)
                elif ct == "1":
                    terms.append(name)
                else:
                    terms.append(f"{ct}*{name}")
        return "+".join(terms) if terms else "0"

    def __repr__(self):
        return f"AlgebraRing({', '.join(self.names)} over GF({self.q}))"


Ring = Union[ChainRing, AlgebraRing]


def _monomial_algebra_ring(desc: MonomialAlgebraDesc) -> AlgebraRing:
    nv = len(desc.vars)
    bounds = []
    for i in range(nv):
        pure = [m[i] for m in desc.ideal if all(a == 0 for j, a in enumerate(m) if j != i)]
        bounds.append(min(pure))
    standard = [
        m
        for m in product(*(range(b) for b in bounds))
        if not any(divides(g, m) for g in desc.ideal)
    ]
    standard.sort(key=grlex_key)
    index = {m: i for i, m in enumerate(standard)}
    N = len(standard)
    table = -np.ones((N, N), dtype=np.int64)
    for i, a in enumerate(standard):
        for j, b in enumerate(standard):
            table[i, j] = index.get(tuple(x + y for x, y in zip(a, b)), -1)
    gens = [index[m] for m in (tuple(int(k == i) for k in range(nv)) for i in range(nv)) if m in index]
    names = [monomial_name(m, desc.vars) for m in standard]
    return AlgebraRing(desc, desc.field, names, table, gens, monomials=tuple(standard))


def _idealization_ring(desc: IdealizationDesc) -> AlgebraRing:
    base = _monomial_algebra_ring(desc.base)
    N = base.length
    table = -np.ones((2 * N, 2 * N), dtype=np.int64)
    table[:N, :N] = base.table
    # e_i acting on the dual functional e_j^*: (e_i . f)(s) = f(e_i s)
    for i in range(N):
        for k in range(N):
            j = base.table[i, k]
            if j >= 0:
                table[i, N + j] = N + k
                table[N + j, i] = N + k
    names = list(base.names) + [f"~{nm}" for nm in base.names]
    gens = list(base.maximal_ideal_gens) + list(range(N, 2 * N))
    return AlgebraRing(desc, desc.base.field, names, table, gens, monomials=base.monomials)


@lru_cache(maxsize=None)
def construct_ring(desc: RingDescriptor) -> Ring:
    """Build (and cache) the ring handle for a descriptor."""
    if isinstance(desc, IntegerChainDesc):
        return ChainRing(desc)
    if isinstance(desc, MonomialAlgebraDesc):
        return _monomial_algebra_ring(desc)
    if isinstance(desc, IdealizationDesc):
        return _idealization_ring(desc)
    raise RingConstructionError(f"unknown ring descriptor {desc!r}")


@lru_cache(maxsize=None)
def ring_invariants(R: Ring) -> RingInvariants:
    if isinstance(R, ChainRing):
        soc = (R.p ** (R.e - 1),)
        return RingInvariants(R.e, 1, soc, True, R.maximal_ideal_gens)
    F = R.field
    if R.maximal_ideal_gens:
        stacked = np.vstack([R.mult_matrix(R.basis_element(g)) for g in R.maximal_ideal_gens])
        soc = linalg.nullspace(F, stacked)
    else:
        soc = linalg.identity(R.length)
    basis = tuple(tuple(int(c) for c in row) for row in soc)
    gens = tuple(R.basis_element(g) for g in R.maximal_ideal_gens)
    return RingInvariants(R.length, len(basis), basis, len(basis) == 1, gens)


def is_frobenius(R: Ring) -> bool:
    return ring_invariants(R).frobenius


def socle_generator(R: Ring):
    """Canonical generator of soc(R) for a Frobenius ring."""
    inv = ring_invariants(R)
    if not inv.frobenius:
        raise NotFrobenius(f"{R!r} has type {inv.type_R}")
    return inv.socle_basis[0]


def nagata_idealization(base: Ring) -> AlgebraRing:
    """``R ⋉ R^∨`` with ``R^∨ = Hom_K(R, K)`` as canonical module."""
    desc = getattr(base, "descriptor", None)
    if not isinstance(desc, MonomialAlgebraDesc):
        raise RingConstructionError("idealization needs a monomial algebra base")
    return construct_ring(IdealizationDesc(desc))


def embed_in_idealization(S: AlgebraRing, r) -> tuple:
    """The ring embedding ``R -> S, r -> r + 0``."""
    return tuple(r) + (0,) * (S.length - len(r))


# ----------------------------------------------------------- base change maps


def tensor_desc(A: MonomialAlgebraDesc, B: MonomialAlgebraDesc) -> MonomialAlgebraDesc:
    """``A ⊗_K B`` on the disjoint union of variables and the union ideal."""
    if A.field != B.field:
        raise RingConstructionError("tensor factors must share a residue field")
    taken = set(A.vars)
    bvars = []
    for v in B.vars:
        name = v
        while name in taken:
            name = "b_" + name
        taken.add(name)
        bvars.append(name)
    na, nb = len(A.vars), len(B.vars)
    ideal = [tuple(m) + (0,) * nb for m in A.ideal] + [(0,) * na + tuple(m) for m in B.ideal]
    return MonomialAlgebraDesc(A.field, tuple(A.vars) + tuple(bvars), tuple(ideal))


def lift_along_tensor(A: AlgebraRing, S: AlgebraRing, r) -> tuple:
    """Image of ``r in A`` under ``A -> A ⊗ B``."""
    nb = len(S.descriptor.vars) - len(A.descriptor.vars)
    index = {m: i for i, m in enumerate(S.monomials)}
    out = [0] * S.length
    for c, m in zip(r, A.monomials):
        if c:
            out[index[tuple(m) + (0,) * nb]] = c
    return tuple(out)


def extend_field_desc(A: MonomialAlgebraDesc, q: int, modulus=None) -> MonomialAlgebraDesc:
    """Same variables and ideal over a larger field of the same characteristic.

    Only extensions of a prime field are supported, where the inclusion
    ``F_p -> F_q`` is the identity on ``range(p)``.
    """
    fd = FieldDescriptor.of_order(q, modulus)
    if fd.p != A.field.p or A.field.m != 1:
        raise RingConstructionError("field extension must start from the prime field")
    return MonomialAlgebraDesc(fd, A.vars, A.ideal)
