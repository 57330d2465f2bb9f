"""Theorem-verification harness.

Each check turns one structural identity into a predicate on a single code.
A family of codes (every submodule of R^n, or seeded random codes) is run
through every check.  Identities that need a Frobenius ring are asserted on
Frobenius families only; the three characterizations of Frobenius rings
(length duality, type + free rank of the dual, the MacWilliams identity) are
asserted universally on Frobenius families and must be *violated* by at least
one code of every non-Frobenius family.
"""
from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import combinations, product
from typing import Callable

import numpy as np

from . import codes, enumerators as en, oracles
from .errors import BudgetExceeded
from .modules import (
    Submodule,
    contains,
    full_module,
    free_rank,
    is_free,
    length,
    matlis_dual,
    maximal_ideal_times,
    minimal_generators_count,
    module_sum,
    socle,
    span_closure,
    type_of,
)
from .polynomials import TrivariatePoly, binomial_power
from .rings import (
    AlgebraRing,
    ChainRing,
    IdealizationDesc,
    IntegerChainDesc,
    MonomialAlgebraDesc,
    construct_ring,
    descriptor_from_json,
    descriptor_to_json,
    is_frobenius,
    monomial_algebra,
    monomial_name,
    ring_invariants,
)

EXHAUSTIVE_ALGEBRA_BUDGET = 2**16
EXHAUSTIVE_CHAIN_BUDGET = 2**20
ORACLE_AMBIENT_BUDGET = 2**16
ORACLE_CODE_BUDGET = 2**16


# ------------------------------------------------------------------- families


def ring_label(desc) -> str:
    if isinstance(desc, IntegerChainDesc):
        return f"Z/{desc.p ** desc.e}"
    if isinstance(desc, IdealizationDesc):
        return f"({ring_label(desc.base)}) idealized"
    base = f"GF({desc.field.q})"
    if not desc.vars:
        return base
    ideal = ",".join(monomial_name(m, desc.vars) for m in desc.ideal)
    return f"{base}[{','.join(desc.vars)}]/({ideal})"


@dataclass(frozen=True)
class InstanceFamily:
    ring: object
    mode: str = "exhaustive"
    n_min: int = 1
    n_max: int = 1
    gens_min: int = 1
    gens_max: int | None = None
    trials: int = 0
    seed: int = 0

    def __post_init__(self):
        if self.mode not in ("exhaustive", "random"):
            raise ValueError(f"unknown generation mode {self.mode!r}")
        if not 1 <= self.n_min <= self.n_max:
            raise ValueError("need 1 <= n_min <= n_max")
        if self.mode == "exhaustive":
            R = construct_ring(self.ring)
            if R.size**self.n_max > EXHAUSTIVE_CHAIN_BUDGET:
                raise BudgetExceeded(f"|R^n| = {R.size ** self.n_max} exceeds 2^20")

    @property
    def name(self) -> str:
        s = f"{ring_label(self.ring)} {self.mode} n={self.n_min}..{self.n_max}"
        if self.mode == "random":
            s += f" trials={self.trials} seed={self.seed}"
        return s


def enumerate_all_submodules(R, n: int):
    """Yield every submodule of R^n exactly once, in breadth-first order.

    Starts from 0 and repeatedly adds a cyclic module Rv; canonical
    presentations make deduplication a set lookup.
    """
    budget = EXHAUSTIVE_CHAIN_BUDGET if isinstance(R, ChainRing) else EXHAUSTIVE_ALGEBRA_BUDGET
    if R.size**n > budget:
        raise BudgetExceeded(f"|R^n| = {R.size ** n} exceeds {budget}")
    cyclic = []
    seen_cyclic = set()
    for v in product(list(R.elements()), repeat=n):
        M = span_closure(R, n, [v])
        if M not in seen_cyclic and not M.is_zero():
            seen_cyclic.add(M)
            cyclic.append(M)
    zero = span_closure(R, n, [])
    seen = {zero}
    frontier = [zero]
    yield zero
    while frontier:
        nxt = []
        for M in frontier:
            for Z in cyclic:
                if contains(M, Z):
                    continue
                S = module_sum(M, Z)
                if S not in seen:
                    seen.add(S)
                    nxt.append(S)
                    yield S
        frontier = nxt


def random_codes(family: InstanceFamily):
    """Generator-matrix entries uniform over R; shape uniform over {1..n} x n."""
    R = construct_ring(family.ring)
    rng = random.Random(family.seed)
    elements = list(R.elements())
    for _ in range(family.trials):
        n = rng.randint(family.n_min, family.n_max)
        k = rng.randint(family.gens_min, family.gens_max or n)
        gens = [[elements[rng.randrange(len(elements))] for _ in range(n)] for _ in range(k)]
        yield n, gens


def family_instances(family: InstanceFamily):
    R = construct_ring(family.ring)
    if family.mode == "random":
        for n, gens in random_codes(family):
            yield Instance(family.ring, n, gens)
        return
    for n in range(family.n_min, family.n_max + 1):
        for C in enumerate_all_submodules(R, n):
            yield Instance(family.ring, n, C.generators(), code=C)


# ------------------------------------------------------------------ instances


def element_json(R, a):
    return int(a) if isinstance(R, ChainRing) else [int(c) for c in a]


def element_from_json(R, a):
    return int(a) if isinstance(R, ChainRing) else tuple(int(c) for c in a)


class Instance:
    """One code plus lazily computed values shared by all checks."""

    def __init__(self, desc, n: int, generators, code: Submodule | None = None):
        self.desc = desc
        self.ring = construct_ring(desc)
        self.n = n
        self.generators = [tuple(v) for v in generators]
        self._code = code

    def witness(self) -> dict:
        return {
            "ring": descriptor_to_json(self.desc),
            "n": self.n,
            "generators": [[element_json(self.ring, a) for a in v] for v in self.generators],
        }

    @classmethod
    def from_witness(cls, w: dict) -> "Instance":
        desc = descriptor_from_json(w["ring"])
        R = construct_ring(desc)
        gens = [[element_from_json(R, a) for a in v] for v in w["generators"]]
        return cls(desc, int(w["n"]), gens)

    @cached_property
    def C(self):
        return self._code if self._code is not None else span_closure(self.ring, self.n, self.generators)

    @cached_property
    def inv(self):
        return ring_invariants(self.ring)

    @cached_property
    def frobenius(self):
        return self.inv.frobenius

    @cached_property
    def is_algebra(self):
        return isinstance(self.ring, AlgebraRing)

    @cached_property
    def lam(self):
        return length(self.C)

    @cached_property
    def typ(self):
        return type_of(self.C)

    @cached_property
    def mu(self):
        return minimal_generators_count(self.C)

    @cached_property
    def dual(self):
        return codes.dual(self.C)

    @cached_property
    def fr(self):
        return free_rank(self.C)

    @cached_property
    def free(self):
        return is_free(self.C)

    @cached_property
    def dual_free(self):
        return is_free(self.dual)

    @cached_property
    def d(self):
        return None if self.C.is_zero() else codes.min_distance(self.C)

    @cached_property
    def bounds(self):
        return None if self.C.is_zero() else codes.classify_bounds(self.C)

    @cached_property
    def mds(self):
        return bool(self.bounds and self.bounds.is_mds)

    @cached_property
    def subset_lengths(self):
        return en.subset_lengths(self.C)

    @cached_property
    def W(self):
        return en.weight_polynomials(self.C)

    @cached_property
    def L(self):
        return en.length_enumerator(self.C)

    @cached_property
    def W_dual(self):
        return en.weight_polynomials(self.dual)

    @cached_property
    def brute(self):
        """Oracle codeword set from the original generators, or None past budget."""
        if self.ring.q**self.lam > ORACLE_CODE_BUDGET:
            return None
        return oracles.brute_span(self.ring, self.n, self.generators)

    @cached_property
    def brute_census(self):
        return None if self.brute is None else oracles.brute_weight_census(self.brute)


# --------------------------------------------------------------------- checks

Result = tuple  # (ok, expected, actual)


@dataclass(frozen=True)
class Check:
    id: str
    gate: str  # "any" | "frobenius" | "iff"
    fn: Callable[[Instance], Result | None]
    doc: str = ""


def _frac(x: Fraction) -> str:
    return str(x)


def check_length_additivity(I: Instance):
    C = I.C
    subs = [maximal_ideal_times(C), socle(C), codes.support_restriction(C, range(I.n // 2))]
    exp, act, ok = [], [], True
    for S in subs:
        ls = length(S)
        ok &= contains(C, S) and type_of(S) <= I.typ and 0 <= ls <= I.lam
        if I.brute is not None:
            # |C / C'| = |C| / |C'| must equal q^(lambda(C) - lambda(C'))
            small = oracles.brute_length(S)
            exp.append(oracles.brute_length(I.brute) - small)
            act.append(I.lam - ls)
    return ok and exp == act, exp, act


def check_matlis_length(I: Instance):
    if not I.is_algebra:
        return None
    return (length(matlis_dual(I.C)) == I.lam), I.lam, length(matlis_dual(I.C))


def check_matlis_type_generators(I: Instance):
    if not I.is_algebra:
        return None
    D = matlis_dual(I.C)
    exp = [I.typ, I.mu]
    act = [minimal_generators_count(D), type_of(D)]
    return exp == act, exp, act


def check_socle_distance(I: Instance):
    if I.C.is_zero() or I.ring.q**I.lam > codes.DEFAULT_MAX_CODEWORDS:
        return None
    full = codes.min_distance(I.C, full=True)
    return I.d == full, full, I.d


def check_socle_residue_orthogonality(I: Instance):
    left = codes.dual(codes.socle_kcode(I.C))
    right = codes.rho_kcode(I.dual)
    return left == right, [list(r) for r in left.matrix.tolist()], [list(r) for r in right.matrix.tolist()]


def check_length_duality(I: Instance):
    exp = I.n * I.inv.lambda_R
    act = I.lam + length(I.dual)
    return exp == act, exp, act


def check_double_dual(I: Instance):
    DD = codes.dual(I.dual)
    ok = contains(DD, I.C) and (DD == I.C or not I.frobenius)
    return ok, length(I.C), length(DD)


def check_type_free_rank(I: Instance):
    act = I.typ + free_rank(I.dual)
    return act == I.n, I.n, act


def check_free_dual_free(I: Instance):
    return I.free == I.dual_free, I.free, I.dual_free


def check_free_characterization(I: Instance):
    if not I.free:
        return None
    a, b = codes.socle_kcode(I.C), codes.rho_kcode(I.C)
    return a == b, length(b), length(a)


def check_socle_choice_invariance(I: Instance):
    """Rescaling the socle generator by a unit leaves every derived value alone."""
    from .rings import socle_generator

    R = I.ring
    z = socle_generator(R)
    if R.q > 2:
        u = R.section(R.q - 1)
    elif isinstance(R, ChainRing):
        u = R.modulus - 1
    elif R.maximal_ideal_gens:
        u = R.add(R.one, R.basis_element(R.maximal_ideal_gens[0]))
    else:
        u = R.one
    z2 = R.mul(u, z)
    a = codes.socle_kcode(I.C)
    b = codes.socle_kcode(I.C, generator=z2)
    return a == b, length(a), length(b)


def check_free_rank_paths(I: Instance):
    if isinstance(I.ring, ChainRing):
        vals = [free_rank(I.C, "residue"), free_rank(I.C, "smith")]
    elif I.frobenius:
        vals = [free_rank(I.C, "residue"), free_rank(I.C, "split")]
    else:
        return None
    vals.append(length(codes.rho_kcode(I.C)))
    return len(set(vals)) == 1, vals[0], vals


def check_type_length_bound(I: Instance):
    lr = I.inv.lambda_R
    ok = I.lam <= I.typ * lr and ((I.lam == I.typ * lr) == I.free)
    return ok, [I.lam, I.typ * lr, I.free], [I.lam <= I.typ * lr, I.lam == I.typ * lr]


def check_lcd_free(I: Instance):
    if not codes.is_lcd(I.C):
        return None
    return I.free, True, I.free


def check_singleton_bounds(I: Instance):
    if I.C.is_zero():
        return None
    lr, tr = I.inv.lambda_R, I.inv.type_R
    b1 = I.n - Fraction(I.lam, lr) + 1
    b2 = I.n - Fraction(I.typ, tr) + 1
    return I.d <= b1 and I.d <= b2, [_frac(b1), _frac(b2)], I.d


def check_mds_free_mdt(I: Instance):
    if I.C.is_zero():
        return None
    rhs = I.free and I.bounds.is_mdt
    return I.mds == rhs, I.mds, rhs


def check_mds_puncture(I: Instance):
    if I.C.is_zero():
        return None
    d, n = I.d, I.n
    target = full_module(I.ring, n - d + 1)
    cond = all(codes.puncture(I.C, A) == target for A in combinations(range(n), d - 1))
    return I.mds == cond, I.mds, cond


def _shortening_condition(I: Instance) -> bool:
    return all(
        not codes.support_restriction(I.C, B).is_zero() for B in combinations(range(I.n), I.d)
    )


def check_mds_shortening(I: Instance):
    """MDS => every d-subset supports a codeword; that condition forces MDT."""
    if I.C.is_zero():
        return None
    cond = _shortening_condition(I)
    ok = (not I.mds or cond) and (not cond or I.bounds.is_mdt)
    return ok, [I.mds, I.bounds.is_mdt], cond


def check_mds_dual_structure(I: Instance):
    if not I.mds:
        return None
    lr = I.inv.lambda_R
    k = I.lam // lr
    exp = {"fr": k, "mu": k, "dual_free": True, "dual_rank": I.n - k, "double_dual": True}
    act = {
        "fr": I.fr,
        "mu": I.mu,
        "dual_free": I.dual_free,
        "dual_rank": length(I.dual) // lr,
        "double_dual": codes.dual(I.dual) == I.C,
    }
    if I.is_algebra and isinstance(I.desc, MonomialAlgebraDesc):
        CS = codes.lift_to_idealization(I.C)
        DS = codes.dual(CS)
        exp.update(lift_free=True, lift_rank=k, lift_dual_rank=I.n - k)
        act.update(
            lift_free=is_free(CS),
            lift_rank=free_rank(CS),
            lift_dual_rank=free_rank(DS) if is_free(DS) else -1,
        )
    return exp == act, exp, act


def check_mds_dual_mds(I: Instance):
    if I.C.is_zero() or I.dual.is_zero():
        return None
    dual_mds = codes.is_mds(I.dual)
    ok = I.mds == dual_mds
    exp, act = [I.mds], [dual_mds]
    if I.mds:
        dd = codes.min_distance(I.dual)
        exp.append(I.n - I.d + 2)
        act.append(dd)
        ok &= dd == I.n - I.d + 2
    return ok, exp, act


def check_length_enumerator_census(I: Instance):
    if I.brute is None:
        return None
    x, y = TrivariatePoly.x(), TrivariatePoly.y()
    classical = TrivariatePoly()
    for i, a in enumerate(I.brute_census):
        classical = classical + TrivariatePoly.constant(a) * (x + y) ** (I.n - i) * y**i
    got = I.L.evaluate_z(I.ring.q)
    return got == classical, classical.to_json(), got.to_json()


def check_weight_polynomial_census(I: Instance):
    if I.brute is None:
        return None
    got = en.evaluate_weight_distribution(I.W, I.ring.q)
    ok = got == I.brute_census
    if I.d is not None:
        ok &= all(not g for g in I.W.g[1 : I.d]) and bool(I.W.g[I.d])
    return ok, I.brute_census, got


def check_flat_extension(I: Instance):
    if not isinstance(I.desc, MonomialAlgebraDesc) or I.desc.field.m != 1:
        return None
    if I.n * I.inv.lambda_R > 8:
        return None
    B = monomial_algebra(I.desc.field.p, ["t_ext"], ["t_ext^2"])
    r = en.flat_extension_check(I.C, B)
    return r.holds, r.base.g_json(), r.extended.g_json()


def check_mds_support_lengths(I: Instance):
    if I.C.is_zero():
        return None
    lr = I.inv.lambda_R
    pattern = [max(0, bin(m).count("1") - I.d + 1) * lr for m in range(1 << I.n)]
    cond = pattern == I.subset_lengths
    return I.mds == cond, I.mds, cond


def check_mds_closed_form(I: Instance):
    if not I.mds:
        return None
    closed = en.mds_weight_polynomials(I.n, I.d, I.inv.lambda_R)
    return closed.g == I.W.g, closed.g_json(), I.W.g_json()


def check_dual_length_enumerator(I: Instance):
    pred = en.dual_length_prediction(I.L, I.lam, I.inv.lambda_R)
    act = en.length_enumerator(I.dual)
    return pred == act, pred.to_json(), act.to_json()


def check_length_weight_substitution(I: Instance):
    Wt = I.W.as_trivariate()
    ok = en.length_from_weight(Wt) == I.L and en.weight_from_length(I.L) == Wt
    ok &= I.L.evaluate_z(1) == binomial_power(I.n)
    return ok, I.L.to_json(), en.length_from_weight(Wt).to_json()


def _macwilliams(I: Instance):
    pred = en.transform_polynomial(I.W)
    act = I.W_dual.as_trivariate()
    return pred == act, act.to_json(), pred.to_json()


def check_macwilliams_identity(I: Instance):
    ok, exp, act = _macwilliams(I)
    if ok:
        # applying the transform twice must return W_C
        ok = en.transform_polynomial(en.macwilliams_transform(I.W)) == I.W.as_trivariate()
    return ok, exp, act


def check_oracle_agreement(I: Instance):
    if I.brute is None:
        return None
    exp, act = {}, {}
    exp["codewords"] = len(I.brute.words)
    act["codewords"] = len(I.brute.words) if oracles.same_words(I.brute, I.C) else -1
    exp["length"], act["length"] = oracles.brute_length(I.brute), I.lam
    exp["census"] = I.brute_census
    act["census"] = en.evaluate_weight_distribution(I.W, I.ring.q)
    if I.d is not None:
        exp["distance"], act["distance"] = oracles.brute_min_distance(I.brute), I.d
    if I.ring.size**I.n <= ORACLE_AMBIENT_BUDGET:
        bd = oracles.brute_dual(I.brute)
        exp["dual"] = len(bd.words)
        act["dual"] = len(bd.words) if oracles.same_words(bd, I.dual) else -1
    if len(I.brute.words) <= oracles.FREE_RANK_MAX_WORDS:
        exp["free_rank"], act["free_rank"] = oracles.brute_free_rank(I.brute), I.fr
    return exp == act, exp, act


CHECKS: tuple[Check, ...] = (
    Check("length_additivity", "any", check_length_additivity),
    Check("matlis_length", "any", check_matlis_length),
    Check("matlis_type_generators", "any", check_matlis_type_generators),
    Check("socle_distance", "any", check_socle_distance),
    Check("socle_residue_orthogonality", "frobenius", check_socle_residue_orthogonality),
    Check("length_duality", "iff", check_length_duality),
    Check("double_dual", "any", check_double_dual),
    Check("type_free_rank", "iff", check_type_free_rank),
    Check("free_dual_free", "frobenius", check_free_dual_free),
    Check("free_characterization", "frobenius", check_free_characterization),
    Check("socle_choice_invariance", "frobenius", check_socle_choice_invariance),
    Check("free_rank_paths", "any", check_free_rank_paths),
    Check("type_length_bound", "frobenius", check_type_length_bound),
    Check("lcd_free", "frobenius", check_lcd_free),
    Check("singleton_bounds", "any", check_singleton_bounds),
    Check("mds_free_mdt", "any", check_mds_free_mdt),
    Check("mds_puncture", "any", check_mds_puncture),
    Check("mds_shortening", "frobenius", check_mds_shortening),
    Check("mds_dual_structure", "any", check_mds_dual_structure),
    Check("mds_dual_mds", "any", check_mds_dual_mds),
    Check("length_enumerator_census", "any", check_length_enumerator_census),
    Check("weight_polynomial_census", "any", check_weight_polynomial_census),
    Check("flat_extension", "any", check_flat_extension),
    Check("mds_support_lengths", "any", check_mds_support_lengths),
    Check("mds_closed_form", "any", check_mds_closed_form),
    Check("dual_length_enumerator", "frobenius", check_dual_length_enumerator),
    Check("length_weight_substitution", "any", check_length_weight_substitution),
    Check("macwilliams_identity", "frobenius", check_macwilliams_identity),
    Check("macwilliams_characterization", "iff", lambda I: _macwilliams(I)),
    Check("oracle_agreement", "any", check_oracle_agreement),
)

CHECKS_BY_ID = {c.id: c for c in CHECKS}


# ------------------------------------------------------------------- verdicts


def _canon(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


@dataclass
class TheoremVerdict:
    theorem: str
    family: str
    kind: str  # "universal" | "existential"
    instances: int = 0
    failures: list = field(default_factory=list)
    witnesses: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        if self.kind == "universal":
            return not self.failures
        return bool(self.witnesses)

    def to_json(self) -> dict:
        return {
            "theorem": self.theorem,
            "family": self.family,
            "kind": self.kind,
            "instances": self.instances,
            "passed": self.passed,
            "failures": sorted(self.failures, key=_canon),
            "witnesses": sorted(self.witnesses, key=_canon),
        }

    def merge(self, other: "TheoremVerdict") -> "TheoremVerdict":
        assert (self.theorem, self.family, self.kind) == (other.theorem, other.family, other.kind)
        return TheoremVerdict(
            self.theorem,
            self.family,
            self.kind,
            self.instances + other.instances,
            self.failures + other.failures,
            self.witnesses + other.witnesses,
        )


def _jsonable(v):
    if isinstance(v, (bool, np.bool_)):
        return bool(v)
    if isinstance(v, (int, np.integer)):
        return int(v)
    if isinstance(v, dict):
        return {str(k): _jsonable(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    return v


def _record(I: Instance, expected, actual) -> dict:
    w = I.witness()
    w["expected"] = _jsonable(expected)
    w["actual"] = _jsonable(actual)
    return w


def run_checks(instances, frobenius: bool, family: str, theorems=None) -> list[TheoremVerdict]:
    active = [c for c in CHECKS if theorems is None or c.id in theorems]
    active = [c for c in active if c.gate != "frobenius" or frobenius]
    verdicts = {}
    for c in active:
        kind = "existential" if (c.gate == "iff" and not frobenius) else "universal"
        verdicts[c.id] = TheoremVerdict(c.id, family, kind)
    for I in instances:
        for c in active:
            res = c.fn(I)
            if res is None:
                continue
            ok, expected, actual = res
            v = verdicts[c.id]
            v.instances += 1
            if v.kind == "universal" and not ok:
                v.failures.append(_record(I, expected, actual))
            elif v.kind == "existential" and not ok:
                v.witnesses.append(_record(I, expected, actual))
    return [verdicts[c.id] for c in active]


def run_family(family: InstanceFamily, theorems=None) -> list[TheoremVerdict]:
    R = construct_ring(family.ring)
    return run_checks(family_instances(family), is_frobenius(R), family.name, theorems)


def run_theorem_suite(families, theorems=None) -> list[TheoremVerdict]:
    out = []
    for fam in families:
        out.extend(run_family(fam, theorems))
    return out


def replay_witness(theorem: str, witness: dict) -> Result:
    """Re-run one check on a serialized instance."""
    res = CHECKS_BY_ID[theorem].fn(Instance.from_witness(witness))
    if res is None:
        raise ValueError(f"{theorem} does not apply to this instance")
    ok, expected, actual = res
    return ok, _jsonable(expected), _jsonable(actual)


def verdicts_json(verdicts) -> str:
    return json.dumps([v.to_json() for v in verdicts], sort_keys=True, indent=2)


# ------------------------------------------------------------ stock families

Z4 = IntegerChainDesc(2, 2)
DUAL_NUMBERS = monomial_algebra(2, ["x"], ["x^2"])
TWO_BY_TWO = monomial_algebra(2, ["x", "y"], ["x^2", "y^2"])
SMALL_NON_FROBENIUS = monomial_algebra(2, ["x", "y"], ["x^2", "x*y", "y^2"])


def standard_families() -> list[InstanceFamily]:
    return [
        InstanceFamily(Z4, "exhaustive", 1, 2),
        InstanceFamily(DUAL_NUMBERS, "exhaustive", 1, 2),
        InstanceFamily(TWO_BY_TWO, "random", 1, 6, trials=200, seed=1),
        InstanceFamily(SMALL_NON_FROBENIUS, "exhaustive", 1, 1),
    ]
