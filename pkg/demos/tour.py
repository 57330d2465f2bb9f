"""A short walk through the library: invariants, duality, enumerators.

Run with `python demos/tour.py`.
"""
from dataclasses import asdict
from itertools import combinations

from artinian_codes import (
    check_macwilliams,
    classify_bounds,
    code_report,
    construct_ring,
    dual,
    evaluate_weight_distribution,
    field_extension_check,
    flat_extension_check,
    is_free,
    length,
    lift_to_idealization,
    monomial_algebra,
    span_closure,
    support_restriction,
    weight_polynomials,
)
from artinian_codes.rings import IntegerChainDesc


def show(title, value):
    print(f"{title:<44} {value}")


def chain_ring_code():
    R = construct_ring(IntegerChainDesc(2, 2))
    C = span_closure(R, 2, [[2, 2]])
    print("\n<(2,2)> over Z/4")
    for k, v in asdict(code_report(C)).items():
        show(f"  {k}", v)
    show("  dual generators", dual(C).generators())
    show("  MacWilliams holds", check_macwilliams(C).holds)


def small_field_code():
    K = construct_ring(monomial_algebra(2))
    o, z = K.one, K.zero
    C = span_closure(K, 3, [[o, o, z], [o, z, o]])
    W = weight_polynomials(C)
    print("\n<(1,1,0),(1,0,1)> over F_2")
    show("  g_i(z)", W.g_json())
    show("  weight distribution at z=2", evaluate_weight_distribution(W, 2))
    ext = flat_extension_check(C, monomial_algebra(2, ["u"], ["u^2"]))
    show("  over F2[u]/(u^2): theta, g_i", (ext.theta, ext.extended.g_json()))
    fe = field_extension_check(C, 4)
    show("  over F_4: distribution", evaluate_weight_distribution(fe.extended, 4))


def non_frobenius_ring():
    R = construct_ring(monomial_algebra(2, ["x", "y"], ["x^2", "x*y", "y^2"]))
    x, y = (R.basis_element(R.names.index(v)) for v in ("x", "y"))
    zero = R.zero
    C = span_closure(R, 3, [[x, x, zero], [zero, x, x]])
    b = classify_bounds(C)
    print("\n<(x,x,0),(0,x,x)> over F2[x,y]/(x^2,xy,y^2)")
    show("  distance, MDS, MDT", (b.distance, b.is_mds, b.is_mdt))
    carried = all(not support_restriction(C, B).is_zero() for B in combinations(range(3), b.distance))
    show("  every d-subset carries a codeword", carried)
    m = span_closure(R, 1, [[x], [y]])
    show("  lambda(m) + lambda(m^perp) vs lambda(R)", (length(m) + length(dual(m)), R.length))
    show("  MacWilliams holds for m", check_macwilliams(m).holds)
    mds = span_closure(R, 2, [[R.one, R.one]])
    CS = lift_to_idealization(mds)
    show("  lifted <(1,1)>: free, dual free", (is_free(CS), is_free(dual(CS))))


if __name__ == "__main__":
    chain_ring_code()
    small_field_code()
    non_frobenius_ring()
