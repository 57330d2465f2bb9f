"""Exact linear codes over finite local rings.

Rings are Z/p^e, monomial quotients of F_q[x_1..x_k], or the idealization
R ⋉ R^∨ of such a quotient.  Codes are canonical submodule presentations;
on top of them sit the module invariants, duality, Singleton-type bounds and
the length/weight enumerator machinery.
"""
from .codes import (
    BoundsReport,
    Code,
    CodeReport,
    classify_bounds,
    code_report,
    coordinate_code,
    dual,
    hull,
    is_lcd,
    is_mds,
    lift_to_idealization,
    min_distance,
    puncture,
    rho_kcode,
    shorten,
    socle_kcode,
    support_restriction,
)
from .docformat import InputDocument, emit_document, parse_document
from .enumerators import (
    WeightEnumerator,
    check_macwilliams,
    evaluate_weight_distribution,
    field_extension_check,
    flat_extension_check,
    length_enumerator,
    macwilliams_transform,
    mds_weight_polynomials,
    weight_polynomials,
)
from .errors import (
    ArtinianCodesError,
    BudgetExceeded,
    ChainBackendUnsupported,
    EnumerationBudgetExceeded,
    InternalConsistencyError,
    NotFrobenius,
    ParseError,
    ResidualLaurentTerms,
    RingConstructionError,
    SubsetBudgetExceeded,
    ZeroCode,
)
from .fields import FieldDescriptor
from .modules import (
    Submodule,
    free_rank,
    hom_space,
    is_free,
    length,
    matlis_dual,
    minimal_generators_count,
    socle,
    span_closure,
    type_of,
)
from .polynomials import TrivariatePoly
from .rings import (
    IdealizationDesc,
    IntegerChainDesc,
    MonomialAlgebraDesc,
    construct_ring,
    is_frobenius,
    monomial_algebra,
    nagata_idealization,
    ring_invariants,
    socle_generator,
)

__version__ = "0.1.0"
