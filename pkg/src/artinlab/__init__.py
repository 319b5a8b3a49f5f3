"""Exact computations with Artinian graded quotients of polynomial rings:
Hilbert functions, socles, colon ideals, inverse systems and trace ideals,
Gorenstein colength bounds and witnesses, linkage of powers, and the
two-variable monomial calculus of integral closures and multiplicities.
"""

from .errors import (
    ArtinlabError,
    DegenerateWitnessError,
    DegreeBoundError,
    DimensionError,
    FieldMismatchError,
    InhomogeneousError,
    NotPrimaryError,
    ParseError,
    ReductionError,
    RingMismatchError,
    TruncationError,
    VerificationError,
)
from .field import GF, QQ, Field, parse_field
from .linalg import DenseMatrix, Span, kernel_basis, rank, row_space_membership
from .ring import PolyRing, Polynomial
from .ideal import (
    Ideal,
    QuotientView,
    colon,
    ideal_equal,
    ideal_power,
    ideal_product,
    ideal_slice,
    ideal_sum,
    length,
    maximal_ideal,
    membership,
    min_generators,
    monomial_ideal,
    order,
    power_of_maximal,
    quotient_view,
    socle,
)
from .gorenstein import (
    colength_bounds,
    hom_to_ring,
    inverse_system,
    is_compressed,
    is_gorenstein,
    rrr_min_degree,
    trace_ideal,
    witness_ideal,
)
from .linkage import (
    SopContext,
    chain_to_ci,
    make_link,
    power_link_exponent,
    sop_verify,
    verify_p2,
)
from .codim2 import (
    MonomialIdeal2,
    base_point_tree,
    hd_length,
    integral_closure,
    invariants,
    minimal_reduction,
    multiplicity,
    newton_polygon,
    theorem_t_report,
)
from .parse import parse_ideal, parse_polynomial

__version__ = "0.1.0"
