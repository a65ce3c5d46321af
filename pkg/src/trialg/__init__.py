"""Exact structure-constant toolkit for triassociative algebras.

Validation of the eleven defining identities, derived ideals and centers,
second cohomology with trivial coefficients, multipliers, covers, the
stable center, and machine verification of the low-degree exact sequences.
All arithmetic is exact (rationals or a prime field); every subspace is
canonical, so equality tests are exact as well.
"""

from .algebra import (
    AlgSubspace,
    AxiomReport,
    AxiomViolation,
    DASHV,
    IDENTITIES,
    InvalidAlgebraError,
    MalformedAlgebraError,
    NotAnIdealError,
    OPS,
    PERP,
    QuotientAlgebra,
    TriAlgebra,
    VDASH,
    change_basis,
    check_dim_bounds,
    dimension_bound_table,
    hom_to_field,
    identity_str,
    is_ideal,
    product_subspace,
    quotient_algebra,
)
from .algfile import AlgebraFileError, emit, load, parse, save
from .cohomology import (
    CochainTriple,
    CohomologyResult,
    NotACocycleError,
    NotASectionError,
    b2_space,
    cocycle_defects,
    h2,
    is_cohomologous,
    section_cocycle,
    z2_space,
)
from .extensions import (
    CentralExtension,
    CoverResult,
    StemImageReport,
    build_central_extension,
    cover,
    cover_fingerprint,
    extension_algebra,
    is_unicentral,
    stem_center_image_check,
    z_star,
)
from .fields import GF, QQ, FieldMismatchError, PrimeField, RationalField, parse_field
from .generators import (
    abelian,
    cover_abelian,
    dim2_single_product,
    random_extension,
    random_valid_algebra,
    unital_dim1,
)
from .linalg import (
    ContainmentError,
    Matrix,
    Subspace,
    inverse,
    kernel,
    rank,
    rref,
    solve_right,
)
from .sequences import (
    NotCentralIdealError,
    delta_map,
    inf1,
    inf2,
    res,
    stallings_check,
    tra,
    tra_image_check,
    unicentrality_criteria,
    verify_five_term,
    verify_inf_delta,
)

__version__ = "0.1.0"
