"""Exact computations for relative Rota-Baxter Lie algebras and their cohomology over the rationals."""

from .cochains import DEFAULT_BUDGET, BudgetExceeded
from .cohomology import (
    Cochain,
    CochainScheme,
    CohomologyReport,
    LESReport,
    adjoint_cohomology_dims,
    adjoint_complex_matrix,
    coboundary_matrix,
    cochain_dim,
    cohomologous,
    cohomology_dims,
    delta_matrix,
    derivation_basis,
    hT_matrix,
    is_coboundary,
    is_cocycle,
    les_report,
    partial_matrix,
    prelie_coboundary,
    rb_coboundary_matrix,
    rb_cohomology_dims,
    rb_derivation_basis,
    rb_embedding,
    rb_embedding_check,
    rb_scheme,
    rrb_semidirect_embedding,
    rrb_semidirect_embedding_check,
    scheme,
    xi_commutes,
    xi_matrix,
)
from .extensions import (
    AbelianExtension,
    AbelianExtensionRB,
    CocycleError,
    ExtensionIsomorphism,
    IsomorphismError,
    SectionError,
    TwoCocycle,
    TwoCocycleRB,
    canonical_section,
    canonical_section_rb,
    check_extension,
    check_extension_rb,
    cocycle_from_extension,
    cocycle_from_extension_rb,
    extension_from_cocycle,
    extension_from_cocycle_rb,
    induced_coeff_rep_from_extension,
    induced_rep_from_extension_rb,
    iso_from_coboundary,
    iso_from_coboundary_rb,
    verify_isomorphism,
)
from .lie import LieAlgebra, LinearRep, PreLieAlgebra, PreLieRep, adjoint_rep, dual_rep
from .lie2 import (
    SkeletalRB2,
    SkeletalRRB2,
    check_skeletal_rb2,
    check_skeletal_rrb2,
    cocycle_to_rb2,
    cocycle_to_rrb2,
    rb2_to_3cocycle,
    rrb2_to_3cocycle,
)
from .linalg import Matrix, Subspace, image, kernel, rank, solve
from .report import AxiomError, ValidationReport
from .structures import (
    RBAlgebra,
    RBRepresentation,
    RRBAlgebra,
    RRBRepresentation,
    adjoint_rb_rep,
    adjoint_rrb_rep,
    check_rb,
    check_rb_representation,
    check_rrb,
    check_rrb_representation,
    coadjoint_rb_rep,
    coadjoint_rrb_rep,
    dual_rb_rep,
    dual_rrb_rep,
    semidirect_rb,
    semidirect_rrb,
)
