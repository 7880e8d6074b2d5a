from . import (
    analysis,
    contraction,
    errors,
    fundamental,
    lie,
    linalg,
    nlie,
    recheck,
    serial,
    tensor,
)
from .analysis import (
    Claim,
    StructureReport,
    certify_central_extension,
    compare_report,
    graded_structure_report,
    is_central_subspace,
    match_structure_constants,
    quotient_lie,
    semidirect_report_fa,
)
from .contraction import (
    Grading,
    check_ww_grading,
    contract_fa,
    grading_from_splitting,
    grading_from_words,
    iw_contract_lie,
    weight_indices,
    ww_contract_lie,
)
from .errors import AlgebraError, InputError, PreconditionError
from .fundamental import (
    FundamentalObject,
    ad_matrix,
    check_derivation_identity,
    dot,
    ker_ad,
    wedge_basis,
)
from .lie import (
    Fingerprint,
    InducedLie,
    LieAlgebra,
    abelian_lie,
    center,
    change_basis_lie,
    check_block_antisymmetry,
    derived_series,
    direct_sum,
    fingerprint,
    induce,
    is_lie_subalgebra,
    killing_form,
    killing_rank,
    labelled_constants,
    lower_central_series,
    new_lie,
    verify_ji,
)
from .linalg import Matrix, Subspace, kernel, rref, solve_in_span
from .nlie import (
    FIReport,
    FIStatus,
    NLieAlgebra,
    Splitting,
    abelian,
    bracket,
    change_basis_fa,
    fi_defect,
    is_abelian_fa,
    is_ideal,
    is_subalgebra,
    new_unchecked,
    simple_a,
    verify,
    verify_fi,
    verify_fi_antisymmetrized,
)
from .tensor import AntisymTensor
