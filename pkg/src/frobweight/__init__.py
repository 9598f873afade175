"""Finite rings, Frobenius bimodules, character-dual partitions, and
exhaustive MacWilliams extension checks, all at desk scale with exact
cyclotomic arithmetic."""

from .abelian import (
    AbelianDecomp,
    Character,
    all_characters,
    all_subgroups,
    char_eval_exp,
    char_value,
    character_annihilator,
    character_from_index,
    decode_tuple,
    decompose,
    dual_decomp,
    encode_tuple,
    power_decomp,
    subgroup_annihilator,
)
from .config import DEFAULT_CAPS, DEFAULT_SEED, Caps
from .cyclotomic import CycInt, root_of_unity_sum
from .errors import (
    AxiomViolation,
    CapExceeded,
    DimensionMismatch,
    FrobweightError,
    NonIntegerSum,
    NoLocalRepresentation,
    NotAGroup,
    NotASubmodule,
    NotFrobenius,
    NotIrreducible,
    SingularSystem,
    UniverseMismatch,
)
from .extension import (
    Code,
    LinMap,
    a_r_matrices,
    enumerate_preserving_maps,
    find_global_matrix,
    linear_map,
    local_matrices,
    map_matrix_agrees,
    span_code,
    vec_add,
    vec_scale,
    verify_linear,
    witness_index,
    zero_code,
)
from .finring import RingSpec, RingTable, build_ring
from .frobenius import (
    Bimodule,
    GenChar,
    build_bimodule,
    default_generating_character,
    double_annihilator_check,
    find_generating_characters,
    is_frobenius_ring,
    pairing_maps,
    rhat_bimodule,
    ring_bimodule,
    sigma_tau_g,
    theta_check,
)
from .matrices import (
    FamilySpec,
    MatrixR,
    enumerate_family,
    group_closure,
    identity_matrix,
    is_invertible,
    mat_from_rows,
    mat_mul,
    matrix_inverse,
    transpose,
    vec_mat,
)
from .partitions import (
    ActionSpec,
    Partition,
    apply_right,
    apply_transpose,
    bidual_partition,
    chi_bidual,
    chi_dual,
    dual_partition,
    is_reflexive,
    is_reflexive_group,
    orbit_partition,
    verify_orbit_duality,
)
from .scenarios import (
    RING_SPECS,
    SCENARIOS,
    corpus_bimodules,
    corpus_codes,
    corpus_ring,
    run_scenario,
    verify_all,
)
from .weights import (
    LeftModule,
    additive_lift,
    cyclic_submodule,
    free_left_module,
    homog_axioms_solve,
    homog_formula,
    homog_formula_left,
    homog_weight_table,
    left_module,
    module_of_bimodule,
    support,
    swc,
    unit_orbit_reps,
    wt_hamming,
    wt_n,
    wt_rt,
)

__version__ = "0.1.0"
