"""Additive self-dual GF(4) codes from circulant graphs.

Construct circulant graph codes from generator vectors, compute exact
minimum distances and weight enumerators, verify self-duality, and sweep
the symmetric-vector space for strong codes.
"""

from .analysis import (
    BoundsTable,
    Classification,
    DistanceResult,
    MacWilliamsViolation,
    SelfDualReport,
    WeightEnumerator,
    check_self_dual,
    classify,
    gf2_row_rank,
    macwilliams_check,
    min_distance,
    weight_enumerator,
)
from .circulant import (
    CirculantCode,
    GeneratorVector,
    candidate_vector,
    dense_family_vector,
    expand_generator_matrix,
    parse_generator_vector,
    to_dot,
    validate_circulant_symmetry,
)
from .errors import (
    CapacityError,
    Circ4Error,
    CostGuardError,
    DimensionMismatch,
    RankDeficiencyError,
    SymmetryError,
    VectorFormatError,
)
from .gf4 import (
    ELEMENTS,
    OMEGA,
    OMEGA2,
    ONE,
    ZERO,
    format_symbols,
    gf4_add,
    gf4_conj,
    gf4_mul,
    gf4_trace,
    herm_trace_ip,
    parse_symbols,
)
from .search import ReportRecord, analyze_vector, candidate_pipeline, sweep_symmetric
from .words import (
    BitplaneWord,
    decode_word,
    encode_word,
    rotate_word,
    word_add,
    word_distance,
    word_symplectic_ip,
    word_weight,
    zero_word,
)

__version__ = "0.1.0"
