"""Self-intersection numbers of curves on the punctured torus and the pair of
pants, computed from reduced cyclic words in a, b, A, B."""
from .census import (
    SiHistogram,
    census_table,
    emit_table,
    enumerate_words,
    pants_extremes,
    resolve_pants_order,
    si_histogram,
    words_with_si,
)
from .errors import (
    CapExceeded,
    NonPrimitiveInput,
    NotCyclicallyReduced,
    PurePower,
    SelfIntError,
    UnvalidatedLength,
    WordError,
)
from .extremal import (
    bound_report,
    closed_form_si,
    count_maximal,
    count_submaximal,
    max_si,
    maximal_words,
    min_length_for_si,
    submaximal_words,
)
from .linking import (
    PANTS,
    PANTS_ALT,
    TORUS,
    SurfaceOrder,
    classify_pair,
    exact_si,
    intersection_number,
    linked_pairs,
    multiword_si,
    self_intersection,
    si_result,
)
from .surgery import (
    find_opposite_corner_pairs,
    reduce_to_two_blockpairs,
    surgery_merge,
    surgery_reversed,
    surgery_same,
)
from .words import (
    CyclicWord,
    MultiWord,
    block_decomposition,
    invert,
    is_primitive,
    is_pure_power,
    parse_word,
    power_decomposition,
)

__version__ = "0.1.0"

__all__ = [
    "CapExceeded",
    "CyclicWord",
    "MultiWord",
    "NonPrimitiveInput",
    "NotCyclicallyReduced",
    "PANTS",
    "PANTS_ALT",
    "PurePower",
    "SelfIntError",
    "SiHistogram",
    "SurfaceOrder",
    "TORUS",
    "UnvalidatedLength",
    "WordError",
    "block_decomposition",
    "bound_report",
    "census_table",
    "classify_pair",
    "closed_form_si",
    "count_maximal",
    "count_submaximal",
    "emit_table",
    "enumerate_words",
    "exact_si",
    "find_opposite_corner_pairs",
    "intersection_number",
    "invert",
    "is_primitive",
    "is_pure_power",
    "linked_pairs",
    "max_si",
    "maximal_words",
    "min_length_for_si",
    "multiword_si",
    "pants_extremes",
    "parse_word",
    "power_decomposition",
    "reduce_to_two_blockpairs",
    "resolve_pants_order",
    "self_intersection",
    "si_histogram",
    "si_result",
    "submaximal_words",
    "surgery_merge",
    "surgery_reversed",
    "surgery_same",
    "words_with_si",
]
