"""Triangle-free d-degenerate r-uniform hypergraphs with chromatic number d+1."""

from ._hypercol import (  # noqa: F401
    BoundExceeded,
    BudgetExceeded,
    DecodeError,
    Hypergraph,
    InputError,
    ParseError,
    SizeRefused,
    build,
    build_base,
    build_with_provenance,
    chromatic_number,
    complete_uniform,
    decode,
    degeneracy,
    encode_k_coloring,
    find_triangle,
    greedy_color,
    is_d_degenerate,
    is_proper,
    k_colorable,
    min_color_class_size,
    parse_solver_output,
    predict_sizes,
)

__version__ = "0.1.0"
