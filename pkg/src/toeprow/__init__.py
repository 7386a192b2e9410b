"""Row graphs of (0,1)-Toeplitz matrices."""

from .core import (
    BooleanMatrix,
    ToeplitzSpec,
    build_matrix,
    col_sum,
    digraph_cycle_lengths,
    in_bounded_family,
    is_digraph_acyclic,
    matrix_from_lines,
    matrix_to_lines,
    max_row_sum,
    normalize,
    parse_spec,
    row_sum,
    spec_from_json,
    spec_to_json_str,
)
from .rowgraph import (
    ComponentKind,
    ComponentSummary,
    Graph,
    StructureSummary,
    components_classify,
    encode_components,
    gamma_envelope,
    graph_from_json,
    graph_to_dot,
    graph_to_json,
    graph_to_json_str,
    has_triangle,
    rowgraph_bounded,
    rowgraph_closed_form,
    rowgraph_oracle,
    symmetric_ones_count,
    symmetric_toeplitz_graph,
)
from .structure import (
    BoundaryStructure,
    CycleVerdict,
    ModClass,
    ShiftedWalk,
    TrianglePrediction,
    boundary_family_structure,
    connected_triangle_free_check,
    cycle_verdict_two_one,
    is_single_cycle,
    kl_cycle_witness,
    make_cycle_component_spec,
    make_cycle_spec,
    make_path_spec,
    mod_class_decomposition,
    scarcity_check,
    shift_walk,
    triangle_predicate,
)
from .explorer import (
    CatalogRow,
    Counterexample,
    TheoremReport,
    catalog,
    catalog_to_csv,
    count_specs,
    enumerate_specs,
    list_theorems,
    report_to_json,
    report_to_text,
    search_two_cycle_lengths,
    verify,
)

__version__ = "0.1.0"
