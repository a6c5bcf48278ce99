"""R degrees, R indices and classical degree-based topological indices."""

from ._core import (
    Graph,
    RDegreeError,
    abc_index,
    batch_csv,
    chi_index,
    closed_form,
    full_report,
    ga_index,
    generate_family,
    h_index,
    is_connected,
    parse_edge_list,
    parse_graph6,
    r1_index,
    r2_index,
    r3_index,
    r_degrees,
    random_connected,
    verify,
    write_edge_list,
    write_graph6,
)

__all__ = [name for name in dir() if not name.startswith("_")]
