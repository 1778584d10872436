"""Exact computation with line sets in finite classical rank-3 polar spaces."""

from .gf import field_make, field_for_order
from .linalg import Subspace, rref_canonicalize, intersect
from .spaces import (
    FAMILIES,
    REL_TAGS,
    FormSpec,
    PolarSpace,
    build_space,
    load_space,
    save_space,
)
from .schemetables import SchemeTables, make_tables, tables_for_space, verify_scheme
from .analysis import (
    LineSet,
    inner_distribution,
    dual_distribution,
    eigenspace_support,
    regular_set_check,
    divisibility_report,
    span_orthogonal_divisor,
    plane_profile,
    design_check,
)
from .constructions import (
    elliptic_ovoid,
    find_section,
    hexagon_lines,
    hyperplane_section_lines,
    hyperplane_sections,
    m_ovoid_lift,
    pencil_union,
    plane_lines,
    point_pencil,
    quadric_section,
    quadric_section_lines,
    srg_parameters,
    symplectic_spread_lines,
    two_weight_profile,
)
from .delsarte import delsarte_lp_bound
from .files import build_report, parse_lineset_file, parse_pointset_file, write_lineset
from .search import (
    disjoint_section_packing,
    enumerate_regular_sets,
    feasibility_probe,
    line_spread_search,
)

__all__ = [
    "FAMILIES",
    "REL_TAGS",
    "FormSpec",
    "PolarSpace",
    "SchemeTables",
    "Subspace",
    "LineSet",
    "build_space",
    "load_space",
    "save_space",
    "field_make",
    "field_for_order",
    "rref_canonicalize",
    "intersect",
    "make_tables",
    "tables_for_space",
    "verify_scheme",
    "inner_distribution",
    "dual_distribution",
    "eigenspace_support",
    "regular_set_check",
    "divisibility_report",
    "span_orthogonal_divisor",
    "plane_profile",
    "design_check",
    "delsarte_lp_bound",
    "enumerate_regular_sets",
    "feasibility_probe",
    "line_spread_search",
    "disjoint_section_packing",
    "plane_lines",
    "point_pencil",
    "hyperplane_sections",
    "find_section",
    "hyperplane_section_lines",
    "quadric_section",
    "quadric_section_lines",
    "elliptic_ovoid",
    "pencil_union",
    "m_ovoid_lift",
    "symplectic_spread_lines",
    "hexagon_lines",
    "two_weight_profile",
    "srg_parameters",
    "build_report",
    "write_lineset",
    "parse_lineset_file",
    "parse_pointset_file",
]
