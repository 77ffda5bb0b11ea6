"""Exact connectivity parameters along the chain graph -> alternating matrix
space -> alternating bilinear map -> finite p-group of class 2 and exponent p.

Everything is dense numpy over odd prime fields, desk scale by design: the
solvers carry explicit size guards and every fast path has a brute-force
oracle next to it.
"""

from .altspace import (
    AltMatrixSpace,
    GuardExceeded,
    LambdaResult,
    OrthWitness,
    delta_space,
    is_fully_connected,
    is_orth_decomposable,
    kappa_gt_lambda_instance,
    kappa_space,
    lambda_space,
    space_from_graph,
    space_from_json,
    space_to_json,
)
from .bilinear import (
    AltBilinearMap,
    is_map_decomposable,
    kappa_map,
    lambda_map,
    map_from_json,
    map_from_space,
    map_to_json,
    quotient_map,
    restrict_map,
)
from .gf import Subspace, field
from .graphs import (
    Graph,
    complete_graph,
    cycle_graph,
    edge_connectivity,
    min_degree,
    parse_graph,
    path_graph,
    star_graph,
    vertex_connectivity,
)
from .group import (
    BaerGroup,
    GroupElement,
    baer_group,
    commutator_map,
    delta_group,
    group_from_graph,
    group_from_json,
    group_to_json,
    is_centrally_decomposable,
    kappa_group,
    lambda_group,
)
from .harness import VerifyConfig, VerifyReport, run_verify

__version__ = "0.1.0"

__all__ = [
    "AltBilinearMap",
    "AltMatrixSpace",
    "BaerGroup",
    "Graph",
    "GroupElement",
    "GuardExceeded",
    "LambdaResult",
    "OrthWitness",
    "Subspace",
    "VerifyConfig",
    "VerifyReport",
    "baer_group",
    "commutator_map",
    "complete_graph",
    "cycle_graph",
    "delta_group",
    "delta_space",
    "edge_connectivity",
    "field",
    "group_from_graph",
    "group_from_json",
    "group_to_json",
    "is_centrally_decomposable",
    "is_fully_connected",
    "is_map_decomposable",
    "is_orth_decomposable",
    "kappa_group",
    "kappa_gt_lambda_instance",
    "kappa_map",
    "kappa_space",
    "lambda_group",
    "lambda_map",
    "lambda_space",
    "map_from_json",
    "map_from_space",
    "map_to_json",
    "min_degree",
    "parse_graph",
    "path_graph",
    "quotient_map",
    "restrict_map",
    "run_verify",
    "space_from_graph",
    "space_from_json",
    "space_to_json",
    "star_graph",
    "vertex_connectivity",
]
