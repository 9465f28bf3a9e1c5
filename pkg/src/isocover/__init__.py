"""Isometric edge covers of subdivided walls and other graphs, with verifiers."""
from .constructions import (
    ApexSpec, CoverCertificate, Part, build_from, build_three_cover_wall,
    build_tree_cover, build_two_cover,
)
from .errors import CertificationError, DomainError, InputError, SizeLimitError
from .graph import (
    Graph, all_pairs_distances, complete, cycle, distance, grid, induced_subgraph,
    is_connected, is_tree, max_degree, path, petersen, radius, star, subdivide_all,
    subdivide_edge, subdivided_star, wall,
)
from .incidence import IncidenceColoring, greedy_coloring, incidences, is_proper, wall_3_coloring
from .kernels import BACKEND
from .labels import Apex, Original, Subdiv
from .verifiers import verify_certificate
from .widths import exact_pathwidth, exact_treedepth, exact_treewidth

__version__ = "0.1.0"
