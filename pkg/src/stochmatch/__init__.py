"""Bounded-degree subgraphs that preserve the expected maximum matching
size when every edge survives independently with probability p.

Core pieces: exact maximum matchings (blossom), maximum simple
b-matchings with duality certificates, iterated matching covers, the two
sparsifier constructions and their dispatcher, degree-cap decompositions
via edge coloring, Monte-Carlo and exact estimators of the expected
matching size, instance generators, and numeric checks of the analytic
bounds behind the guarantees.
"""

from .graph import (BMatching, DuplicateEdgeError, EdgeSet, Graph, GraphError,
                    InstanceTooLargeError, Matching, ParentMismatchError,
                    SelfLoopError, VertexRangeError, build_graph, degree,
                    is_b_matching, is_matching, max_degree, remove_edges,
                    subgraph_of, union)
from .matching import (MatchingResult, brute_force_maximum_matching,
                       maximum_matching)
from .bmatching import (BMatchingResult, DualWitness, brute_force_b_matching,
                        certify_optimal, check_b_matching_lemma, dual_value,
                        maximum_b_matching)
from .cover import MatchingCover, compute_rounds, matching_cover, residual_bound_check
from .coloring import EdgeColoring, decompose_into_matchings, vizing_color
from .augmenting import (AugmentingCensus, ThreePath, ThreePathSet, augment,
                         census, find_disjoint_three_paths,
                         sequential_matching_process)
from .simulate import (Estimate, RatioEstimate, estimate_expected_matching,
                       estimate_ratio, exact_expected_matching,
                       exact_expected_matching_many, realize, trial_rng)
from .sparsify import (SparsifierConfig, SparsifierOutput, sparsify_auto,
                       sparsify_large_p, sparsify_small_p)
from .instances import (HardInstanceSpec, complete_bipartite, complete_graph,
                        erdos_renyi, hard_b_matching_upper_bound, hard_instance,
                        hard_instance_metadata, load_edge_list, save_edge_list)
from . import bounds
from .verify import run_suite

__version__ = "0.1.0"

__all__ = [
    "BMatching", "BMatchingResult", "AugmentingCensus", "DualWitness",
    "DuplicateEdgeError", "EdgeColoring", "EdgeSet", "Estimate", "Graph",
    "GraphError", "HardInstanceSpec", "InstanceTooLargeError", "Matching",
    "MatchingCover", "MatchingResult", "ParentMismatchError", "RatioEstimate",
    "SelfLoopError", "SparsifierConfig", "SparsifierOutput", "ThreePath",
    "ThreePathSet", "VertexRangeError", "augment", "bounds", "build_graph",
    "brute_force_b_matching", "brute_force_maximum_matching", "census",
    "certify_optimal", "check_b_matching_lemma", "complete_bipartite",
    "complete_graph", "compute_rounds", "decompose_into_matchings", "degree",
    "dual_value", "erdos_renyi", "estimate_expected_matching", "estimate_ratio",
    "exact_expected_matching", "exact_expected_matching_many",
    "find_disjoint_three_paths", "hard_b_matching_upper_bound", "hard_instance",
    "hard_instance_metadata", "is_b_matching", "is_matching", "load_edge_list",
    "matching_cover", "max_degree", "maximum_b_matching", "maximum_matching",
    "realize", "remove_edges", "residual_bound_check", "run_suite",
    "save_edge_list", "sequential_matching_process", "sparsify_auto",
    "sparsify_large_p", "sparsify_small_p", "subgraph_of", "trial_rng",
    "union", "vizing_color",
]
