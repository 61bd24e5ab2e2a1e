"""Independence and criticality invariants of finite simple graphs.

Exact enumeration oracles, matching-based polynomial algorithms for the
critical difference and maximum critical independent sets, the
independence and Gallai-Edmonds decompositions, and a registry of
machine-checkable structure theorems evaluated over graph corpora.
"""

from .decomposition import (GallaiEdmondsParts, LarsonParts, deficiency,
                            gallai_edmonds, is_2_bicritical_fast,
                            is_almost_bipartite, is_koenig_egervary, larson)
from .errors import (CapExceededError, GraphInputError, HostMismatchError,
                     IndepLabError, InvariantViolationError, PartitionError)
from .exact import (CriticalityProfile, SetFamily, alpha, core, corona,
                    critical_profile, diadem, independent_sets,
                    is_2_bicritical_oracle, ker, nucleus, omega_family,
                    oracle_cap)
from .fast import (DoubleCover, critical_difference_fast, double_cover,
                   extract_critical_set, is_critical_vertex,
                   max_critical_independent_set_fast)
from .graph import (EdgeCut, Graph, VertexSet, build_graph, complete,
                    complete_bipartite, cycle, edges_between, empty_graph,
                    enumerate_labeled_graphs, figure1, gnp, gnp_stream,
                    induced_subgraph, is_bipartite, neighborhood, path, star)
from .graph6 import encode_graph6, parse_graph6
from .matching import (Matching, enumerate_maximum_matchings,
                       matched_image, matching_number, max_bipartite_matching,
                       max_matching, saturating_matching_exists)
from .theorems import (CHECK_IDS, RegistryReport, TheoremVerdict, check_all,
                       evaluate, scan_graph6)

__version__ = "0.1.0"
