"""Forts, zero forcing, fort-matroid compatibility and exact null vectors of graph matrices."""

from .construct import (ConstructionSpec, Obstruction, SapResult, barbell_partition, build_barbell_matrix,
                        build_csym_disjoint, build_msym_disjoint, check_barbell, forced_zero_entries,
                        sap_check, sap_identities)
from .exact import (NullBasis, RationalMatrix, all_null_supports, circuit_vectors, circuits_by_rank, in_csym,
                    in_msym, laplacian, min_null_supports, nullity, nullspace, random_csym, random_msym, rank,
                    special_null_basis, verify_nullity_tau, verify_support_fort)
from .family import FortCollection
from .flows import Bridge, CrossGraph, FlowAssignment, bridge_forced_zero, cross_bipartite, \
    enumerate_simple_cycles, zero_sum_flow
from .forcing import ColoringState, forcing_closure, is_zfs, replay_forces, zero_forcing_number
from .forts import CapExceeded, all_forts, fort_number, is_fort, minimal_forts, separated
from .graph import (Graph, bridges, components, complete, complete_multipartite, corona_k1, cycle,
                    disjoint_union, empty, encode_graph6, generate, induced_subgraph, is_bipartite, parse_graph6,
                    path, petersen)
from .matroid import (BoundChain, Budget, BudgetExhausted, IncompatibleFamilyError, MatroidView,
                      NonUniqueFortError, NotMinimumError, NotTransversalError, YResult, bound_chain,
                      check_circuit_axioms, compatibility, embed_matroid, find_compatible_family,
                      fundamental_forts, is_compatible, petersen_incompatibility_audit, y_number)
from .transversal import TransversalResult, min_transversal, tau

__version__ = "0.1.0"
