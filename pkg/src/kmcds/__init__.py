"""Minimum-weight k-connected m-dominating set toolkit.

A (k, m)-cds of a node-weighted graph is a node set whose induced
subgraph is k-connected and which m-dominates every outside node. This
package ships approximate solvers with per-stage guarantees, exact
brute-force oracles for small instances, independent feasibility
verifiers with path certificates, and seeded instance generators.
"""

from .augment import min_weight_k_paths, minimal_augmenting_forest
from .connectivity import (
    Certificate,
    ConnectivityViolation,
    DominationCheck,
    build_certificate,
    certificate_is_sound,
    check_cut_characterization,
    check_subpartition_characterization,
    domination_counts,
    find_k_connectivity_violation,
    is_k_T_connected,
    is_k_connected,
    is_k_in_connected_to_root,
    is_m_dominating,
    local_connectivity,
)
from .domset import coverage_potential, greedy_mds, greedy_mds_order, opt_mds_bruteforce
from .errors import InfeasibleError, InvariantViolationError, KmcdsError, ParseError
from .flow import SplitFlowNetwork
from .generators import gen_gnp, gen_unit_disk
from .graph import (
    Graph,
    Instance,
    attach_root,
    degree_stats,
    induced_subgraph,
    neighbors,
)
from .oracle import OracleResult, opt_kmcds
from .rooted import (
    GuaranteeInfo,
    RootedProblem,
    exact_backend,
    flow_union_backend,
    solve_rooted_edgecost,
    solve_rooted_nodeweight,
)
from .serialize import (
    dump_instance,
    dump_report,
    load_instance,
    read_instance,
    write_instance,
)
from .solver import (
    PrecheckResult,
    SolutionReport,
    SolverConfig,
    VerifyResult,
    precheck,
    solve_general,
    solve_guess_root,
    solve_unit_disk,
    verify_solution,
)

__version__ = "0.1.0"

__all__ = [
    "Certificate",
    "ConnectivityViolation",
    "DominationCheck",
    "Graph",
    "GuaranteeInfo",
    "InfeasibleError",
    "Instance",
    "InvariantViolationError",
    "KmcdsError",
    "OracleResult",
    "ParseError",
    "PrecheckResult",
    "RootedProblem",
    "SolutionReport",
    "SolverConfig",
    "SplitFlowNetwork",
    "VerifyResult",
    "attach_root",
    "build_certificate",
    "certificate_is_sound",
    "check_cut_characterization",
    "check_subpartition_characterization",
    "coverage_potential",
    "degree_stats",
    "domination_counts",
    "dump_instance",
    "dump_report",
    "exact_backend",
    "find_k_connectivity_violation",
    "flow_union_backend",
    "gen_gnp",
    "gen_unit_disk",
    "greedy_mds",
    "greedy_mds_order",
    "induced_subgraph",
    "is_k_T_connected",
    "is_k_connected",
    "is_k_in_connected_to_root",
    "is_m_dominating",
    "load_instance",
    "local_connectivity",
    "min_weight_k_paths",
    "minimal_augmenting_forest",
    "neighbors",
    "opt_kmcds",
    "opt_mds_bruteforce",
    "precheck",
    "read_instance",
    "solve_general",
    "solve_guess_root",
    "solve_rooted_edgecost",
    "solve_rooted_nodeweight",
    "solve_unit_disk",
    "verify_solution",
    "write_instance",
]
