"""Max k-cut games on weighted undirected graphs: exact payoffs and cut
values, equilibrium checking (Nash, q-strong, local strong, strong),
coalition-deviation analysis, improvement dynamics, and a verification
harness replaying the known structural results on exhaustive corpora."""

from .deviation import (
    DeviationWitness,
    JointMove,
    apply_move,
    find_strong_improvement,
    is_minimal,
    is_strong_improvement,
)
from .dynamics import DynamicsTrace, Policy, run, step
from .equilibrium import (
    EquilibriumReport,
    classify,
    degree_condition_guarantees_se,
    girth_guarantee,
    is_local_strong,
    is_nash,
    is_q_strong,
    is_strong,
)
from .game import (
    GameSpec,
    cost,
    cut_value,
    local_search_coloring,
    optimal_coloring_exact,
    social_welfare,
    utility,
)
from .graphs import Graph, enumerate_cliques, enumerate_coalitions, enumerate_x_local_coalitions

__version__ = "0.1.0"

__all__ = [
    "DeviationWitness",
    "DynamicsTrace",
    "EquilibriumReport",
    "GameSpec",
    "Graph",
    "JointMove",
    "Policy",
    "apply_move",
    "classify",
    "cost",
    "cut_value",
    "degree_condition_guarantees_se",
    "enumerate_cliques",
    "enumerate_coalitions",
    "enumerate_x_local_coalitions",
    "find_strong_improvement",
    "girth_guarantee",
    "is_local_strong",
    "is_minimal",
    "is_nash",
    "is_q_strong",
    "is_strong",
    "is_strong_improvement",
    "local_search_coloring",
    "optimal_coloring_exact",
    "run",
    "social_welfare",
    "step",
    "utility",
]
