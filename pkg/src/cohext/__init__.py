"""Invariant weak-order extension solver.

Decides whether a finite data set of rankings, invariant under a monoid of
window transformations, extends to an invariant weak order, and computes the
complete set of forced out-of-sample predictions, certified against a
brute-force oracle.
"""

from .closure import (
    KERNEL,
    RelationState,
    is_consistent,
    novel_pairs,
    saturate,
    seed,
)
from .model import (
    Element,
    Generator,
    Scenario,
    ScenarioError,
    Word,
    apply_word,
    check_commutativity,
    load_scenario,
    save_scenario,
    scenario_from_dict,
    scenario_to_dict,
)
from .oracle import (
    CapExceededError,
    NoExtensionError,
    enumerate_weak_orders,
    oracle_extensions,
    oracle_forced_set,
    ordered_bell,
)
from .solver import (
    ExtensionResult,
    PairRelatedError,
    PairVerdict,
    UnsatScenarioError,
    Verdict,
    classify_pair,
    complete_extension,
    forced_set_exact,
    forced_state,
    verify_extension,
)

__version__ = "0.1.0"

__all__ = [
    "KERNEL",
    "RelationState",
    "is_consistent",
    "novel_pairs",
    "saturate",
    "seed",
    "Element",
    "Generator",
    "Scenario",
    "ScenarioError",
    "Word",
    "apply_word",
    "check_commutativity",
    "load_scenario",
    "save_scenario",
    "scenario_from_dict",
    "scenario_to_dict",
    "CapExceededError",
    "NoExtensionError",
    "enumerate_weak_orders",
    "oracle_extensions",
    "oracle_forced_set",
    "ordered_bell",
    "ExtensionResult",
    "PairRelatedError",
    "PairVerdict",
    "UnsatScenarioError",
    "Verdict",
    "classify_pair",
    "complete_extension",
    "forced_set_exact",
    "forced_state",
    "verify_extension",
    "__version__",
]
