"""Forcing-pair closure engine.

A ``RelationState`` carries two boolean layers over the window: W("x is at
least as good as y is forced in every admissible extension") and D ("x is
strictly better than y is forced").  ``saturate`` drives the state to the
least fixpoint of:

  T1  W(x,y) & W(y,z)            =>  W(x,z)
  T2  D(x,y) & W(y,z)            =>  D(x,z)   (and the W&D mirror)
  C1  W(x,y)                     =>  W(g(x),g(y))   wherever both images defined
      D(x,y)                     =>  D(g(x),g(y))
  C2  W(g(x),g(y))               =>  W(x,y)   only in strong mode
      D(g(x),g(y))               =>  D(x,y)

All rules are monotone, so any fair application order reaches the same
fixpoint.  Inconsistency (a ranking cycle containing a strict step) shows up
as a forced strict self-loop: some diagonal entry of D.

The inner fixpoint runs in the compiled kernel when available, otherwise in
a numpy fallback; set ``COHEXT_PURE_PYTHON=1`` to force the fallback.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

import numpy as np

from .model import Scenario

if os.environ.get("COHEXT_PURE_PYTHON"):
    from ._satpure import saturate_inplace as _kernel

    KERNEL = "python"
else:
    try:
        from ._satcore import saturate_inplace as _kernel  # type: ignore[no-redef]

        KERNEL = "compiled"
    except ImportError:  # pragma: no cover - depends on build environment
        from ._satpure import saturate_inplace as _kernel  # type: ignore[no-redef]

        KERNEL = "python"


@dataclass(eq=False)
class RelationState:
    """Two n x n boolean layers: weak forcing W and strict forcing D."""

    W: np.ndarray
    D: np.ndarray

    @property
    def n(self) -> int:
        return self.W.shape[0]

    @classmethod
    def empty(cls, n: int) -> "RelationState":
        W = np.zeros((n, n), dtype=bool)
        np.fill_diagonal(W, True)
        return cls(W=W, D=np.zeros((n, n), dtype=bool))

    def copy(self) -> "RelationState":
        return RelationState(W=self.W.copy(), D=self.D.copy())

    def equals(self, other: "RelationState") -> bool:
        return bool(np.array_equal(self.W, other.W) and np.array_equal(self.D, other.D))

    def issubset(self, other: "RelationState") -> bool:
        return bool((self.W <= other.W).all() and (self.D <= other.D).all())


def seed(s: Scenario) -> RelationState:
    """Initial state: reflexive diagonal plus the scenario's base pairs."""
    state = RelationState.empty(s.n)
    for x, y in s.base_weak:
        state.W[x, y] = True
    for x, y in s.base_strict:
        state.W[x, y] = True
        state.D[x, y] = True
    return state


def saturate(
    state: RelationState,
    s: Scenario,
    strong: bool = False,
    *,
    transitivity: bool = True,
    coherency: bool = True,
) -> RelationState:
    """Close ``state`` under the selected rules, in place; returns the state.

    ``strong`` (rule C2) is sound only for scenarios whose action commutes;
    callers gate it on ``s.commutative``.
    """
    _kernel(
        state.W.view(np.uint8),
        state.D.view(np.uint8),
        s.tables(),
        transitivity,
        coherency,
        strong,
    )
    return state


def is_consistent(state: RelationState) -> bool:
    """No element is forced strictly above itself."""
    return not bool(state.D.diagonal().any())


def inconsistency_witness(state: RelationState) -> int | None:
    """Smallest element id with a forced strict self-loop, if any."""
    diag = np.nonzero(state.D.diagonal())[0]
    return int(diag[0]) if len(diag) else None


def novel_pairs(state_full: RelationState, s: Scenario, strong: bool | None = None) -> set[tuple[int, int]]:
    """Forced ordered pairs beyond both transitivity-alone and coherency-alone.

    ``state_full`` is the exact forced set (see the solver); a pair counts as
    novel when neither the transitivity-only nor the coherency-only closure of
    the seed already forces it (at the same weak/strict level).
    """
    if strong is None:
        strong = s.commutative
    t_only = saturate(seed(s), s, strong, coherency=False)
    c_only = saturate(seed(s), s, strong, transitivity=False)
    novel: set[tuple[int, int]] = set()
    for x in range(s.n):
        for y in range(s.n):
            if x == y:
                continue
            if state_full.D[x, y] and not t_only.D[x, y] and not c_only.D[x, y]:
                novel.add((x, y))
            elif state_full.W[x, y] and not t_only.W[x, y] and not c_only.W[x, y]:
                novel.add((x, y))
    return novel
