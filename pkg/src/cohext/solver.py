"""Extension solver: pair classification, completion search, exact forcing.

Completion works by propagate-and-backtrack: pick the first pair the current
state leaves open, try the three ways of settling it (first strict, reversed
strict, indifferent), saturate after each assertion, and prune any branch
whose state develops a strict self-loop.  Pair order is lexicographic
(min id, max id) and option order is fixed, so results are deterministic.

A FORCED verdict on the window is sound for the full (possibly infinite)
problem: any cycle exhibited inside the window exists in the full space.  A
FREE verdict is only free-within-window; a larger window may still force the
pair.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

import numpy as np

from .closure import (
    RelationState,
    inconsistency_witness,
    is_consistent,
    saturate,
    seed,
)
from .model import Scenario


class PairRelatedError(ValueError):
    """classify_pair was asked about a pair the state already relates."""


class UnsatScenarioError(RuntimeError):
    """Exact forcing was requested for a scenario with no coherent extension."""


class Verdict(enum.Enum):
    FORCED_STRICT = "forced-strict"
    FORCED_INDIFF = "forced-indifferent"
    FREE = "free"
    LOCALLY_UNEXTENDABLE = "locally-unextendable"


# option order for the pair (w, z) with w the smaller id
OPTIONS = ("w>z", "z>w", "w~z")


@dataclass(frozen=True)
class PairVerdict:
    """Outcome of testing the three ways of settling an unordered pair.

    ``winner`` is the ordered (better, worse) pair for FORCED_STRICT, else
    None.  ``eliminated`` records, per eliminated option, the element whose
    forced strict self-loop closed it.
    """

    pair: tuple[int, int]
    status: Verdict
    winner: tuple[int, int] | None = None
    eliminated: tuple[tuple[str, int], ...] = ()

    @property
    def survivors(self) -> tuple[str, ...]:
        dead = {name for name, _ in self.eliminated}
        return tuple(o for o in OPTIONS if o not in dead)


@dataclass(frozen=True)
class ExtensionResult:
    """SAT with a complete saturated state, or UNSAT with a pair certificate.

    ``dead_pairs`` lists the pairs at which all three options died by
    immediate saturation during the failed search (empty for SAT).
    """

    sat: bool
    state: RelationState | None = None
    dead_pairs: frozenset[tuple[int, int]] = frozenset()


def _resolve_strong(s: Scenario, strong: bool | None) -> bool:
    # backward inference is only sound for commuting actions
    return s.commutative if strong is None else strong


def _assert_option(state: RelationState, w: int, z: int, option: str) -> None:
    if option == "w>z":
        state.W[w, z] = True
        state.D[w, z] = True
    elif option == "z>w":
        state.W[z, w] = True
        state.D[z, w] = True
    elif option == "w~z":
        state.W[w, z] = True
        state.W[z, w] = True
    else:
        raise ValueError(f"unknown option {option!r}")


def _verdict_from_survivors(
    pair: tuple[int, int], survivors: list[str], eliminated: list[tuple[str, int]]
) -> PairVerdict:
    w, z = pair
    elim = tuple(eliminated)
    if len(survivors) == 0:
        return PairVerdict(pair, Verdict.LOCALLY_UNEXTENDABLE, eliminated=elim)
    if len(survivors) >= 2:
        return PairVerdict(pair, Verdict.FREE, eliminated=elim)
    only = survivors[0]
    if only == "w~z":
        return PairVerdict(pair, Verdict.FORCED_INDIFF, eliminated=elim)
    winner = (w, z) if only == "w>z" else (z, w)
    return PairVerdict(pair, Verdict.FORCED_STRICT, winner=winner, eliminated=elim)


def classify_pair(
    state: RelationState, s: Scenario, w: int, z: int, strong: bool | None = None
) -> PairVerdict:
    """Three-option analysis of an unrelated pair against a saturated state.

    Each option is asserted into a copy, saturated, and kept iff no strict
    self-loop appears.  This is a local (single-step) test; ``forced_set_exact``
    refines it by requiring global completability.
    """
    strong = _resolve_strong(s, strong)
    if state.W[w, z] or state.W[z, w]:
        raise PairRelatedError(
            f"pair ({w},{z}) already related: "
            f"W[{w},{z}]={bool(state.W[w, z])}, W[{z},{w}]={bool(state.W[z, w])}"
        )
    lo, hi = (w, z) if w < z else (z, w)
    survivors: list[str] = []
    eliminated: list[tuple[str, int]] = []
    for option in OPTIONS:
        trial = state.copy()
        _assert_option(trial, lo, hi, option)
        saturate(trial, s, strong)
        if is_consistent(trial):
            survivors.append(option)
        else:
            eliminated.append((option, inconsistency_witness(trial)))
    # verdicts are reported for the normalized (min, max) pair, so querying
    # (z, w) mirrors exactly
    return _verdict_from_survivors((lo, hi), survivors, eliminated)


def _first_open_pair(state: RelationState) -> tuple[int, int] | None:
    """First (x < y) pair, lexicographically, not yet settled strict-or-indifferent."""
    settled = state.D | state.D.T | (state.W & state.W.T)
    open_ = ~settled
    open_[np.tril_indices(state.n)] = False
    hits = np.argwhere(open_)
    if len(hits) == 0:
        return None
    return int(hits[0][0]), int(hits[0][1])


def _search(
    state: RelationState, s: Scenario, strong: bool, dead: set[tuple[int, int]]
) -> RelationState | None:
    pair = _first_open_pair(state)
    if pair is None:
        return state
    w, z = pair
    immediate_failures = 0
    for option in OPTIONS:
        trial = state.copy()
        _assert_option(trial, w, z, option)
        saturate(trial, s, strong)
        if not is_consistent(trial):
            immediate_failures += 1
            continue
        result = _search(trial, s, strong, dead)
        if result is not None:
            return result
    if immediate_failures == len(OPTIONS):
        # per-pair certificate: no way to settle this pair at all
        dead.add((w, z))
    return None


def complete_extension(s: Scenario, strong: bool | None = None) -> ExtensionResult:
    """Find a complete, transitive, coherent, consistent extension, or prove none exists on the window."""
    strong = _resolve_strong(s, strong)
    state = saturate(seed(s), s, strong)
    if not is_consistent(state):
        return ExtensionResult(sat=False)
    dead: set[tuple[int, int]] = set()
    final = _search(state, s, strong, dead)
    if final is None:
        return ExtensionResult(sat=False, dead_pairs=frozenset(dead))
    return ExtensionResult(sat=True, state=final)


def _realizes(state: RelationState, w: int, z: int, option: str) -> bool:
    """Does a settled complete state rank (w, z) the way ``option`` asks?"""
    if option == "w>z":
        return bool(state.W[w, z] and not state.W[z, w])
    if option == "z>w":
        return bool(state.W[z, w] and not state.W[w, z])
    return bool(state.W[w, z] and state.W[z, w])


def forced_set_exact(s: Scenario, strong: bool | None = None) -> dict[tuple[int, int], PairVerdict]:
    """Verdict for every unordered pair by global satisfiability of each option.

    An option survives iff some complete coherent extension of the seed
    realizes it.  Every complete extension found along the way is kept as a
    witness so later pairs can often be settled without a fresh search.
    """
    strong = _resolve_strong(s, strong)
    base = complete_extension(s, strong)
    if not base.sat:
        raise UnsatScenarioError(f"scenario {s.name!r} has no coherent extension on the window")
    witnesses: list[RelationState] = [base.state]
    root = saturate(seed(s), s, strong)
    verdicts: dict[tuple[int, int], PairVerdict] = {}
    for w in range(s.n):
        for z in range(w + 1, s.n):
            survivors: list[str] = []
            eliminated: list[tuple[str, int]] = []
            for option in OPTIONS:
                if any(_realizes(wit, w, z, option) for wit in witnesses):
                    survivors.append(option)
                    continue
                trial = root.copy()
                _assert_option(trial, w, z, option)
                saturate(trial, s, strong)
                if not is_consistent(trial):
                    eliminated.append((option, inconsistency_witness(trial)))
                    continue
                found = _search(trial, s, strong, set())
                if found is not None:
                    witnesses.append(found)
                    survivors.append(option)
                else:
                    # consistent locally but not completable anywhere
                    eliminated.append((option, -1))
            verdicts[(w, z)] = _verdict_from_survivors((w, z), survivors, eliminated)
    return verdicts


def forced_state(s: Scenario, verdicts: dict[tuple[int, int], PairVerdict], strong: bool | None = None) -> RelationState:
    """Materialize exact forcing as a RelationState (closure forcing plus verdicts)."""
    strong = _resolve_strong(s, strong)
    state = saturate(seed(s), s, strong)
    for (w, z), v in verdicts.items():
        if v.status is Verdict.FORCED_STRICT:
            a, b = v.winner
            state.W[a, b] = True
            state.D[a, b] = True
        elif v.status is Verdict.FORCED_INDIFF:
            state.W[w, z] = True
            state.W[z, w] = True
    return state


@dataclass(frozen=True)
class VerificationReport:
    complete: bool
    reflexive: bool
    transitive: bool
    extends_weak: bool
    extends_strict: bool
    coherent: bool
    strongly_coherent: bool
    consistent: bool

    @property
    def ok(self) -> bool:
        return all(getattr(self, f) for f in self.__dataclass_fields__)

    def failures(self) -> list[str]:
        return [f for f in self.__dataclass_fields__ if not getattr(self, f)]


def verify_extension(s: Scenario, e: RelationState) -> VerificationReport:
    """Independent audit of a candidate extension against the definitions."""
    W = e.W
    n = s.n
    strict = W & ~W.T

    off_diag = ~np.eye(n, dtype=bool)
    complete = bool((W | W.T)[off_diag].all()) if n > 1 else True
    reflexive = bool(W.diagonal().all())
    transitive = bool((~((W.astype(np.int32) @ W.astype(np.int32)) > 0) | W).all())

    extends_weak = all(W[x, y] for x, y in s.base_weak)
    extends_strict = all(strict[x, y] for x, y in s.base_strict)

    coherent = True
    strongly_coherent = True
    for g in s.generators:
        for x, gx in g.table.items():
            for y, gy in g.table.items():
                if W[x, y] and not W[gx, gy]:
                    coherent = False
                if strict[x, y] and not strict[gx, gy]:
                    coherent = False
                if W[gx, gy] and not W[x, y]:
                    strongly_coherent = False
                if strict[gx, gy] and not strict[x, y]:
                    strongly_coherent = False

    consistent = not bool(e.D.diagonal().any()) and not bool((e.D & W.T).any())

    return VerificationReport(
        complete=complete,
        reflexive=reflexive,
        transitive=transitive,
        extends_weak=extends_weak,
        extends_strict=extends_strict,
        coherent=coherent,
        strongly_coherent=strongly_coherent,
        consistent=consistent,
    )
