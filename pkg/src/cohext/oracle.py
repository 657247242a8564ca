"""Brute-force ground truth on small windows.

Weak orders are enumerated as ordered set partitions (rank functions), so
completeness and transitivity hold by construction and only seed containment
and coherency need checking.  Exact forcing then falls out by intersecting
the verdicts of all surviving candidates.
"""

from __future__ import annotations

import itertools
from math import comb
from typing import Iterator, Sequence

import numpy as np

from .closure import RelationState
from .model import Scenario
from .solver import PairVerdict, Verdict

DEFAULT_CAP = 7


class CapExceededError(ValueError):
    """Enumeration was requested beyond the configured window cap."""


class NoExtensionError(RuntimeError):
    """Oracle forcing was requested but no candidate survives."""


def ordered_bell(n: int) -> int:
    """Count of weak orders on n elements, via the standard recurrence."""
    a = [1]
    for m in range(1, n + 1):
        a.append(sum(comb(m, k) * a[m - k] for k in range(1, m + 1)))
    return a[n]


def _set_partitions(items: list[int]) -> Iterator[list[list[int]]]:
    if not items:
        yield []
        return
    head, rest = items[0], items[1:]
    for part in _set_partitions(rest):
        for i in range(len(part)):
            yield part[:i] + [[head] + part[i]] + part[i + 1 :]
        yield [[head]] + part


def enumerate_weak_orders(n: int, cap: int = DEFAULT_CAP) -> Iterator[tuple[int, ...]]:
    """Yield every ordered set partition of n elements once, as a rank vector.

    Rank 0 is the top indifference class; smaller rank means better.
    """
    if n > cap:
        raise CapExceededError(f"n={n} exceeds the enumeration cap {cap}")
    for part in _set_partitions(list(range(n))):
        for blocks in itertools.permutations(part):
            ranks = [0] * n
            for level, block in enumerate(blocks):
                for x in block:
                    ranks[x] = level
            yield tuple(ranks)


def state_from_ranks(ranks: Sequence[int]) -> RelationState:
    """RelationState induced by a rank vector (complete by construction)."""
    r = np.asarray(ranks)
    W = r[:, None] <= r[None, :]
    D = r[:, None] < r[None, :]
    return RelationState(W=np.ascontiguousarray(W), D=np.ascontiguousarray(D))


def oracle_extensions(s: Scenario, cap: int = DEFAULT_CAP) -> list[tuple[int, ...]]:
    """All weak orders on the window that extend the seed and are coherent."""
    if s.n > cap:
        raise CapExceededError(f"scenario has {s.n} elements, above the cap {cap}")
    candidates = np.array(list(enumerate_weak_orders(s.n, cap)), dtype=np.int8)
    keep = np.ones(len(candidates), dtype=bool)
    for x, y in s.base_weak:
        keep &= candidates[:, x] <= candidates[:, y]
    for x, y in s.base_strict:
        keep &= candidates[:, x] < candidates[:, y]
    for g in s.generators:
        for x, gx in g.table.items():
            for y, gy in g.table.items():
                if x == y:
                    continue
                # coherency on a complete order: the (x,y) and (g(x),g(y))
                # comparisons must fall on the same side
                keep &= np.sign(candidates[:, x].astype(np.int16) - candidates[:, y]) == np.sign(
                    candidates[:, gx].astype(np.int16) - candidates[:, gy]
                )
    return [tuple(int(v) for v in row) for row in candidates[keep]]


def oracle_forced_set(s: Scenario, cap: int = DEFAULT_CAP) -> dict[tuple[int, int], PairVerdict]:
    """Per-pair verdict by intersecting all surviving candidates."""
    survivors = oracle_extensions(s, cap)
    if not survivors:
        raise NoExtensionError(f"scenario {s.name!r}: no coherent weak order survives")
    ranks = np.array(survivors, dtype=np.int16)
    verdicts: dict[tuple[int, int], PairVerdict] = {}
    for w in range(s.n):
        for z in range(w + 1, s.n):
            signs = set(np.sign(ranks[:, w] - ranks[:, z]).tolist())
            if signs == {-1}:
                verdicts[(w, z)] = PairVerdict((w, z), Verdict.FORCED_STRICT, winner=(w, z))
            elif signs == {1}:
                verdicts[(w, z)] = PairVerdict((w, z), Verdict.FORCED_STRICT, winner=(z, w))
            elif signs == {0}:
                verdicts[(w, z)] = PairVerdict((w, z), Verdict.FORCED_INDIFF)
            else:
                verdicts[(w, z)] = PairVerdict((w, z), Verdict.FREE)
    return verdicts
