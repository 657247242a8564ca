"""Programmatic scenario generators: worked examples and random corpora.

The infinite spaces behind the worked examples (integer tracks, consumption
streams, positive orthants) are embodied here as their smallest faithful
finite windows; generators become partial at the window boundary.
"""

from __future__ import annotations

import itertools
import random
from typing import Sequence

from .model import Scenario, ScenarioError, scenario_from_dict


def _doc(name: str, description: str, commutative: bool) -> dict:
    return {
        "name": name,
        "description": description,
        "commutative": commutative,
        "elements": [],
        "generators": [],
        "weak": [],
        "strict": [],
    }


def _add_element(doc: dict, label: str, coords: tuple[str, Sequence[int]] | None = None) -> int:
    eid = len(doc["elements"])
    item: dict = {"id": eid, "label": label}
    if coords is not None:
        item["coords"] = {"base": coords[0], "vec": list(coords[1])}
    doc["elements"].append(item)
    return eid


def gen_two_track(N: int) -> Scenario:
    """Two parallel tracks a, b over z in [-N, N] with a unit shift generator.

    Seeded strict rankings: a at z beats b at both neighboring positions.
    The single shift makes the action commutative, yet the pair (a at z,
    b at z) is forced only by invariance and transitivity acting together.
    """
    if N < 0:
        raise ValueError("N must be >= 0")
    doc = _doc(
        f"two-track-N{N}",
        "two integer tracks with a unit shift; a@z beats b@(z-1) and b@(z+1)",
        commutative=True,
    )
    ids: dict[tuple[str, int], int] = {}
    for z in range(-N, N + 1):
        for track in ("a", "b"):
            ids[(track, z)] = _add_element(doc, f"{track}:{z}", coords=(track, [z]))
    shift = [[ids[(t, z)], ids[(t, z + 1)]] for z in range(-N, N) for t in ("a", "b")]
    doc["generators"].append({"name": "shift", "map": sorted(shift)})
    for z in range(-N, N + 1):
        if z + 1 <= N:
            doc["strict"].append([ids[("a", z)], ids[("b", z + 1)]])
        if z - 1 >= -N:
            doc["strict"].append([ids[("a", z)], ids[("b", z - 1)]])
    return scenario_from_dict(doc)


_KOOPMANS_PREFIX_LETTERS = ("a", "b", "a'", "b'")
_KOOPMANS_ALL_LETTERS = ("a", "b", "a'", "b'", "x", "y")


def _stream_label(prefix: tuple[str, ...], tail: str) -> str:
    return ".".join(prefix + (f"s{tail}",))


def gen_koopmans(L: int = 1) -> Scenario:
    """Consumption-stream window where prepending prizes is non-commutative.

    Elements are the two constant streams sx, sy with prepended prefixes of
    length <= L over {a, b, a', b'}.  Six prepend generators, one per prize
    (prepending x or y always leaves the window, so those tables are empty).
    The unprimed seed pairs block ranking sy above sx, the primed ones block
    sx above sy, so no coherent completion of the window exists.
    """
    if L < 1:
        raise ValueError("L must be >= 1")
    doc = _doc(
        f"koopmans-L{L}",
        "prepend-invariant stream rankings with mutually blocking forcing chains",
        commutative=False,
    )
    ids: dict[tuple[tuple[str, ...], str], int] = {}
    for length in range(L + 1):
        for prefix in itertools.product(_KOOPMANS_PREFIX_LETTERS, repeat=length):
            for tail in ("x", "y"):
                ids[(prefix, tail)] = _add_element(doc, _stream_label(prefix, tail))
    for letter in _KOOPMANS_ALL_LETTERS:
        table = []
        if letter in _KOOPMANS_PREFIX_LETTERS:
            for (prefix, tail), src in ids.items():
                if len(prefix) < L:
                    table.append([src, ids[((letter,) + prefix, tail)]])
        doc["generators"].append({"name": f"w_{letter}", "map": sorted(table)})
    base = [
        (("a",), "x", ("b",), "y"),
        (("b",), "x", ("a",), "y"),
        (("a'",), "y", ("b'",), "x"),
        (("b'",), "y", ("a'",), "x"),
    ]
    for length in range(L):
        for word in itertools.product(_KOOPMANS_PREFIX_LETTERS, repeat=length):
            for p1, t1, p2, t2 in base:
                doc["strict"].append([ids[(word + p1, t1)], ids[(word + p2, t2)]])
    return scenario_from_dict(doc)


def gen_koopmans_reduced() -> Scenario:
    """Eight-element cut of the stream example, small enough for the oracle.

    Three prepend letters suffice: a, b block sy above sx; a, c block sx
    above sy.  The seed itself is acyclic and saturation-consistent, but no
    complete coherent order survives.
    """
    doc = _doc(
        "koopmans-reduced",
        "8-element stream window with mutually blocking forcing chains",
        commutative=False,
    )
    ids: dict[str, int] = {}
    for label in ("sx", "sy", "a.sx", "a.sy", "b.sx", "b.sy", "c.sx", "c.sy"):
        ids[label] = _add_element(doc, label)
    for letter in ("a", "b", "c"):
        doc["generators"].append(
            {
                "name": f"w_{letter}",
                "map": [[ids["sx"], ids[f"{letter}.sx"]], [ids["sy"], ids[f"{letter}.sy"]]],
            }
        )
    for better, worse in (
        ("a.sx", "b.sy"),
        ("b.sx", "a.sy"),
        ("c.sy", "a.sx"),
        ("a.sy", "c.sx"),
    ):
        doc["strict"].append([ids[better], ids[worse]])
    return scenario_from_dict(doc)


def gen_homothetic_grid(dims: int, depth: int) -> Scenario:
    """Dyadic grid with a doubling generator; empty seed for callers to fill.

    Elements are vectors with power-of-two coordinates up to 2**depth; the
    doubling map scales every coordinate and is partial at the top boundary.
    """
    if dims < 1 or depth < 1:
        raise ValueError("dims and depth must be >= 1")
    doc = _doc(
        f"homothetic-d{dims}-e{depth}",
        "power-of-two grid closed under doubling; scaling-invariant rankings",
        commutative=True,
    )
    exps = list(range(depth + 1))
    ids: dict[tuple[int, ...], int] = {}
    for evec in itertools.product(exps, repeat=dims):
        values = tuple(2**e for e in evec)
        label = str(values[0]) if dims == 1 else "(" + ",".join(map(str, values)) + ")"
        ids[evec] = _add_element(doc, label, coords=("v", list(values)))
    table = []
    for evec, src in ids.items():
        doubled = tuple(e + 1 for e in evec)
        if all(e <= depth for e in doubled):
            table.append([src, ids[doubled]])
    doc["generators"].append({"name": "double", "map": sorted(table)})
    return scenario_from_dict(doc)


def gen_dated_rewards(rewards: int | Sequence[str], horizon: int) -> Scenario:
    """Dated rewards (y, t) with a unit time-shift; empty seed.

    Stationarity of rankings is exactly coherency under the shift.
    """
    if horizon < 1:
        raise ValueError("horizon must be >= 1")
    names = [f"r{i}" for i in range(rewards)] if isinstance(rewards, int) else list(rewards)
    if not names:
        raise ValueError("need at least one reward")
    doc = _doc(
        f"dated-rewards-{len(names)}x{horizon}",
        "rewards consumed at integer dates with a unit delay generator",
        commutative=True,
    )
    ids: dict[tuple[str, int], int] = {}
    for t in range(horizon + 1):
        for y in names:
            ids[(y, t)] = _add_element(doc, f"{y}@{t}", coords=(y, [t]))
    table = [[ids[(y, t)], ids[(y, t + 1)]] for t in range(horizon) for y in names]
    doc["generators"].append({"name": "delay", "map": sorted(table)})
    return scenario_from_dict(doc)


def _permutation_power(perm: list[int], e: int) -> list[int]:
    out = list(range(len(perm)))
    for _ in range(e):
        out = [perm[v] for v in out]
    return out


def gen_random(
    n: int,
    k: int,
    density: float,
    seed: int,
    total: bool = True,
    commutative: bool = True,
) -> Scenario:
    """Reproducible random scenario.

    Commutative generators are built to commute by construction: powers of a
    single random permutation when total, parallel forward shifts on a line
    when partial.  The base relation is drawn pairwise at the given density
    and redrawn whenever a directly contradictory strict pair comes up.
    """
    if n < 1 or k < 0 or not 0.0 <= density <= 1.0:
        raise ValueError("bad random-scenario parameters")
    rng = random.Random(seed)
    doc = _doc(
        f"random-n{n}-k{k}-d{density}-s{seed}",
        "seeded random scenario"
        + (" (commuting-by-construction generators)" if commutative else ""),
        commutative=commutative,
    )
    for i in range(n):
        _add_element(doc, f"e{i}")

    if commutative:
        if total:
            perm = rng.sample(range(n), n)
            for gi in range(k):
                power = _permutation_power(perm, rng.randrange(1, max(2, n)))
                doc["generators"].append(
                    {"name": f"g{gi}", "map": [[x, power[x]] for x in range(n)]}
                )
        else:
            for gi in range(k):
                step = rng.randrange(1, 4)
                doc["generators"].append(
                    {"name": f"g{gi}", "map": [[x, x + step] for x in range(n - step)]}
                )
    else:
        for gi in range(k):
            table = []
            for x in range(n):
                if total or rng.random() < 0.6:
                    table.append([x, rng.randrange(n)])
            doc["generators"].append({"name": f"g{gi}", "map": table})

    for attempt in range(100):
        weak, strict = [], []
        for x in range(n):
            for y in range(n):
                if x == y or rng.random() >= density / 2:
                    continue
                (strict if rng.random() < 0.5 else weak).append([x, y])
        contradictory = {(x, y) for x, y in strict} & {(y, x) for x, y in strict}
        if not contradictory:
            doc["weak"], doc["strict"] = weak, strict
            return scenario_from_dict(doc)
    raise ScenarioError("could not draw a non-contradictory seed in 100 attempts")


GEN_FAMILIES = {
    "two_track": gen_two_track,
    "koopmans": gen_koopmans,
    "koopmans_reduced": gen_koopmans_reduced,
    "homothetic": gen_homothetic_grid,
    "dated": gen_dated_rewards,
    "random": gen_random,
}
