"""Ground window, generator tables, words, and scenario validation.

A scenario packages a finite window of alternatives, a set of partial
transformations of that window (the generators), and the observed rankings.
Generators that map outside the window are partial: their table simply has
no entry for the source, and nothing downstream is allowed to invent the
missing image.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Mapping

import numpy as np


class ScenarioError(ValueError):
    """A scenario document is malformed or violates a well-formedness invariant."""


_SCENARIO_FIELDS = {"name", "description", "commutative", "elements", "generators", "weak", "strict"}
_ELEMENT_FIELDS = {"id", "label", "coords"}
_GENERATOR_FIELDS = {"name", "map"}


@dataclass(frozen=True)
class Element:
    id: int
    label: str
    # (base symbol, integer vector); used by the scenario generators, ignored elsewhere
    coords: tuple[str, tuple[int, ...]] | None = None


@dataclass(frozen=True)
class Generator:
    """A partial transformation of the window, given by an explicit table."""

    name: str
    table: Mapping[int, int]

    def __call__(self, x: int) -> int | None:
        return self.table.get(x)


@dataclass(frozen=True)
class Word:
    """A formal composition of generators, applied left to right.

    The empty word is the identity.  In a commutative scenario two words with
    equal exponent vectors act identically wherever both are defined, so a
    word can equivalently be built from an exponent vector.
    """

    steps: tuple[str, ...] = ()

    @classmethod
    def from_exponents(cls, exponents: Mapping[str, int]) -> "Word":
        steps: list[str] = []
        for name in sorted(exponents):
            count = exponents[name]
            if count < 0:
                raise ValueError(f"negative exponent for generator {name!r}")
            steps.extend([name] * count)
        return cls(tuple(steps))

    @property
    def exponents(self) -> dict[str, int]:
        return dict(Counter(self.steps))

    def __mul__(self, other: "Word") -> "Word":
        return Word(self.steps + other.steps)


IDENTITY = Word(())


@dataclass(frozen=True)
class Scenario:
    """A validated window + generators + base rankings.

    Immutable after validation; safe to share read-only.  ``base_weak`` holds
    ordered pairs (x, y) asserting "x is at least as good as y", ``base_strict``
    pairs asserting "x is strictly better than y".
    """

    name: str
    description: str
    commutative: bool
    elements: tuple[Element, ...]
    generators: tuple[Generator, ...]
    base_weak: tuple[tuple[int, int], ...]
    base_strict: tuple[tuple[int, int], ...]
    _label_to_id: dict[str, int] = field(repr=False, compare=False, default_factory=dict)
    _tables: np.ndarray | None = field(repr=False, compare=False, default=None)

    @property
    def n(self) -> int:
        return len(self.elements)

    def id_of(self, label: str) -> int:
        return self._label_to_id[label]

    def label_of(self, eid: int) -> str:
        return self.elements[eid].label

    def generator(self, name: str) -> Generator:
        for g in self.generators:
            if g.name == name:
                return g
        raise KeyError(name)

    def tables(self) -> np.ndarray:
        """Generator tables as a k x n int64 array, -1 marking undefined."""
        if self._tables is None:
            out = np.full((len(self.generators), self.n), -1, dtype=np.int64)
            for gi, g in enumerate(self.generators):
                for src, dst in g.table.items():
                    out[gi, src] = dst
            object.__setattr__(self, "_tables", out)
        return self._tables

    def with_seed(
        self,
        weak: Iterable[tuple[int, int]] = (),
        strict: Iterable[tuple[int, int]] = (),
        replace: bool = False,
    ) -> "Scenario":
        """Return a revalidated copy with extra (or replacement) base pairs."""
        new_weak = tuple(weak) if replace else self.base_weak + tuple(weak)
        new_strict = tuple(strict) if replace else self.base_strict + tuple(strict)
        doc = scenario_to_dict(self)
        doc["weak"] = [list(p) for p in new_weak]
        doc["strict"] = [list(p) for p in new_strict]
        return scenario_from_dict(doc)


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise ScenarioError(message)


def _check_fields(doc: Mapping, allowed: set[str], where: str) -> None:
    unknown = set(doc) - allowed
    _require(not unknown, f"unknown field(s) {sorted(unknown)} in {where}")


def _parse_pairs(raw, n: int, where: str) -> tuple[tuple[int, int], ...]:
    pairs = []
    for item in raw:
        _require(isinstance(item, (list, tuple)) and len(item) == 2, f"{where}: each entry must be a [x, y] pair")
        x, y = item
        _require(isinstance(x, int) and isinstance(y, int), f"{where}: pair {item!r} must hold integer ids")
        _require(0 <= x < n and 0 <= y < n, f"{where}: pair {item!r} references an id outside 0..{n - 1}")
        pairs.append((x, y))
    return tuple(pairs)


def scenario_from_dict(doc: Mapping) -> Scenario:
    """Build and validate a Scenario from a parsed scenario document."""
    _require(isinstance(doc, Mapping), "scenario document must be a JSON object")
    _check_fields(doc, _SCENARIO_FIELDS, "scenario document")
    for key in ("name", "commutative", "elements", "generators", "weak", "strict"):
        _require(key in doc, f"missing required field {key!r}")

    name = doc["name"]
    description = doc.get("description", "")
    commutative = doc["commutative"]
    _require(isinstance(name, str), "'name' must be a string")
    _require(isinstance(description, str), "'description' must be a string")
    _require(isinstance(commutative, bool), "'commutative' must be a boolean")

    elements: list[Element] = []
    for raw in doc["elements"]:
        _check_fields(raw, _ELEMENT_FIELDS, f"element {raw!r}")
        _require("id" in raw and "label" in raw, f"element {raw!r} needs 'id' and 'label'")
        coords = None
        if "coords" in raw and raw["coords"] is not None:
            c = raw["coords"]
            _require(
                isinstance(c, Mapping) and set(c) == {"base", "vec"},
                f"element {raw['label']!r}: coords must be {{'base', 'vec'}}",
            )
            coords = (str(c["base"]), tuple(int(v) for v in c["vec"]))
        elements.append(Element(id=raw["id"], label=str(raw["label"]), coords=coords))

    n = len(elements)
    ids = [e.id for e in elements]
    _require(sorted(ids) == list(range(n)), "element ids must be unique and contiguous from 0")
    elements.sort(key=lambda e: e.id)
    labels = [e.label for e in elements]
    dup = [lbl for lbl, c in Counter(labels).items() if c > 1]
    _require(not dup, f"duplicate element label(s): {dup}")

    generators: list[Generator] = []
    for raw in doc["generators"]:
        _check_fields(raw, _GENERATOR_FIELDS, f"generator {raw!r}")
        _require("name" in raw and "map" in raw, f"generator {raw!r} needs 'name' and 'map'")
        table: dict[int, int] = {}
        for entry in raw["map"]:
            _require(isinstance(entry, (list, tuple)) and len(entry) == 2, f"generator {raw['name']!r}: map entries must be [src, dst]")
            src, dst = entry
            _require(0 <= src < n and 0 <= dst < n, f"generator {raw['name']!r}: entry {entry!r} references an id outside 0..{n - 1}")
            _require(src not in table, f"generator {raw['name']!r}: source {src} mapped twice")
            table[src] = dst
        generators.append(Generator(name=str(raw["name"]), table=table))
    gen_names = [g.name for g in generators]
    dup = [nm for nm, c in Counter(gen_names).items() if c > 1]
    _require(not dup, f"duplicate generator name(s): {dup}")

    base_weak = _parse_pairs(doc["weak"], n, "'weak'")
    base_strict = _parse_pairs(doc["strict"], n, "'strict'")
    strict_set = set(base_strict)
    for x, y in base_strict:
        _require((y, x) not in strict_set, f"contradictory strict pair: both ({x},{y}) and ({y},{x}) asserted")

    scenario = Scenario(
        name=name,
        description=description,
        commutative=commutative,
        elements=tuple(elements),
        generators=tuple(generators),
        base_weak=base_weak,
        base_strict=base_strict,
        _label_to_id={e.label: e.id for e in elements},
    )

    if commutative:
        violations = check_commutativity(scenario)
        _require(
            not violations,
            "scenario declared commutative but the window action does not commute; "
            f"first witness: {violations[0] if violations else None}",
        )
    return scenario


def scenario_to_dict(s: Scenario) -> dict:
    doc = {
        "name": s.name,
        "description": s.description,
        "commutative": s.commutative,
        "elements": [],
        "generators": [],
        "weak": [list(p) for p in s.base_weak],
        "strict": [list(p) for p in s.base_strict],
    }
    for e in s.elements:
        item: dict = {"id": e.id, "label": e.label}
        if e.coords is not None:
            item["coords"] = {"base": e.coords[0], "vec": list(e.coords[1])}
        doc["elements"].append(item)
    for g in s.generators:
        doc["generators"].append({"name": g.name, "map": [[src, dst] for src, dst in sorted(g.table.items())]})
    return doc


def load_scenario(path: str | Path) -> Scenario:
    """Load and validate a scenario document from a JSON file."""
    try:
        with open(path, encoding="utf-8") as fh:
            doc = json.load(fh)
    except json.JSONDecodeError as exc:
        raise ScenarioError(f"{path}: not valid JSON: {exc}") from exc
    return scenario_from_dict(doc)


def save_scenario(s: Scenario, path: str | Path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(scenario_to_dict(s), fh, indent=2, sort_keys=True)
        fh.write("\n")


def check_commutativity(s: Scenario) -> list[tuple[str, str, int]]:
    """Report every (g, h, x) with both composite images defined and unequal.

    An empty report means the window action commutes pointwise wherever the
    comparison is possible; it cannot certify commutativity beyond the window.
    """
    violations = []
    gens = s.generators
    for i in range(len(gens)):
        for j in range(i + 1, len(gens)):
            g, h = gens[i], gens[j]
            for x in range(s.n):
                gx = g.table.get(x)
                hx = h.table.get(x)
                if gx is None or hx is None:
                    continue
                ghx = g.table.get(hx)
                hgx = h.table.get(gx)
                if ghx is None or hgx is None:
                    continue
                if ghx != hgx:
                    violations.append((g.name, h.name, x))
    return violations


def apply_word(s: Scenario, w: Word, x: int) -> int | None:
    """Image of x under the composed partial map; None if any step leaves the window."""
    cur: int | None = x
    for name in w.steps:
        cur = s.generator(name).table.get(cur)
        if cur is None:
            return None
    return cur
