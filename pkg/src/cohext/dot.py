"""DOT rendering of a complete extension's strict-order quotient.

Indifference classes collapse to single nodes; since the extension is a
complete order on classes, the Hasse diagram is the chain of consecutive
classes, drawn best-first.
"""

from __future__ import annotations

from .closure import RelationState
from .model import Scenario


def indifference_classes(state: RelationState) -> list[list[int]]:
    """Classes of mutual weak forcing, ordered best class first.

    Assumes a settled complete state, where "strictly below" is just the
    count of classes above.
    """
    n = state.n
    both = state.W & state.W.T
    seen: set[int] = set()
    classes = []
    for x in range(n):
        if x in seen:
            continue
        members = [y for y in range(n) if both[x, y]]
        seen.update(members)
        classes.append(sorted(members))
    # strictly-above count of the representative fixes the chain position
    classes.sort(key=lambda cls: int((state.W[:, cls[0]] & ~state.W[cls[0], :]).sum()))
    return classes


def extension_to_dot(s: Scenario, state: RelationState) -> str:
    classes = indifference_classes(state)
    lines = ["digraph extension {", "  rankdir=TB;", '  node [shape=box, fontname="monospace"];']
    for idx, members in enumerate(classes):
        label = ", ".join(s.label_of(m) for m in members)
        lines.append(f'  c{idx} [label="{label}"];')
    for idx in range(len(classes) - 1):
        lines.append(f"  c{idx} -> c{idx + 1};")
    lines.append("}")
    return "\n".join(lines) + "\n"
