"""One-line text forms for solver outputs.

``is N : v...``, ``clique N : v...``, ``ds N : v...``, ``path T : v...``,
``coloring C : c(1) ... c(n)`` and ``pattern <kind> <h> : a = ... ; b = ...``.
"""

from __future__ import annotations

from .errors import GraphFormatError
from .graph import Witness
from .patterns import PatternWitness

_TAGS = {
    "is": "independent-set",
    "clique": "clique",
    "ds": "dominating-set",
    "path": "induced-path",
    "coloring": "coloring",
    "pattern": "pattern",
}
_NAMES = {v: k for k, v in _TAGS.items()}


def vertex_line(tag: str, vs) -> str:
    vs = list(vs)
    return f"{tag} {len(vs)} : " + " ".join(map(str, vs))


def witness_to_text(w: Witness) -> str:
    if w.kind == "pattern":
        return w.payload.to_text()
    if w.kind == "coloring":
        colors = w.payload
        seq = [colors[v] for v in sorted(colors)] if isinstance(colors, dict) else list(colors)
        return f"coloring {len(set(seq))} : " + " ".join(map(str, seq))
    vs = w.payload if w.kind == "induced-path" else sorted(w.payload)
    return vertex_line(_NAMES[w.kind], vs)


def parse_witness(text: str) -> Witness:
    """Read the first witness line of ``text``; other lines are skipped."""
    for lineno, raw in enumerate(text.splitlines(), start=1):
        parts = raw.split()
        if not parts or parts[0] not in _TAGS:
            continue
        kind = _TAGS[parts[0]]
        if kind == "pattern":
            return Witness(kind, PatternWitness.from_text(raw.strip()))
        if len(parts) < 3 or parts[2] != ":":
            raise GraphFormatError(f"expected '{parts[0]} <count> : ...'", lineno)
        try:
            declared = int(parts[1])
            values = [int(x) for x in parts[3:]]
        except ValueError:
            raise GraphFormatError("non-integer value in witness", lineno) from None
        if kind == "coloring":
            if len(set(values)) != declared:
                raise GraphFormatError(
                    f"header says {declared} colors, line uses {len(set(values))}", lineno
                )
            return Witness(kind, values)
        if len(values) != declared:
            raise GraphFormatError(f"header says {declared} vertices, found {len(values)}", lineno)
        return Witness(kind, values)
    raise GraphFormatError("no witness line found")
