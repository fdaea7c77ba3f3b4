"""Grid Tiling instances, selections, and their text formats.

Cells are ``(i, j)`` with ``i`` the row and ``j`` the column, both in
``1..k``.  A selection is a solution when every row agrees on first tile
components and every column agrees on second components, i.e. ``s(i, j)``
and ``s(i, j + 1)`` share the first component and ``s(i, j)`` and
``s(i + 1, j)`` share the second.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import GraphFormatError, PreconditionError

Cell = tuple[int, int]
Tile = tuple[int, int]


def right_of(cell: Cell) -> Cell:
    return (cell[0], cell[1] + 1)


def below(cell: Cell) -> Cell:
    return (cell[0] + 1, cell[1])


@dataclass(frozen=True)
class GridTilingInstance:
    k: int
    n: int
    tiles: dict[Cell, tuple[Tile, ...]]

    def __post_init__(self):
        if self.k < 1 or self.n < 1:
            raise PreconditionError("k and n must be positive")
        if set(self.tiles) != set(self.cells()):
            raise PreconditionError("every cell of the k x k grid needs a tile set")
        for cell, ts in self.tiles.items():
            if not ts:
                raise PreconditionError(f"cell {cell} has no tiles")
            if len(set(ts)) != len(ts):
                raise PreconditionError(f"cell {cell} lists a tile twice")
            for a, b in ts:
                if not (1 <= a <= self.n and 1 <= b <= self.n):
                    raise PreconditionError(f"tile {(a, b)} of cell {cell} outside [n]^2")

    def cells(self) -> list[Cell]:
        return [(i, j) for i in range(1, self.k + 1) for j in range(1, self.k + 1)]

    @property
    def tile_count(self) -> int:
        return sum(len(ts) for ts in self.tiles.values())

    def to_text(self) -> str:
        lines = [f"gridtiling {self.k} {self.n}"]
        for cell in self.cells():
            ts = " ".join(f"{a},{b}" for a, b in self.tiles[cell])
            lines.append(f"cell {cell[0]} {cell[1]} : {ts}")
        return "\n".join(lines) + "\n"


def _parse_tile(tok: str, lineno: int) -> Tile:
    try:
        a, b = tok.split(",")
        return int(a), int(b)
    except ValueError:
        raise GraphFormatError(f"malformed tile {tok!r}", lineno) from None


def _cell_line(parts: list[str], lineno: int) -> tuple[Cell, list[str]]:
    if len(parts) < 4 or parts[3] != ":":
        raise GraphFormatError("expected '<tag> <i> <j> : ...'", lineno)
    try:
        cell = (int(parts[1]), int(parts[2]))
    except ValueError:
        raise GraphFormatError("cell indices must be integers", lineno) from None
    return cell, parts[4:]


def parse_grid_tiling(text: str) -> GridTilingInstance:
    k = n = None
    tiles: dict[Cell, tuple[Tile, ...]] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        parts = raw.split()
        if not parts or parts[0] == "c":
            continue
        if parts[0] == "gridtiling":
            if k is not None or len(parts) != 3:
                raise GraphFormatError("malformed or repeated gridtiling header", lineno)
            try:
                k, n = int(parts[1]), int(parts[2])
            except ValueError:
                raise GraphFormatError("header values must be integers", lineno) from None
        elif parts[0] == "cell":
            if k is None:
                raise GraphFormatError("cell line before header", lineno)
            cell, toks = _cell_line(parts, lineno)
            if not (1 <= cell[0] <= k and 1 <= cell[1] <= k):
                raise GraphFormatError(f"cell {cell} outside the {k}x{k} grid", lineno)
            if cell in tiles:
                raise GraphFormatError(f"cell {cell} listed twice", lineno)
            if not toks:
                raise GraphFormatError(f"cell {cell} has no tiles", lineno)
            tiles[cell] = tuple(_parse_tile(t, lineno) for t in toks)
        else:
            raise GraphFormatError(f"unrecognized line {raw.strip()!r}", lineno)
    if k is None:
        raise GraphFormatError("missing gridtiling header")
    try:
        return GridTilingInstance(k, n, tiles)
    except PreconditionError as exc:
        raise GraphFormatError(str(exc)) from None


Selection = dict[Cell, Tile]


def selection_to_text(sel: Selection, k: int) -> str:
    lines = [f"selection {k}"]
    for i in range(1, k + 1):
        for j in range(1, k + 1):
            a, b = sel[(i, j)]
            lines.append(f"tile {i} {j} : {a},{b}")
    return "\n".join(lines) + "\n"


def parse_selection(text: str) -> Selection:
    sel: Selection = {}
    k = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        parts = raw.split()
        if not parts or parts[0] == "c":
            continue
        if parts[0] == "selection" and len(parts) == 2:
            k = int(parts[1])
        elif parts[0] == "tile":
            cell, toks = _cell_line(parts, lineno)
            if len(toks) != 1:
                raise GraphFormatError("each tile line holds exactly one tile", lineno)
            sel[cell] = _parse_tile(toks[0], lineno)
        else:
            raise GraphFormatError(f"unrecognized line {raw.strip()!r}", lineno)
    if k is None:
        raise GraphFormatError("missing selection header")
    if len(sel) != k * k:
        raise GraphFormatError(f"selection for k={k} needs {k * k} tiles, got {len(sel)}")
    return sel


def agreement_violation(inst: GridTilingInstance, sel: Selection) -> str | None:
    """Describe the first constraint ``sel`` breaks, or ``None``."""
    for cell in inst.cells():
        if cell not in sel:
            return f"no tile chosen for cell {cell}"
        if sel[cell] not in inst.tiles[cell]:
            return f"tile {sel[cell]} is not in S{cell}"
    for cell in inst.cells():
        r, d = right_of(cell), below(cell)
        if r in sel and sel[cell][0] != sel[r][0]:
            return f"cells {cell} and {r} disagree on the first component"
        if d in sel and sel[cell][1] != sel[d][1]:
            return f"cells {cell} and {d} disagree on the second component"
    return None

