"""Stacks of corridors over a graph map.

Row ``k`` carries a bottom path; its naive top is the concatenation of the
edge images, which is tightened in two left-to-right passes: first inside
each colour, then across the whole row.  Every surviving top edge remembers
the bottom edge whose image produced it (its ancestor), and every cancelled
pair is logged.  The top of row ``k`` is the bottom of row ``k + 1``.
"""

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from .graphmap import GraphMap
from .words import Word

__all__ = [
    "CancelledPair",
    "ColourInterval",
    "DiagramEdge",
    "Row",
    "StackDiagram",
    "bcc_profile",
    "build_stack",
    "check_stack",
    "colour_intervals",
    "corridor_lengths",
    "dying_intervals",
    "estimate_bcc",
    "trace_future",
    "trace_past",
]


@dataclass(frozen=True)
class DiagramEdge:
    id: int
    label: int
    colour: int
    ancestor: Optional[int]
    level: int


@dataclass(frozen=True)
class CancelledPair:
    left: int
    right: int
    left_pos: int
    right_pos: int
    phase: int
    internal: bool  # both edges of the same colour


@dataclass
class Row:
    bottom: Tuple[int, ...]
    naive: Tuple[int, ...]
    top: Tuple[int, ...]
    log: List[CancelledPair] = field(default_factory=list)


@dataclass(frozen=True)
class ColourInterval:
    colour: int
    row: int
    start: int
    end: int  # inclusive


@dataclass
class StackDiagram:
    f: GraphMap
    segments: Tuple[Word, ...]
    edges: Dict[int, DiagramEdge]
    rows: List[Row]
    children: Dict[int, List[int]]

    def labels(self, ids: Sequence[int]) -> Word:
        return Word._trusted(self.edges[i].label for i in ids)

    def to_dict(self) -> dict:
        a = self.f.alphabet
        return {
            "segments": [a.format(s) for s in self.segments],
            "edges": [
                {"id": e.id, "label": a.format_letter(e.label), "colour": e.colour,
                 "ancestor": e.ancestor, "level": e.level}
                for e in sorted(self.edges.values(), key=lambda e: e.id)
            ],
            "rows": [
                {
                    "bottom": list(r.bottom),
                    "naive_top": list(r.naive),
                    "top": list(r.top),
                    "cancellations": [
                        {"left": c.left, "right": c.right, "left_pos": c.left_pos,
                         "right_pos": c.right_pos, "phase": c.phase,
                         "kind": "internal" if c.internal else "boundary"}
                        for c in r.log
                    ],
                }
                for r in self.rows
            ],
            "corridor_lengths": corridor_lengths(self)[0],
        }

    def to_dot(self) -> str:
        a = self.f.alphabet
        palette = ["#fde0dd", "#deebf7", "#e5f5e0", "#fff7bc", "#efedf5", "#fee6ce", "#f0f0f0"]
        out = ["digraph stack {", "  rankdir=BT;", "  node [shape=box, style=filled, fontsize=10];"]
        levels = [r.bottom for r in self.rows] + [self.rows[-1].top] if self.rows else []
        for k, ids in enumerate(levels):
            out.append(f"  subgraph level{k} {{ rank=same;")
            for i in ids:
                e = self.edges[i]
                colour = palette[e.colour % len(palette)]
                out.append(f'    e{i} [label="{a.format_letter(e.label)}", fillcolor="{colour}"];')
            for x, y in zip(ids, ids[1:]):
                out.append(f"    e{x} -> e{y} [style=invis];")
            out.append("  }")
        for e in sorted(self.edges.values(), key=lambda e: e.id):
            if e.ancestor is not None and e.id not in self._dead():
                out.append(f"  e{e.ancestor} -> e{e.id} [color=gray];")
        for k, r in enumerate(self.rows):
            for c in r.log:
                bl, br = self.edges[c.left].ancestor, self.edges[c.right].ancestor
                out.append(f'  e{bl} -> e{br} [dir=none, style=dashed, color=red, constraint=false, '
                           f'label="row {k}"];')
        out.append("}")
        return "\n".join(out) + "\n"

    def _dead(self):
        return {i for r in self.rows for c in r.log for i in (c.left, c.right)}


def _tighten(ids: List[int], pos: Dict[int, int], edges, phase: int, log: List[CancelledPair]) -> List[int]:
    out = []
    for i in ids:
        if out and edges[out[-1]].label == -edges[i].label:
            j = out.pop()
            log.append(CancelledPair(j, i, pos[j], pos[i], phase,
                                     edges[j].colour == edges[i].colour))
        else:
            out.append(i)
    return out


def build_stack(f: GraphMap, segments: Sequence[Sequence[int]], l: int) -> StackDiagram:
    """Simulate ``l + 1`` stacked corridors starting from the coloured path ``segments``.

    Row 0's bottom is the concatenation of ``segments``; segment ``i`` has colour ``i``.
    """
    if l < 0:
        raise ValueError("l must be non-negative")
    segments = tuple(tuple(s) for s in segments)
    if any(not s for s in segments):
        raise ValueError("segments must be non-empty")
    path = [x for s in segments for x in s]
    f.graph.check_path(path)
    if Word(path) != tuple(path):
        raise ValueError("concatenation of segments is not tight")

    edges: Dict[int, DiagramEdge] = {}
    children: Dict[int, List[int]] = {}
    next_id = 0

    def new_edge(label, colour, ancestor, level):
        nonlocal next_id
        e = DiagramEdge(next_id, label, colour, ancestor, level)
        edges[e.id] = e
        children[e.id] = []
        next_id += 1
        return e.id

    bottom = [new_edge(x, c, None, 0) for c, s in enumerate(segments) for x in s]
    rows = []
    for k in range(l + 1):
        naive = []
        for i in bottom:
            e = edges[i]
            img = f.edge_image[abs(e.label) - 1]
            seq = img if e.label > 0 else [-y for y in reversed(img)]
            for y in seq:
                naive.append(new_edge(y, e.colour, i, k + 1))
        pos = {i: p for p, i in enumerate(naive)}
        log: List[CancelledPair] = []
        # phase 1: inside each colour block
        phase1 = []
        start = 0
        while start < len(naive):
            colour = edges[naive[start]].colour
            stop = start
            while stop < len(naive) and edges[naive[stop]].colour == colour:
                stop += 1
            phase1.extend(_tighten(naive[start:stop], pos, edges, 1, log))
            start = stop
        top = _tighten(phase1, pos, edges, 2, log)
        for i in top:
            children[edges[i].ancestor].append(i)
        rows.append(Row(tuple(bottom), tuple(naive), tuple(top), log))
        bottom = top
    return StackDiagram(f, tuple(Word(s) for s in segments), edges, rows, children)


def colour_intervals(d: StackDiagram, row: int, top: bool = False) -> List[ColourInterval]:
    """Maximal monochromatic intervals of a row's bottom (or top), left to right."""
    if not 0 <= row < len(d.rows):
        raise IndexError(f"row {row} out of range")
    ids = d.rows[row].top if top else d.rows[row].bottom
    out = []
    for p, i in enumerate(ids):
        c = d.edges[i].colour
        if out and out[-1].colour == c and out[-1].end == p - 1:
            prev = out[-1]
            out[-1] = ColourInterval(c, row, prev.start, p)
        else:
            out.append(ColourInterval(c, row, p, p))
    return out


def trace_future(d: StackDiagram, edge_id: int) -> List[int]:
    """All descendants of an edge in later rows, in breadth-first order."""
    if edge_id not in d.edges:
        raise KeyError(f"unknown edge {edge_id}")
    out, todo = [], list(d.children[edge_id])
    while todo:
        i = todo.pop(0)
        out.append(i)
        todo.extend(d.children[i])
    return out


def trace_past(d: StackDiagram, edge_id: int) -> List[int]:
    """Ancestor chain of an edge, nearest first; empty for boundary-born edges."""
    if edge_id not in d.edges:
        raise KeyError(f"unknown edge {edge_id}")
    out = []
    a = d.edges[edge_id].ancestor
    while a is not None:
        out.append(a)
        a = d.edges[a].ancestor
    return out


def corridor_lengths(d: StackDiagram):
    """Bottom length of every row, and the longest."""
    lengths = [len(r.bottom) for r in d.rows]
    return lengths, max(lengths, default=0)


def dying_intervals(d: StackDiagram, row: int) -> List[Tuple[int, int]]:
    """Maximal intervals ``(start, end)`` of the row's bottom whose whole image cancels."""
    r = d.rows[row]
    out = []
    run = None
    for p, i in enumerate(r.bottom):
        if d.children[i]:
            if run is not None:
                out.append(run)
                run = None
        else:
            run = (p, p) if run is None else (run[0], p)
    if run is not None:
        out.append(run)
    return out


def check_stack(d: StackDiagram) -> List[str]:
    """Structural invariants of a built stack; returns a list of failures."""
    fails = []
    L = d.f.lipschitz
    for i, e in d.edges.items():
        seen = {i}
        a = e.ancestor
        if a is not None and d.edges[a].level != e.level - 1:
            fails.append(f"edge {i}: ancestor not in the previous level")
        while a is not None:
            if a in seen:
                fails.append(f"edge {i}: ancestry cycle")
                break
            seen.add(a)
            a = d.edges[a].ancestor
    first = [iv.colour for iv in colour_intervals(d, 0)]
    for k, r in enumerate(d.rows):
        for top in (False, True):
            cols = [iv.colour for iv in colour_intervals(d, k, top)]
            if len(set(cols)) != len(cols):
                fails.append(f"row {k}: a colour is split")
            if cols != [c for c in first if c in set(cols)]:
                fails.append(f"row {k}: colours out of order")
        if len(r.top) > L * len(r.bottom):
            fails.append(f"row {k}: |top| > L |bottom|")
        if len(r.naive) != len(r.top) + 2 * len(r.log):
            fails.append(f"row {k}: edge count not conserved")
        spans = sorted((c.left_pos, c.right_pos) for c in r.log)
        for x in range(len(spans)):
            for y in range(x + 1, len(spans)):
                (a1, b1), (a2, b2) = spans[x], spans[y]
                if a1 < a2 < b1 < b2:
                    fails.append(f"row {k}: cancellation pairs cross")
        if d.labels(r.top) != Word(d.labels(r.naive)):
            fails.append(f"row {k}: top is not the tightened naive top")
        if k + 1 < len(d.rows) and d.rows[k + 1].bottom != r.top:
            fails.append(f"row {k}: top differs from the next bottom")
    return fails


def _tight_paths(f: GraphMap, depth: int) -> List[Tuple[int, ...]]:
    g = f.graph
    out = []
    frontier = [(e,) for e in g.oriented_edges()]
    for _ in range(depth):
        out.extend(frontier)
        nxt = []
        for p in frontier:
            v = g.terminus(p[-1])
            for e in g.oriented_edges():
                if e != -p[-1] and g.origin(e) == v:
                    nxt.append(p + (e,))
        frontier = nxt
    return out


def _max_cancellation(f: GraphMap, depth: int) -> int:
    # Cancellation between f#(u) and f#(v) equals the common prefix of
    # f#(u^-1) and f#(v).  u.v is tight iff u^-1 and v start with different
    # edges at the same vertex, so look for the longest image prefix shared by
    # paths with different first edges.
    g = f.graph
    first_edge: Dict[tuple, int] = {}
    best = 0
    for p in _tight_paths(f, depth):
        img = f(p)
        start = g.origin(p[0])
        for k in range(1, len(img) + 1):
            key = (start, img[:k])
            seen = first_edge.setdefault(key, p[0])
            if seen != p[0]:
                first_edge[key] = 0  # marks: two distinct first edges
            if first_edge[key] == 0 and k > best:
                best = k
    return best


def estimate_bcc(f: GraphMap, depth: int = 4) -> int:
    """``1 +`` the most edges cancelled between ``f#(u)`` and ``f#(v)`` over tight ``u.v`` with ``|u|, |v| <= depth``."""
    if depth < 1:
        raise ValueError("depth must be at least 1")
    return 1 + _max_cancellation(f, depth)


def bcc_profile(f: GraphMap, max_depth: int = 6):
    """Estimates for depths ``1..max_depth`` and the first depth equal to its predecessor (or None)."""
    values = [estimate_bcc(f, d) for d in range(1, max_depth + 1)]
    stable = next((d for d in range(2, max_depth + 1) if values[d - 1] == values[d - 2]), None)
    return values, stable
