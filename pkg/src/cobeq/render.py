"""Deterministic drawing of cobordism matrices as SVG or DOT.

Each matrix entry becomes one cell: source points along the top edge,
target points along the bottom (the default top-to-bottom reading order),
segments as lines or arcs with a direction arrow and a label, circles as
labeled loops, zero entries as a bare 0 glyph.  Neutral labels are omitted.
"""

from __future__ import annotations

from . import cobordism as cob
from . import cobsum as cs
from .freegroup import Alphabet, DEFAULT_ALPHABET, E, format_word
from .matcat import MatArrow

_CELL_W = 160
_CELL_H = 150
_MARGIN = 24
_WIRE_GAP = 28


def _label_of(word, alphabet: Alphabet) -> str:
    return "" if word == E else format_word(word, alphabet)


def _fmt(x: float) -> str:
    return f"{x:.1f}"


def _cell_svg(x0: float, y0: float, entry: cs.CobSum, alphabet: Alphabet,
              flip: bool) -> list[str]:
    parts = [
        f'<rect x="{_fmt(x0)}" y="{_fmt(y0)}" width="{_CELL_W}" height="{_CELL_H}"'
        ' fill="none" stroke="#999" stroke-width="0.5"/>'
    ]
    if cs.is_zero(entry):
        parts.append(
            f'<text x="{_fmt(x0 + _CELL_W / 2)}" y="{_fmt(y0 + _CELL_H / 2)}"'
            ' font-size="16" text-anchor="middle">0</text>')
        return parts

    top_y = y0 + 24
    bot_y = y0 + _CELL_H - 24
    if flip:
        top_y, bot_y = bot_y, top_y

    member_x = x0 + 16
    for index, (g, multiplicity) in enumerate(entry.terms):
        for copy in range(multiplicity):
            if index or copy:
                parts.append(
                    f'<text x="{_fmt(member_x - 10)}" y="{_fmt(y0 + _CELL_H / 2)}"'
                    ' font-size="12" text-anchor="middle">+</text>')

            def pos(point):
                side, i = point
                row_y = top_y if side == cob.SRC else bot_y
                return (member_x + i * _WIRE_GAP, row_y)

            for i, sign in enumerate(g.src):
                x, y = member_x + i * _WIRE_GAP, top_y
                parts.append(f'<circle cx="{_fmt(x)}" cy="{_fmt(y)}" r="2"/>')
                parts.append(
                    f'<text x="{_fmt(x)}" y="{_fmt(y - 6)}" font-size="9"'
                    f' text-anchor="middle">{"+" if sign == cob.PLUS else "-"}</text>')
            for i, sign in enumerate(g.tgt):
                x, y = member_x + i * _WIRE_GAP, bot_y
                parts.append(f'<circle cx="{_fmt(x)}" cy="{_fmt(y)}" r="2"/>')
                parts.append(
                    f'<text x="{_fmt(x)}" y="{_fmt(y + 12)}" font-size="9"'
                    f' text-anchor="middle">{"+" if sign == cob.PLUS else "-"}</text>')

            for seg in g.segments:
                (x1, y1), (x2, y2) = pos(seg.start), pos(seg.end)
                if seg.start[0] == seg.end[0]:
                    bend = 30 if y1 == top_y else -30
                    if flip:
                        bend = -bend
                    mid_x, mid_y = (x1 + x2) / 2, y1 + bend
                    parts.append(
                        f'<path d="M {_fmt(x1)} {_fmt(y1)} Q {_fmt(mid_x)} '
                        f'{_fmt(y1 + 2 * bend)} {_fmt(x2)} {_fmt(y2)}"'
                        ' fill="none" stroke="black" marker-end="url(#dir)"/>')
                else:
                    mid_x, mid_y = (x1 + x2) / 2, (y1 + y2) / 2
                    parts.append(
                        f'<line x1="{_fmt(x1)}" y1="{_fmt(y1)}" x2="{_fmt(x2)}"'
                        f' y2="{_fmt(y2)}" stroke="black" marker-end="url(#dir)"/>')
                label = _label_of(seg.label, alphabet)
                if label:
                    parts.append(
                        f'<text x="{_fmt(mid_x + 4)}" y="{_fmt(mid_y)}"'
                        f' font-size="10">{label}</text>')

            loop_x = member_x + max(len(g.src), len(g.tgt), 1) * _WIRE_GAP + 10
            for k, circle in enumerate(g.circles):
                cx, cy = loop_x + k * 34, y0 + _CELL_H / 2
                parts.append(
                    f'<circle cx="{_fmt(cx)}" cy="{_fmt(cy)}" r="12" fill="none"'
                    ' stroke="black"/>')
                label = _label_of(circle.rep, alphabet)
                if label:
                    parts.append(
                        f'<text x="{_fmt(cx)}" y="{_fmt(cy - 16)}" font-size="10"'
                        f' text-anchor="middle">{label}</text>')
            member_x = loop_x + len(g.circles) * 34 + 8
    return parts


def to_svg(mat: MatArrow, alphabet: Alphabet = DEFAULT_ALPHABET,
           direction: str = "tb") -> str:
    if direction not in ("tb", "bt"):
        raise ValueError(f"unknown direction {direction!r}")
    flip = direction == "bt"
    rows = max(len(mat.tgt), 1)
    cols = max(len(mat.src), 1)
    width = cols * _CELL_W + 2 * _MARGIN
    height = rows * _CELL_H + 2 * _MARGIN
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}"'
        f' height="{height}" viewBox="0 0 {width} {height}">',
        '<defs><marker id="dir" markerWidth="8" markerHeight="8" refX="6"'
        ' refY="3" orient="auto"><path d="M 0 0 L 6 3 L 0 6 z"/></marker></defs>',
        '<g font-family="monospace">',
    ]
    for i in range(len(mat.tgt)):
        for j in range(len(mat.src)):
            x0 = _MARGIN + j * _CELL_W
            y0 = _MARGIN + i * _CELL_H
            parts.extend(_cell_svg(x0, y0, mat.entries[i][j], alphabet, flip))
    parts.append("</g>")
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def to_dot(mat: MatArrow, alphabet: Alphabet = DEFAULT_ALPHABET,
           direction: str = "tb") -> str:
    if direction not in ("tb", "bt"):
        raise ValueError(f"unknown direction {direction!r}")
    lines = ["digraph cobordism {", f'  rankdir={"TB" if direction == "tb" else "BT"};']
    for i in range(len(mat.tgt)):
        for j in range(len(mat.src)):
            entry = mat.entries[i][j]
            lines.append(f'  subgraph "cluster_{i}_{j}" {{')
            lines.append(f'    label="entry ({i},{j})";')
            if cs.is_zero(entry):
                lines.append(f'    "z_{i}_{j}" [label="0", shape=plaintext];')
            member = 0
            for g, multiplicity in entry.terms:
                for _ in range(multiplicity):
                    prefix = f"m{i}_{j}_{member}"
                    for k, sign in enumerate(g.src):
                        glyph = "+" if sign == cob.PLUS else "-"
                        lines.append(
                            f'    "{prefix}_s{k}" [label="src{k}{glyph}", shape=point];')
                    for k, sign in enumerate(g.tgt):
                        glyph = "+" if sign == cob.PLUS else "-"
                        lines.append(
                            f'    "{prefix}_t{k}" [label="tgt{k}{glyph}", shape=point];')
                    for seg in g.segments:
                        frm = f'{prefix}_{seg.start[0]}{seg.start[1]}'
                        to = f'{prefix}_{seg.end[0]}{seg.end[1]}'
                        label = _label_of(seg.label, alphabet)
                        lines.append(f'    "{frm}" -> "{to}" [label="{label}"];')
                    for k, circle in enumerate(g.circles):
                        label = _label_of(circle.rep, alphabet) or "e"
                        lines.append(
                            f'    "{prefix}_c{k}" [label="({label})", shape=circle];')
                    member += 1
            lines.append("  }")
    lines.append("}")
    return "\n".join(lines) + "\n"
