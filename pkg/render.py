# -*- coding: utf-8 -*-
"""
Adjunction Algebra Engine — Frieze Rendering v1.0
Frieze'lerin deterministik metin çizimi: ASCII ızgara ve tek parça SVG.
Üst noktalar 1..n, alt noktalar 1..m etiketlenir; daire sayısı açıklama olarak basılır.
"""

from __future__ import annotations

import html
from typing import Union

from diagram import FriezeK, Matching, eval_term, pad, point_label
from terms import Term

FORMATS = ("ascii", "svg")

_STEP = 60
_TOP_Y = 50
_BOTTOM_Y = 170
_ARC_DEPTH = 22


def _as_frieze(obj: Union[FriezeK, Term]) -> FriezeK:
    return obj if isinstance(obj, FriezeK) else eval_term(obj)


def _display_matching(m: Matching) -> Matching:
    # birim de en az bir dikey çizgiyle görünsün
    return pad(m, 1) if m.top == 0 and m.bottom == 0 else m


def render(obj: Union[FriezeK, Term], fmt: str = "ascii") -> str:
    frieze = _as_frieze(obj)
    if fmt == "ascii":
        return render_ascii(frieze)
    if fmt == "svg":
        return render_svg(frieze)
    raise ValueError(f"unknown render format {fmt!r}; expected ascii or svg")


# ═══════════════════════════════════════════════════════════════════
#  ASCII
# ═══════════════════════════════════════════════════════════════════

def render_ascii(frieze: FriezeK) -> str:
    """
    Üç satırlık ızgara: sütun numaraları, T satırı, B satırı.
    Her hücrede noktanın eşi yazılır; aynı sütundaki dikey iplik '|' olur.
    """
    m = _display_matching(frieze.matching)
    partner = m.partner_map()
    columns = max(m.top, m.bottom)

    def cell(x: int) -> str:
        y = partner[x]
        return "|" if y == -x else point_label(y)

    tops = [cell(j) if j <= m.top else "" for j in range(1, columns + 1)]
    bottoms = [cell(-i) if i <= m.bottom else "" for i in range(1, columns + 1)]
    width = max(len(s) for s in tops + bottoms + [str(columns)]) + 2

    def row(head: str, cells) -> str:
        return (head + "".join(c.rjust(width) for c in cells)).rstrip()

    lines = [
        row(" ", [str(c) for c in range(1, columns + 1)]),
        row("T", tops),
        row("B", bottoms),
        f"loops: {frieze.loops}",
    ]
    return "\n".join(lines) + "\n"


# ═══════════════════════════════════════════════════════════════════
#  SVG
# ═══════════════════════════════════════════════════════════════════

def _x(i: int) -> int:
    return _STEP * i


def render_svg(frieze: FriezeK) -> str:
    m = _display_matching(frieze.matching)
    columns = max(m.top, m.bottom)
    width = _STEP * (columns + 1) + (90 if frieze.loops else 0)
    height = _BOTTOM_Y + 40

    svg = (f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
           f'viewBox="0 0 {width} {height}">\n')
    svg += f'  <rect x="0" y="0" width="{width}" height="{height}" fill="#ffffff"/>\n'
    svg += (f'  <line x1="{_STEP // 2}" y1="{_TOP_Y}" x2="{width - _STEP // 2}" y2="{_TOP_Y}" '
            f'stroke="#cccccc" stroke-dasharray="4 4"/>\n')
    svg += (f'  <line x1="{_STEP // 2}" y1="{_BOTTOM_Y}" x2="{width - _STEP // 2}" y2="{_BOTTOM_Y}" '
            f'stroke="#cccccc" stroke-dasharray="4 4"/>\n')

    for a, b in sorted(m.pairs):
        if a > 0:
            svg += _arc(a, b, _TOP_Y, +1, "cup")
        elif b < 0:
            svg += _arc(-b, -a, _BOTTOM_Y, -1, "cap")
        else:
            svg += (f'  <polyline class="transversal" points="{_x(b)},{_TOP_Y} {_x(-a)},{_BOTTOM_Y}" '
                    f'fill="none" stroke="#1a237e" stroke-width="2"/>\n')

    for j in range(1, m.top + 1):
        svg += _point(j, _TOP_Y, _TOP_Y - 14)
    for i in range(1, m.bottom + 1):
        svg += _point(i, _BOTTOM_Y, _BOTTOM_Y + 24)

    if frieze.loops:
        cx = _STEP * (columns + 1) + 20
        cy = (_TOP_Y + _BOTTOM_Y) // 2
        svg += '  <g class="loop-legend">\n'
        svg += f'    <circle cx="{cx}" cy="{cy}" r="12" fill="none" stroke="#b71c1c" stroke-width="2"/>\n'
        svg += (f'    <text x="{cx + 18}" y="{cy + 5}" fill="#b71c1c" font-size="14">'
                f'{html.escape(f"× {frieze.loops}")}</text>\n')
        svg += '  </g>\n'

    svg += '</svg>\n'
    return svg


def _arc(i: int, j: int, y: int, direction: int, kind: str) -> str:
    depth = _ARC_DEPTH * (j - i) * direction
    x1, x2 = _x(i), _x(j)
    return (f'  <path class="{kind}" d="M {x1} {y} C {x1} {y + depth} {x2} {y + depth} {x2} {y}" '
            f'fill="none" stroke="#1a237e" stroke-width="2"/>\n')


def _point(i: int, y: int, label_y: int) -> str:
    out = f'  <circle cx="{_x(i)}" cy="{y}" r="3" fill="#000000"/>\n'
    out += (f'  <text x="{_x(i)}" y="{label_y}" text-anchor="middle" font-size="12" '
            f'fill="#424242">{i}</text>\n')
    return out
