"""Static SVG number-line rulers for jump spectra.

Each ruler is a horizontal axis from 0 to the cutoff with one tick per jump.
Tick positions are the only decimals in the output; every tick carries its
exact value in a ``data-value`` attribute and a ``<title>``.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence
from xml.sax.saxutils import escape, quoteattr

from .algebra import format_rational

WIDTH = 800
MARGIN = 40
ROW_HEIGHT = 90
TICK = 12


def _x(value: Fraction, cutoff: Fraction) -> str:
    return f"{MARGIN + float(value / cutoff) * (WIDTH - 2 * MARGIN):.3f}"


def _short(value: Fraction) -> str:
    return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"


def ruler_svg(rows: Sequence[tuple[str, Sequence[Fraction]]], cutoff: Fraction) -> str:
    """One ruler per ``(label, jumps)`` row, stacked top to bottom on a shared scale."""
    cutoff = Fraction(cutoff)
    if cutoff <= 0:
        raise ValueError("cutoff must be positive")
    height = ROW_HEIGHT * len(rows) + MARGIN
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{WIDTH}" height="{height}" '
        f'viewBox="0 0 {WIDTH} {height}">',
    ]
    for r, (label, jumps) in enumerate(rows):
        y = MARGIN + r * ROW_HEIGHT + TICK
        out.append(f'  <g class="ruler" data-label={quoteattr(label)} data-count="{len(jumps)}">')
        out.append(f'    <text x="{MARGIN}" y="{y - TICK - 6}" font-size="13">{escape(label)}</text>')
        out.append(
            f'    <line class="axis" x1="{MARGIN}" y1="{y}" x2="{WIDTH - MARGIN}" y2="{y}" stroke="black"/>'
        )
        for k in range(math.floor(cutoff) + 1):
            xs = _x(Fraction(k), cutoff)
            out.append(f'    <text class="integer" x="{xs}" y="{y + 2 * TICK + 6}" font-size="10" '
                       f'text-anchor="middle">{k}</text>')
        for j in jumps:
            j = Fraction(j)
            xs = _x(j, cutoff)
            exact = format_rational(j)
            out.append(
                f'    <line class="tick" data-value="{exact}" x1="{xs}" y1="{y - TICK}" x2="{xs}" y2="{y + TICK}" '
                f'stroke="black"><title>{_short(j)}</title></line>'
            )
        if jumps:
            first = Fraction(jumps[0])
            out.append(f'    <text class="first" x="{_x(first, cutoff)}" y="{y - TICK - 2}" font-size="10" '
                       f'text-anchor="middle">{_short(first)}</text>')
        out.append("  </g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"


def spectrum_csv(jumps: Sequence[Fraction], multiplicities: Sequence[int] | None) -> str:
    lines = ["value,multiplicity"]
    for i, x in enumerate(jumps):
        m = "" if multiplicities is None else str(multiplicities[i])
        lines.append(f"{format_rational(x)},{m}")
    return "\n".join(lines) + "\n"
