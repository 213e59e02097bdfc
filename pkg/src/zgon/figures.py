"""DOT export of the AR quiver and SVG pictures of arcs on the infinity-gon.

Both writers are plain string builders; the layout is a deterministic function
of the embedding, so two runs give byte-identical files.
"""

from __future__ import annotations

import math
from collections import defaultdict
from fractions import Fraction

import networkx as nx

from .core import Gon
from .rep import Interval
from .stable import (
    Arc,
    almost_split_triangle,
    arcs,
    in_Hminus_shifted,
    in_Hplus,
    phi,
)


# -- DOT ----------------------------------------------------------------------------

def _q(s: str) -> str:
    return '"' + s.replace('"', r"\"") + '"'


def quiver_dot(g: nx.DiGraph, name: str = "ARquiver") -> str:
    """One digraph; a cluster per component label, dashed tau edges."""
    lines = [f"digraph {name} {{", "  rankdir=LR;", "  node [shape=plaintext];"]
    clusters = defaultdict(list)
    for a, data in g.nodes(data=True):
        clusters[data["component"]].append(a)
    for label in sorted(clusters):
        p, q, i = label
        lines.append(f"  subgraph cluster_{p}_{q}_{i} {{")
        lines.append(f"    label={_q(f'Z^({p},{q},{i})')};")
        for a in sorted(clusters[label]):
            lines.append(f"    {_q(str(a))};")
        lines.append("  }")
    for a, b in sorted(g.edges()):
        lines.append(f"  {_q(str(a))} -> {_q(str(b))};")
    # tau orbits: a ~> tau(a) when both are drawn
    nodes = set(g.nodes)
    for a in sorted(nodes):
        t = Arc(a.a1.shifted(2), a.a2.shifted(2))
        if t in nodes:
            lines.append(f"  {_q(str(a))} -> {_q(str(t))} [style=dashed, arrowhead=none, constraint=false];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def quiver_adjacency(g: nx.DiGraph) -> dict:
    """Structured listing: vertices with component labels, arrows, component count."""
    return {
        "vertices": [
            {"arc": str(a), "component": list(g.nodes[a]["component"])} for a in sorted(g.nodes)
        ],
        "arrows": [[str(a), str(b)] for a, b in sorted(g.edges())],
        "components": nx.number_weakly_connected_components(g),
    }


# -- SVG ----------------------------------------------------------------------------

SIZE = 480
RADIUS = 200
_DEFS = """<defs>
  <pattern id="hatch" width="6" height="6" patternUnits="userSpaceOnUse" patternTransform="rotate(45)">
    <line x1="0" y1="0" x2="0" y2="6" stroke="#c0392b" stroke-width="1.5"/>
  </pattern>
</defs>"""


def _xy(theta: Fraction) -> tuple[float, float]:
    t = math.pi * float(theta)
    c = SIZE / 2
    return round(c + RADIUS * math.cos(t), 3), round(c - RADIUS * math.sin(t), 3)


def _chord(gon: Gon, a: Arc, **attrs) -> str:
    (x1, y1), (x2, y2) = _xy(gon.embed(a.a1)), _xy(gon.embed(a.a2))
    extra = " ".join(f'{k.replace("_", "-")}="{v}"' for k, v in attrs.items())
    return f'<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" {extra}/>'


def _region(gon: Gon, members: list[Arc], fill: str, opacity: str) -> list[str]:
    """Shade the convex hull of the chord endpoints of ``members``."""
    if not members:
        return []
    angles = sorted({gon.embed(x) for b in members for x in (b.a1, b.a2)})
    pts = " ".join(f"{x},{y}" for x, y in map(_xy, angles))
    return [f'<polygon points="{pts}" fill="{fill}" fill-opacity="{opacity}" stroke="none"/>']


def _as_arc(obj) -> Arc:
    return phi(obj) if isinstance(obj, Interval) else obj


def gon_svg(gon: Gon, objects=(), *, window: int = 6, hammocks: bool = False,
            triangle: bool = False) -> str:
    """Picture of Z_m with chords for ``objects`` (arcs, or intervals through phi).

    ``hammocks`` shades H+ (solid) and H- of the shifted arc (hatched) for the
    first object; ``triangle`` adds its almost split triangle, middle terms dotted.
    """
    c = SIZE / 2
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" '
        f'viewBox="0 0 {SIZE} {SIZE}">',
        _DEFS,
        f'<circle cx="{c}" cy="{c}" r="{RADIUS}" fill="none" stroke="#555"/>',
    ]
    emb = gon.embedding
    for p in range(1, gon.m + 1):
        x, y = _xy(emb.accumulation(p))
        out.append(f'<circle cx="{x}" cy="{y}" r="5" fill="none" stroke="#000" stroke-width="2"/>')
    for z in gon.points(window):
        x, y = _xy(emb(z))
        out.append(f'<circle cx="{x}" cy="{y}" r="2" fill="#000"><title>{z}</title></circle>')
    chosen = [_as_arc(o) for o in objects]
    if chosen and hammocks:
        a = chosen[0]
        pool = arcs(gon, window)
        plus = [b for b in pool if in_Hplus(a, b)]
        minus = [b for b in pool if in_Hminus_shifted(a, b)]
        out += _region(gon, plus, "#2471a3", "0.35")
        out += _region(gon, minus, "url(#hatch)", "0.8")
    if chosen and triangle:
        t = almost_split_triangle(chosen[0])
        out.append(_chord(gon, t.left, stroke="#1e8449", stroke_width="2"))
        for b in t.middle:
            out.append(_chord(gon, b, stroke="#1e8449", stroke_width="2", stroke_dasharray="2,4"))
    for a in chosen:
        out.append(_chord(gon, a, stroke="#000", stroke_width="2.5"))
    out.append("</svg>")
    return "\n".join(out) + "\n"
