"""Deterministic SVG, DOT, Markdown and JSON output."""

import json
from fractions import Fraction
from pathlib import Path

from .lattice import ConvexPolygon, lattice_points, q, sub, wedge
from .markov import MarkovTriangle, word_str

UNIT = 24          # pixels per lattice unit
MARGIN = 2         # lattice units around the drawing

GLYPHS = {"interior": "·", "boundary": "•", "origin": "∘",
          "star": "★", "on-cut": "∗", "node": "×"}


def _num(x) -> str:
    s = f"{float(x):.2f}".rstrip("0").rstrip(".")
    return "0" if s == "-0" else s


def _on_segment(p, a, b) -> bool:
    if wedge(sub(b, a), sub(p, a)) != 0:
        return False
    return min(a[0], b[0]) <= p[0] <= max(a[0], b[0]) and min(a[1], b[1]) <= p[1] <= max(a[1], b[1])


def _on_boundary(P: ConvexPolygon, p) -> bool:
    return any(_on_segment(p, a, b) for a, b in P.edges())


def point_markers(P: ConvexPolygon, cuts=(), highlight=()) -> list:
    """(point, marker class) for every lattice point, sorted bottom row first."""
    hi = {(q(x), q(y)) for x, y in highlight}
    out = []
    for x, y in sorted(lattice_points(P), key=lambda p: (p[1], p[0])):
        p = (q(x), q(y))
        if p in hi:
            kind = "star"
        elif p == (0, 0):
            kind = "origin"
        elif any(_on_segment(p, c.vertex, c.node) for c in cuts):
            kind = "on-cut"
        elif _on_boundary(P, p):
            kind = "boundary"
        else:
            kind = "interior"
        out.append(((x, y), kind))
    return out


def svg_diagram(obj, highlight=(), title: str = "", unit: int = UNIT) -> str:
    """Polygon, dashed branch cuts and marked lattice points at `unit` px per lattice unit.

    Accepts a TropDiagram, a MarkovTriangle or a ConvexPolygon.
    """
    cuts, node = (), None
    if isinstance(obj, ConvexPolygon):
        P = obj
    elif isinstance(obj, MarkovTriangle):
        P = obj.polygon
        title = title or f"Markov triangle {obj.triple}"
    else:
        P, cuts = obj.polygon, obj.cuts
        node = obj.node if cuts else None
        title = title or obj.name
    xs = [v[0] for v in P.vertices]
    ys = [v[1] for v in P.vertices]
    x0, y1 = min(xs) - MARGIN, max(ys) + MARGIN
    width = (max(xs) - min(xs) + 2 * MARGIN) * unit
    height = (max(ys) - min(ys) + 2 * MARGIN) * unit

    def X(x):
        return _num((q(x) - x0) * unit)

    def Y(y):
        return _num((y1 - q(y)) * unit)

    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{_num(width)}" height="{_num(height)}" '
           f'viewBox="0 0 {_num(width)} {_num(height)}" font-family="serif">']
    if title:
        out.append(f"  <title>{_escape(title)}</title>")
    pts = " ".join(f"{X(x)},{Y(y)}" for x, y in P.vertices)
    out.append(f'  <polygon class="polygon" points="{pts}" fill="none" stroke="black" stroke-width="1.5"/>')
    for c in cuts:
        out.append(f'  <line class="branch-cut" x1="{X(c.vertex[0])}" y1="{Y(c.vertex[1])}" '
                   f'x2="{X(c.node[0])}" y2="{Y(c.node[1])}" stroke="black" stroke-dasharray="6,4"/>')
    size = max(8, unit // 2)
    for (x, y), kind in point_markers(P, cuts, highlight):
        out.append(f'  <text class="{kind}" x="{X(x)}" y="{Y(y)}" font-size="{size}" '
                   f'text-anchor="middle" dominant-baseline="central">{GLYPHS[kind]}</text>')
    if node is not None:
        out.append(f'  <text class="node" x="{X(node[0])}" y="{Y(node[1])}" font-size="{size}" '
                   f'text-anchor="middle" dominant-baseline="central">{GLYPHS["node"]}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def _escape(s: str) -> str:
    return s.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;")


def topograph_dot(nodes) -> str:
    lines = ["digraph topograph {"]
    for n in nodes:
        w = "" if n.word is None else word_str(n.word)
        lines.append(f'  "{n.key}" [label="{n.triple}\\n{w}"];')
    for n in nodes:
        if n.parent is not None:
            lines.append(f'  "{n.parent}" -> "{n.key}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


def report_markdown(report) -> str:
    d = report.to_json() if hasattr(report, "to_json") else report
    lines = ["# Classification report", "",
             f"version {d['version']}, sweep depth {d['sweep']['depth']}, input hash `{d['input_hash'][:16]}`", "",
             "## Verdicts", "", "| case | verdict | basket |", "|---|---|---|"]
    for v in d["verdicts"]:
        lines.append(f"| {v['label']} | {v['verdict']} | {v['basket']} |")
    lines += ["", "## Strata", "", "| base | case | dimension |", "|---|---|---|"]
    for s in d["strata"]:
        lines.append(f"| {s['base']} | {s['case']} | {s['dimension']} |")
    lines += ["", "Surviving bases: " + ", ".join(d["surviving_bases"]), ""]
    bad = d["sweep"]["cross_check_disagreements"]
    if bad:
        lines += ["Sweep cross-check disagreements: " + ", ".join(bad), ""]
    return "\n".join(lines)


def to_jsonable(obj):
    if hasattr(obj, "to_json"):
        return obj.to_json()
    if isinstance(obj, Fraction):
        from .lattice import fmt
        return fmt(obj)
    return obj


def dumps_json(obj) -> str:
    return json.dumps(to_jsonable(obj), sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def emit(obj, fmt: str, path=None) -> str:
    """Render `obj` as json, svg, markdown or dot; write it to `path` if given."""
    if fmt == "json":
        text = dumps_json(obj)
    elif fmt == "svg":
        text = svg_diagram(obj)
    elif fmt == "markdown":
        text = report_markdown(obj)
    elif fmt == "dot":
        if isinstance(obj, list):
            text = topograph_dot(obj)
        else:
            text = obj.to_dot()
    else:
        raise ValueError(f"unknown format {fmt!r}")
    if path is not None:
        p = Path(path)
        try:
            p.write_text(text, encoding="utf-8")
        except OSError as e:
            raise OSError(f"cannot write {p}: {e.strerror or e}") from e
    return text


def fig_diagrams() -> dict:
    """The diagrams drawn for P(1,1,4), HP(5) and HP(29)."""
    from .tropical import surface_diagram
    return {"P(1,1,4)": svg_diagram(surface_diagram("P:1,1,4"), title="P(1,1,4)"),
            "HP(5)": svg_diagram(surface_diagram("HP:5"), title="HP(5)"),
            "HP(29)": svg_diagram(surface_diagram("HP:29"), title="HP(29)")}


__all__ = ["UNIT", "GLYPHS", "point_markers", "svg_diagram", "topograph_dot",
           "report_markdown", "dumps_json", "emit", "fig_diagrams"]
