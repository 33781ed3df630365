"""Command line interface: python -m manetti <command> ..."""

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from .lattice import fmt, lattice_points

EXIT_OK, EXIT_USAGE, EXIT_MISMATCH = 0, 1, 2


class UsageError(Exception):
    pass


class Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _write(text: str, out=None):
    if out:
        p = Path(out)
        try:
            p.write_text(text, encoding="utf-8")
        except OSError as e:
            raise UsageError(f"cannot write {p}: {e.strerror or e}") from e
    else:
        sys.stdout.write(text)


def _json(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def _read_json_arg(value: str):
    if not value.startswith("@"):
        raise UsageError(f"expected @file, got {value!r}")
    p = Path(value[1:])
    try:
        return json.loads(p.read_text(encoding="utf-8"))
    except OSError as e:
        raise UsageError(f"cannot read {p}: {e.strerror or e}") from e
    except json.JSONDecodeError as e:
        raise UsageError(f"{p} is not valid JSON: {e}") from e


def _support(value: str):
    """(support, drop) from 'generic' or @file holding a point list or {support, drop}."""
    if value == "generic":
        return "generic", ()
    data = _read_json_arg(value)
    if isinstance(data, list):
        return [tuple(p) for p in data], ()
    if not isinstance(data, dict):
        raise UsageError("support file must hold a list of points or an object")
    sup = data.get("support", "generic")
    if sup != "generic":
        sup = [tuple(p) for p in sup]
    return sup, tuple(tuple(p) for p in data.get("drop", ()))


def _point(s: str) -> tuple:
    try:
        x, y = s.split(",")
        return int(x), int(y)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected x,y, got {s!r}") from None


# commands

def cmd_topograph(a):
    from .markov import topograph, word_str
    from .render import topograph_dot
    nodes = topograph(a.depth)
    if a.format == "dot":
        return _write(topograph_dot(nodes), a.out)
    rows = [{"triple": list(n.triple), "depth": n.depth,
             "word": None if n.word is None else word_str(n.word),
             "parent": None if n.parent is None else list(n.parent),
             "children": [list(c) for c in n.children]} for n in nodes]
    _write(_json({"depth": a.depth, "count": len(rows), "nodes": rows}), a.out)


def cmd_triangle(a):
    from .markov import classify_type, markov_triangle, word_str
    from .render import svg_diagram
    T = markov_triangle(a.word)
    if a.emit == "svg":
        return _write(svg_diagram(T), a.out)
    ty = classify_type(T.word) if len(T.word) else None
    data = {"word": word_str(T.word), "triple": list(T.triple),
            "vertices": T.polygon.to_json(),
            "eigendirections": [list(w) for w in T.eigendirections()],
            "edge_lengths": [fmt(x) for x in T.edge_lengths()],
            "area": fmt(T.polygon.area()),
            "type": None if ty is None else ty.tag}
    _write(_json(data), a.out)


def cmd_points(a):
    from .markov import markov_triangle, word_str
    T = markov_triangle(a.word)
    pts = sorted(lattice_points(T.polygon), key=lambda p: (p[1], p[0]))
    _write(_json({"word": word_str(T.word), "triple": list(T.triple), "count": len(pts),
                  "points": [list(p) for p in pts]}), a.out)


def cmd_hj(a):
    from .quotient import CyclicQuotient, continuant, hj_expand, is_wahl
    chain = hj_expand(a.n, a.q)
    w = is_wahl(CyclicQuotient(a.n, a.q))
    _write(_json({"n": a.n, "q": a.q, "chain": chain,
                  "continuant": list(continuant(chain)),
                  "wahl": {"kind": w.kind, "d": w.d, "n": w.n, "a": w.a, "flag": w.flag}}), a.out)


def _diagram(surface):
    from .classify import manetti_surface
    from .tropical import surface_diagram
    return surface_diagram(manetti_surface(surface).code)


def cmd_trop(a):
    from .render import svg_diagram
    from .tropical import displace_edges
    D = _diagram(a.surface)
    support, drop = _support(a.support)
    drop = drop + tuple(a.drop or ())
    D2, table = displace_edges(D, support=support, drop=drop)
    if a.emit == "svg":
        return _write(svg_diagram(D, highlight=[p for p in (a.highlight or ())]), a.out)
    _write(_json({"surface": a.surface, "diagram": D.to_json(), "table": table.to_json()}), a.out)


def cmd_discrepancy(a):
    from .classify import classify_surface, manetti_surface
    from .quotient import discrepancies
    from .tropical import displace_edges, resolution_fan
    if a.case:
        v = classify_surface(a.surface, a.case)
        data = v.to_json()
        verdicts = [v.verdict]
    else:
        D = _diagram(a.surface)
        support, drop = _support(a.support)
        drop = drop + tuple(a.drop or ())
        _, table = displace_edges(D, support=support, drop=drop)
        points, verdicts = [], []
        for k in sorted(D.kept):
            F = resolution_fan(D, k)
            if not F.chain:
                continue
            L = [table.row(lab).length for lab in F.labels]
            rep = discrepancies(F.chain, L)
            points.append({"vertex": k, "singularity": str(F.singularity), "chain": list(F.chain),
                           "edges": list(F.labels), "pairing": [fmt(x) for x in L], **rep.to_json()})
            verdicts.append(rep.verdict)
        data = {"surface": manetti_surface(a.surface).name, "points": points}
    _write(_json(data), a.out)
    if a.expect and a.expect not in verdicts:
        print(f"expected verdict {a.expect}, got {sorted(set(verdicts))}", file=sys.stderr)
        return EXIT_MISMATCH


def cmd_cover(a):
    from .cover import double_cover, from_json, graph_discrepancies, log_resolve
    G = from_json(_read_json_arg(a.config))
    R = log_resolve(G)
    C = double_cover(R)
    if a.format == "dot":
        return _write(C.to_dot(), a.out)
    comps = []
    for c in C.components():
        if len(c.nodes) and all(s is not None and s < 0 for _, s in c.nodes):
            try:
                alpha = [fmt(x) for x in graph_discrepancies(c)]
            except (ArithmeticError, ZeroDivisionError):
                alpha = None
        else:
            alpha = None
        comps.append({"nodes": [i for i, _ in c.nodes], "chain": c.chain(), "discrepancies": alpha})
    _write(_json({"resolved": R.to_json(), "cover": C.to_json(), "components": comps}), a.out)


EXPECTED_SURVIVORS = ["P2", "P(1,1,4)", "P(1,4,25)", "HP(5)"]
EXPECTED_DIMS = {("P(1,1,4)", "I"): 35, ("P(1,1,4)", "IIa"): 34, ("P(1,1,4)", "IIb"): 33,
                 ("P(1,1,4)", "IIc"): 32, ("P(1,4,25)", "I"): 34, ("P(1,4,25)", "IIa"): 33,
                 ("P(1,4,25)", "IIb"): 32, ("P(1,4,25)", "IIc"): 31, ("HP(5)", "I"): 35}


def cmd_classify(a):
    from .classify import full_classification
    from .render import report_markdown
    r = full_classification(a.depth)
    text = report_markdown(r) if a.format == "markdown" else r.dumps()
    _write(text, a.out)
    dims = {(s["base"], s["case"]): s["dimension"] for s in r.strata if s["base"] != "P2"}
    problems = []
    if r.surviving_bases != EXPECTED_SURVIVORS:
        problems.append(f"surviving bases {r.surviving_bases}")
    if dims != EXPECTED_DIMS:
        problems.append(f"stratum dimensions {dims}")
    if problems:
        print("classification mismatch: " + "; ".join(problems), file=sys.stderr)
        return EXIT_MISMATCH


def build_parser() -> argparse.ArgumentParser:
    p = Parser(prog="manetti", description="Octic double covers of Manetti surfaces.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True, parser_class=Parser)

    def add(name, fn, help):
        s = sub.add_parser(name, help=help)
        s.set_defaults(fn=fn)
        s.add_argument("--out", help="write here instead of stdout")
        return s

    s = add("topograph", cmd_topograph, "Markov triples up to a depth")
    s.add_argument("--depth", type=int, required=True)
    s.add_argument("--format", choices=("json", "dot"), default="json")

    s = add("triangle", cmd_triangle, "Markov triangle of a mutation word")
    s.add_argument("--word", default="", help="string of 0s and 1s")
    s.add_argument("--emit", choices=("json", "svg"), default="json")

    s = add("points", cmd_points, "lattice points of a Markov triangle")
    s.add_argument("--word", default="")

    s = add("hj", cmd_hj, "Hirzebruch-Jung chain of 1/n(1,q)")
    s.add_argument("n", type=int)
    s.add_argument("q", type=int)

    for name, fn, help in (("trop", cmd_trop, "displacement table of a surface"),
                           ("discrepancy", cmd_discrepancy, "discrepancies at the singular points")):
        s = add(name, fn, help)
        s.add_argument("--surface", required=True, help="P:a,b,c | HP:c | HPpair:a,b")
        s.add_argument("--support", default="generic", help="generic or @file.json")
        s.add_argument("--drop", type=_point, action="append", help="x,y to remove from the support")
        if name == "trop":
            s.add_argument("--emit", choices=("json", "svg"), default="json")
            s.add_argument("--highlight", type=_point, action="append")
        else:
            s.add_argument("--case", help="run a named case, e.g. IV or II(a)")
            s.add_argument("--expect", choices=("normal-lc-stratum", "not-log-canonical",
                                                "non-normal", "log-terminal-range", "boundary"))

    s = add("cover", cmd_cover, "log resolution and double cover of a curve configuration")
    s.add_argument("--config", required=True, help="@file.json")
    s.add_argument("--format", choices=("json", "dot"), default="json")

    s = add("classify", cmd_classify, "full classification report")
    s.add_argument("--depth", type=int, default=6)
    s.add_argument("--format", choices=("json", "markdown"), default="json")
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        rc = args.fn(args)
    except UsageError as e:
        print(f"manetti: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (ValueError, KeyError) as e:
        print(f"manetti {args.command}: {e}", file=sys.stderr)
        return EXIT_USAGE
    except ArithmeticError as e:
        print(f"manetti {args.command}: {e}", file=sys.stderr)
        return EXIT_MISMATCH
    return EXIT_OK if rc is None else rc


if __name__ == "__main__":
    sys.exit(main())
