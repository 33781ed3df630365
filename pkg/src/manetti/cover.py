"""Curve configurations with branch data and their branched double covers.

A configuration is a set of curves (nodes) and their intersection points.
Each edge records the local intersection number of two curves at a named
point; edges sharing a point name are concurrent, which is how triple
points and infinitely near tangencies are tracked through blow-ups.
"""

import json
from dataclasses import dataclass, replace
from fractions import Fraction
from itertools import count
from typing import Optional, Sequence

from .lattice import fmt, solve_linear
from .quotient import graph_matrix

KINDS = ("boundary", "exceptional", "branch")


class CoverError(ValueError):
    pass


@dataclass(frozen=True)
class Node:
    id: str
    square: Optional[int]      # None for the branch curve itself
    in_branch: bool = False
    kind: str = "exceptional"

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown node kind {self.kind!r}")
        if self.square is None and self.kind != "branch":
            raise ValueError(f"node {self.id} needs a square")


@dataclass(frozen=True)
class Meet:
    a: str
    b: str
    mult: int = 1
    point: str = ""

    def other(self, x):
        return self.b if x == self.a else self.a

    def has(self, x):
        return x in (self.a, self.b)


@dataclass(frozen=True)
class CurveGraph:
    nodes: tuple
    edges: tuple

    def __post_init__(self):
        ids = [n.id for n in self.nodes]
        if len(set(ids)) != len(ids):
            raise ValueError("duplicate node ids")
        for e in self.edges:
            if e.a not in ids or e.b not in ids or e.a == e.b:
                raise ValueError(f"bad edge {e}")
            if e.mult < 1:
                raise ValueError("edge multiplicities must be positive")

    def node(self, i) -> Node:
        for n in self.nodes:
            if n.id == i:
                return n
        raise KeyError(i)

    def ids(self):
        return [n.id for n in self.nodes]

    def at(self, point):
        return [e for e in self.edges if e.point == point]

    def through(self, point) -> list:
        """Curves passing through a point, in node order."""
        s = {x for e in self.at(point) for x in (e.a, e.b)}
        return [i for i in self.ids() if i in s]

    def points(self) -> list:
        seen = []
        for e in self.edges:
            if e.point not in seen:
                seen.append(e.point)
        return seen

    def to_json(self):
        return {
            "nodes": [{"id": n.id, "square": n.square, "in_branch": n.in_branch, "kind": n.kind}
                      for n in self.nodes],
            "edges": [{"a": e.a, "b": e.b, "mult": e.mult, "point": e.point} for e in self.edges],
        }


def curve_graph(nodes, edges) -> CurveGraph:
    """Build a configuration from loose tuples or dicts.

    Edges are (a, b), (a, b, mult) or (a, b, mult, point); an edge with no
    point gets a fresh one of its own.
    """
    ns = []
    for n in nodes:
        if isinstance(n, Node):
            ns.append(n)
        elif isinstance(n, dict):
            ns.append(Node(n["id"], n.get("square"), bool(n.get("in_branch", False)),
                           n.get("kind", "exceptional")))
        else:
            ns.append(Node(*n))
    es, fresh = [], count(1)
    for e in edges:
        if isinstance(e, Meet):
            es.append(e)
            continue
        if isinstance(e, dict):
            e = (e["a"], e["b"], e.get("mult", 1), e.get("point", ""))
        a, b, *rest = e
        m = rest[0] if rest else 1
        p = rest[1] if len(rest) > 1 else ""
        es.append(Meet(a, b, m, p))
    used = {e.point for e in es}
    out = []
    for e in es:
        if not e.point:
            p = f"p{next(fresh)}"
            while p in used:
                p = f"p{next(fresh)}"
            used.add(p)
            e = replace(e, point=p)
        out.append(e)
    return CurveGraph(tuple(ns), tuple(out))


def from_json(data) -> CurveGraph:
    if isinstance(data, str):
        data = json.loads(data)
    return curve_graph(data["nodes"], data["edges"])


def _fresh(existing, stem):
    i = 1
    while f"{stem}{i}" in existing:
        i += 1
    return f"{stem}{i}"


def _bump(n: Node, d: int) -> Node:
    return n if n.square is None else replace(n, square=n.square + d)


def blow_up(G: CurveGraph, *, point=None, edge=None, free=None, name=None) -> CurveGraph:
    """Blow up an intersection point (by name or by edge) or a free point on a curve.

    Curves through the point lose one from their square and meet the new
    -1 curve E. Curves that were tangent there (local number m >= 2) still
    meet each other, with number m - 1, at a common point of E.
    """
    if sum(x is not None for x in (point, edge, free)) != 1:
        raise ValueError("give exactly one of point, edge or free")
    ids = G.ids()
    name = name or _fresh(set(ids), "E")
    if name in ids:
        raise ValueError(f"node {name} already exists")
    pts = set(G.points())
    if free is not None:
        if free not in ids:
            raise ValueError(f"no node {free}")
        X = G.node(free)
        E = Node(name, -1, X.in_branch, "exceptional")
        nodes = tuple(_bump(n, -1) if n.id == free else n for n in G.nodes) + (E,)
        return CurveGraph(nodes, G.edges + (Meet(free, name, 1, _fresh(pts, "p")),))
    if edge is not None:
        a, b = edge
        hits = [e for e in G.edges if {e.a, e.b} == {a, b}]
        if not hits:
            raise ValueError(f"{a} and {b} do not meet")
        point = hits[0].point
    if point not in pts:
        raise ValueError(f"no intersection point {point}")
    on = G.through(point)
    odd = sum(G.node(x).in_branch for x in on) % 2 == 1
    E = Node(name, -1, odd, "exceptional")
    nodes = tuple(_bump(n, -1) if n.id in on else n for n in G.nodes) + (E,)
    keep = [e for e in G.edges if e.point != point]
    # tangent curves share a direction, so they stay together on E
    group = {x: x for x in on}

    def find(x):
        while group[x] != x:
            x = group[x]
        return x

    for e in G.at(point):
        if e.mult >= 2:
            group[find(e.a)] = find(e.b)
    new = []
    for root in dict.fromkeys(find(x) for x in on):
        cls = [x for x in on if find(x) == root]
        q = _fresh(pts, "p")
        pts.add(q)
        for x in cls:
            new.append(Meet(x, name, 1, q))
        for e in G.at(point):
            if e.a in cls and e.b in cls and e.mult > 1:
                new.append(Meet(e.a, e.b, e.mult - 1, q))
    return CurveGraph(nodes, tuple(keep + new))


def blow_down(G: CurveGraph, name: str, point: Optional[str] = None) -> CurveGraph:
    """Contract a -1 curve, undoing blow_up."""
    E = G.node(name)
    if E.square != -1:
        raise ValueError(f"{name} is not a -1 curve")
    on_e = [e for e in G.edges if e.has(name)]
    if any(e.mult != 1 for e in on_e):
        raise ValueError(f"{name} is not met transversally")
    p = point or _fresh(set(G.points()), "p")
    nbrs = [e.other(name) for e in on_e]
    where = {e.other(name): e.point for e in on_e}
    qs = set(where.values())
    nodes = tuple(_bump(n, 1) if n.id in nbrs else n for n in G.nodes if n.id != name)
    edges, done = [], set()
    for e in G.edges:
        if e.has(name):
            continue
        if e.point in qs:
            edges.append(Meet(e.a, e.b, e.mult + 1, p))
            done.add(frozenset((e.a, e.b)))
        else:
            edges.append(e)
    for i, x in enumerate(nbrs):
        for y in nbrs[i + 1:]:
            if frozenset((x, y)) not in done:
                edges.append(Meet(x, y, 1, p))
    return CurveGraph(nodes, tuple(edges))


def configuration_key(G: CurveGraph) -> tuple:
    """Nodes and intersection points with the point names forgotten."""
    pts = {}
    for e in G.edges:
        pts.setdefault(e.point, []).append((min(e.a, e.b), max(e.a, e.b), e.mult))
    return (tuple(sorted((n.id, n.square if n.square is not None else 0, n.square is None,
                          n.in_branch, n.kind) for n in G.nodes)),
            tuple(sorted(tuple(sorted(v)) for v in pts.values())))


def _needs_blowup(G: CurveGraph, point) -> bool:
    on = G.through(point)
    inb = [x for x in on if G.node(x).in_branch]
    if len(inb) >= 2:
        return True
    return bool(inb) and any(e.mult > 1 for e in G.at(point))


def log_resolve(G: CurveGraph, limit: Optional[int] = None) -> CurveGraph:
    """Blow up until the branch locus is a disjoint union of smooth curves.

    Points where two branch curves meet, or where a branch curve is tangent
    to anything, are blown up in order of appearance.
    """
    if limit is None:
        limit = sum(e.mult for e in G.edges) * (len(G.nodes) + 1) + 1
    for _ in range(limit):
        bad = next((p for p in G.points() if _needs_blowup(G, p)), None)
        if bad is None:
            return G
        G = blow_up(G, point=bad)
    raise RuntimeError("log resolution did not terminate within the step bound")


def branch_parity_adjust(G: CurveGraph, multiplicities: dict) -> CurveGraph:
    """Put a curve in the branch locus exactly when its multiplicity is odd.

    Curves missing from `multiplicities` keep their current flag.
    """
    for k in multiplicities:
        G.node(k)
    return CurveGraph(tuple(replace(n, in_branch=multiplicities[n.id] % 2 == 1)
                            if n.id in multiplicities else n for n in G.nodes), G.edges)


@dataclass(frozen=True)
class CoverGraph:
    nodes: tuple      # (id, square)
    edges: tuple      # (a, b, mult)
    source: tuple = ()  # (id, source id)

    def squares(self) -> dict:
        return dict(self.nodes)

    def neighbours(self, i) -> list:
        out = []
        for a, b, m in self.edges:
            if a == i:
                out += [b] * m
            elif b == i:
                out += [a] * m
        return out

    def components(self) -> list:
        seen, comps = set(), []
        for i, _ in self.nodes:
            if i in seen:
                continue
            stack, comp = [i], []
            seen.add(i)
            while stack:
                x = stack.pop()
                comp.append(x)
                for y in self.neighbours(x):
                    if y not in seen:
                        seen.add(y)
                        stack.append(y)
            comps.append(self.sub(comp))
        return comps

    def sub(self, ids) -> "CoverGraph":
        keep = set(ids)
        return CoverGraph(tuple(n for n in self.nodes if n[0] in keep),
                          tuple(e for e in self.edges if e[0] in keep and e[1] in keep),
                          tuple(s for s in self.source if s[0] in keep))

    def chain(self, start=None) -> Optional[list]:
        """Squares along the graph if it is a simple chain, else None.

        `start` picks which end to read from.
        """
        if len(self.nodes) == 1:
            return [self.nodes[0][1]]
        deg = {i: len(self.neighbours(i)) for i, _ in self.nodes}
        if any(d > 2 for d in deg.values()) or len(self.edges) != len(self.nodes) - 1:
            return None
        ends = [i for i, d in deg.items() if d == 1]
        if len(ends) != 2:
            return None
        if start is not None and start not in ends:
            raise ValueError(f"{start} is not an end of the chain")
        sq, order, prev = self.squares(), [start or ends[0]], None
        while len(order) < len(self.nodes):
            nxt = [y for y in self.neighbours(order[-1]) if y != prev]
            prev = order[-1]
            order.append(nxt[0])
        return [sq[i] for i in order]

    def to_json(self):
        return {"nodes": [{"id": i, "square": s} for i, s in self.nodes],
                "edges": [{"a": a, "b": b, "mult": m} for a, b, m in self.edges]}

    def to_dot(self, name="cover") -> str:
        lines = [f"graph {name} {{"]
        for i, s in self.nodes:
            lines.append(f'  "{i}" [label="{s}"];')
        for a, b, m in self.edges:
            for _ in range(m):
                lines.append(f'  "{a}" -- "{b}";')
        lines.append("}")
        return "\n".join(lines) + "\n"


def branch_incidences(G: CurveGraph, x: str) -> int:
    """Number of points of x where it meets the branch locus with odd order."""
    n = 0
    for p in G.points():
        hits = [e for e in G.at(p) if e.has(x) and G.node(e.other(x)).in_branch]
        n += sum(e.mult for e in hits) % 2
    return n


def _ramified(G: CurveGraph, point) -> bool:
    return sum(G.node(x).in_branch for x in G.through(point)) % 2 == 1


def double_cover(G: CurveGraph) -> CoverGraph:
    """Dual graph of the double cover branched along the in-branch curves.

    A branch curve of square s lifts to one curve of square s/2. A curve
    off the branch meeting it at 2k > 0 points lifts to one curve of square
    2s; one missing it lifts to two disjoint copies of square s (all curves
    here are rational, so the unbranched cover splits).
    """
    lifted = [n for n in G.nodes if n.square is not None]
    kind, nodes, source = {}, [], []
    for n in lifted:
        if n.in_branch:
            if n.square % 2:
                raise CoverError(f"cover not defined on this configuration: branch curve {n.id} "
                                 f"has odd square {n.square}")
            kind[n.id] = "half"
            nodes.append((n.id, n.square // 2))
            source.append((n.id, n.id))
            continue
        k = branch_incidences(G, n.id)
        if k % 2:
            raise CoverError(f"cover not defined on this configuration: {n.id} meets the branch "
                             f"locus at {k} points")
        if k:
            kind[n.id] = "double"
            nodes.append((n.id, 2 * n.square))
            source.append((n.id, n.id))
        else:
            kind[n.id] = "split"
            for c in (f"{n.id}.1", f"{n.id}.2"):
                nodes.append((c, n.square))
                source.append((c, n.id))
    edges = {}

    def put(a, b, m):
        key = (a, b) if a <= b else (b, a)
        edges[key] = edges.get(key, 0) + m

    for e in G.edges:
        if e.a not in kind or e.b not in kind:
            continue
        A, B = G.node(e.a), G.node(e.b)
        if A.in_branch and B.in_branch:
            raise CoverError(f"cover not defined on this configuration: branch curves {e.a} and "
                             f"{e.b} meet")
        ka, kb = kind[e.a], kind[e.b]
        if ka == "split" and kb == "split":
            put(f"{e.a}.1", f"{e.b}.1", e.mult)
            put(f"{e.a}.2", f"{e.b}.2", e.mult)
        elif ka == "split" or kb == "split":
            s, o = (e.a, e.b) if ka == "split" else (e.b, e.a)
            put(f"{s}.1", o, e.mult)
            put(f"{s}.2", o, e.mult)
        else:
            put(e.a, e.b, e.mult * (1 if _ramified(G, e.point) else 2))
    return CoverGraph(tuple(nodes), tuple((a, b, m) for (a, b), m in edges.items()),
                      tuple(source))


def lifted_count(G: CurveGraph) -> int:
    """Node count of double_cover(G) predicted from branch data alone."""
    total = 0
    for n in G.nodes:
        if n.square is None:
            continue
        if n.in_branch or branch_incidences(G, n.id):
            total += 1
        else:
            total += 2
    return total


def canonical_form(C: CoverGraph) -> tuple:
    """Isomorphism invariant code of a square-labelled multigraph.

    Colour refinement on (square, neighbour colours), then individualise a
    vertex of the first tied class and keep the least code over choices.
    """
    ids = [i for i, _ in C.nodes]
    sq = C.squares()
    adj = {i: [] for i in ids}
    for a, b, m in C.edges:
        adj[a].append((b, m))
        adj[b].append((a, m))

    def refine(col):
        while True:
            sig = {i: (col[i], tuple(sorted((col[j], m) for j, m in adj[i]))) for i in ids}
            ranks = {s: r for r, s in enumerate(sorted(set(sig.values())))}
            new = {i: ranks[sig[i]] for i in ids}
            if len(set(new.values())) == len(set(col.values())):
                return new
            col = new

    def code(col):
        return (tuple(sorted((col[i], sq[i]) for i in ids)),
                tuple(sorted((min(col[a], col[b]), max(col[a], col[b]), m) for a, b, m in C.edges)))

    def search(col):
        col = refine(col)
        classes = {}
        for i in ids:
            classes.setdefault(col[i], []).append(i)
        tied = [c for c in sorted(classes) if len(classes[c]) > 1]
        if not tied:
            return code(col)
        best = None
        for v in classes[tied[0]]:
            c2 = {i: 2 * col[i] + (i == v) for i in ids}
            got = search(c2)
            best = got if best is None or got < best else best
        return best

    ranks = {s: r for r, s in enumerate(sorted(set(sq.values())))}
    return search({i: ranks[sq[i]] for i in ids})


def isomorphic(A: CoverGraph, B: CoverGraph) -> bool:
    return canonical_form(A) == canonical_form(B)


def graph_discrepancies(C: CoverGraph) -> tuple:
    """Discrepancies of the exceptional curves of one resolution graph.

    Solves N a = (-2 - E_i^2)_i, adjunction for smooth rational curves.
    """
    ids = [i for i, _ in C.nodes]
    pos = {i: k for k, i in enumerate(ids)}
    N = graph_matrix([s for _, s in C.nodes], [(pos[a], pos[b], m) for a, b, m in C.edges])
    beta = [Fraction(-2 - s) for _, s in C.nodes]
    return tuple(solve_linear(N, beta))


# Graphs drawn in the classification of double covers over a -4 curve.

def star_graph() -> CoverGraph:
    nodes = [("C", -4)] + [(f"L{i}", -2) for i in range(1, 5)]
    return CoverGraph(tuple(nodes), tuple(("C", f"L{i}", 1) for i in range(1, 5)))


def _fork_chain(nodes, edges, stem, t, hub):
    prev = hub
    for j in range(1, t + 1):
        nodes.append((f"{stem}{j}", -2))
        edges.append((prev, f"{stem}{j}", 1))
        prev = f"{stem}{j}"
    for leaf in ("a", "b"):
        nodes.append((f"{stem}{leaf}", -2))
        edges.append((prev, f"{stem}{leaf}", 1))


def fork_graph(t: int) -> CoverGraph:
    """-4 centre with two -2 leaves and a chain of t -2 curves ending in a fork."""
    nodes, edges = [("C", -4), ("L1", -2), ("L2", -2)], [("C", "L1", 1), ("C", "L2", 1)]
    _fork_chain(nodes, edges, "R", t, "C")
    return CoverGraph(tuple(nodes), tuple(edges))


def double_fork_graph(t1: int, t2: int) -> CoverGraph:
    """-4 centre with two forked chains of lengths t1 and t2."""
    nodes, edges = [("C", -4)], []
    _fork_chain(nodes, edges, "R", t1, "C")
    _fork_chain(nodes, edges, "S", t2, "C")
    return CoverGraph(tuple(nodes), tuple(edges))


# Local branch germs at a point of B meeting the -4 curve C1 with number 2.

def _germ_smooth_tangent(tag):
    return [], [("C1", "B", 2, f"t{tag}")], 0


def _germ_two_branches(tag, k):
    """B has two smooth branches transverse to C1 meeting each other with number k."""
    b1, b2 = f"B{tag}a", f"B{tag}b"
    nodes = [Node(b1, None, True, "branch"), Node(b2, None, True, "branch")]
    p = f"t{tag}"
    return nodes, [("C1", b1, 1, p), ("C1", b2, 1, p), (b1, b2, k, p)], 0


def _germ_cusp(tag, k):
    """Resolved picture of a cusp y^2 = x^(2k+1) meeting C1 with number 2.

    Entered as the configuration after the log resolution: alternating
    -1 and -4 curves out of C1, ending in a -1 curve that meets B and a -2
    curve. It uses two of C1's four intersections with B.
    """
    nodes, edges, prev = [], [], "C1"
    for j in range(1, k + 1):
        f, g = f"F{tag}_{j}", f"G{tag}_{j}"
        nodes += [Node(f, -1), Node(g, -4, True)]
        edges += [(prev, f), (f, g)]
        prev = g
    last, tail = f"F{tag}_{k + 1}", f"H{tag}"
    nodes += [Node(last, -1), Node(tail, -2)]
    edges += [(prev, last), (last, "B"), (last, tail)]
    return nodes, edges, 2


def t_for_aq(q: int) -> int:
    """Fork-chain length produced by an A_q germ of B (A_0 meaning smooth)."""
    if q < 0:
        raise ValueError("A_q needs q >= 0")
    return q + 1


def _germ_for_t(tag, t):
    if t < 1:
        raise ValueError("t must be at least 1")
    if t == 1:
        return _germ_smooth_tangent(tag), False
    if t % 2 == 0:
        return _germ_two_branches(tag, t // 2), False
    return _germ_cusp(tag, (t - 1) // 2), True


def case_ii_configuration(germs: Sequence, transverse: int) -> CurveGraph:
    """The -4 curve C1 (in the branch locus) and B meeting it as described."""
    used = 0
    nodes = [Node("C1", -4, True), Node("B", None, True, "branch")]
    edges = [("C1", "B", 1, f"x{i}") for i in range(1, transverse + 1)]
    for n, e, u in germs:
        nodes += n
        edges += e
        used += u
    G = curve_graph(nodes, edges)
    if used:
        G = CurveGraph(tuple(_bump(x, -used) if x.id == "C1" else x for x in G.nodes), G.edges)
    return G


BOUND_T = 19
BOUND_T1_T2 = 38
CONJECTURED_T1_T2 = 21


@dataclass(frozen=True)
class FamilyResult:
    case: str
    params: tuple
    base: CurveGraph
    resolved: CurveGraph
    cover: CoverGraph
    graph: CoverGraph
    warnings: tuple = ()
    flags: tuple = ()

    def to_json(self):
        return {"case": self.case, "params": list(self.params), "graph": self.graph.to_json(),
                "warnings": list(self.warnings), "flags": list(self.flags)}


def _singular_part(C: CoverGraph) -> CoverGraph:
    # the component over C1 is the exceptional locus of the singularity
    for comp in C.components():
        if any(i == "C1" for i, _ in comp.nodes):
            return comp
    raise CoverError("no component over C1")


def family_graph(case: str, *params) -> FamilyResult:
    """Resolution graph of the double cover singularity over C1 in Case II.

    "IIa": four transverse points. "IIb", t: one germ giving a forked chain
    of length t. "IIc", t1, t2: two such germs.
    """
    warnings, flags = [], []
    if case == "IIa":
        if params:
            raise ValueError("IIa takes no parameters")
        G = case_ii_configuration([], 4)
    elif case == "IIb":
        (t,) = params
        (g, templated) = _germ_for_t("1", t)
        if templated:
            flags.append("odd t uses the cusp germ entered as its resolved configuration")
        if t > BOUND_T:
            warnings.append(f"t = {t} exceeds the bound t <= {BOUND_T}")
        G = case_ii_configuration([g], 2)
    elif case == "IIc":
        t1, t2 = params
        germs = []
        for tag, t in (("1", t1), ("2", t2)):
            g, templated = _germ_for_t(tag, t)
            germs.append(g)
            if templated:
                flags.append("odd t uses the cusp germ entered as its resolved configuration")
            if t > BOUND_T:
                warnings.append(f"t = {t} exceeds the per-germ bound {BOUND_T}")
        flags.append("two-germ case built by symmetry from the one-germ case")
        if t1 + t2 > BOUND_T1_T2:
            warnings.append(f"t1 + t2 = {t1 + t2} exceeds the bound {BOUND_T1_T2}")
        elif t1 + t2 > CONJECTURED_T1_T2:
            warnings.append(f"t1 + t2 = {t1 + t2} exceeds the conjectured bound {CONJECTURED_T1_T2}")
        G = case_ii_configuration(germs, 0)
    else:
        raise ValueError(f"unknown case {case!r}")
    R = log_resolve(G)
    C = double_cover(R)
    return FamilyResult(case, tuple(params), G, R, C, _singular_part(C),
                        tuple(warnings), tuple(dict.fromkeys(flags)))


def expected_family_graph(case: str, *params) -> CoverGraph:
    if case == "IIa":
        return star_graph()
    if case == "IIb":
        return fork_graph(*params)
    if case == "IIc":
        return double_fork_graph(*params)
    raise ValueError(f"unknown case {case!r}")


def smooth_subcase(letter: str) -> CurveGraph:
    """C1 and a smooth B in the five ways they can meet (numbers sum to 4)."""
    meets = {"a": [1, 1, 1, 1], "b": [2, 1, 1], "c": [2, 2], "d": [3, 1], "e": [4]}[letter]
    nodes = [Node("C1", -4, True), Node("B", None, True, "branch")]
    return curve_graph(nodes, [("C1", "B", m, f"x{i}") for i, m in enumerate(meets, 1)])


def case_i_configuration() -> CurveGraph:
    """Minimal resolution chain over 1/25(1,4) plus the -4 curve, with B."""
    nodes = [Node("C1", -7), Node("C2", -2), Node("C3", -2), Node("C4", -2), Node("C5", -4),
             Node("B", None, True, "branch")]
    edges = [("C1", "C2"), ("C2", "C3"), ("C3", "C4"), ("B", "C1"), ("B", "C4")]
    return curve_graph(nodes, edges)


def squares_json(C: CoverGraph):
    return [[i, fmt(s)] for i, s in C.nodes]
