"""Almost-toric base diagrams, resolution fans and the edge-displacement engine."""

from dataclasses import dataclass, replace
from fractions import Fraction
from math import isqrt
from typing import Optional, Sequence

from .lattice import (ConvexPolygon, Mat2, add, dot, fmt,
                      lattice_points, primitive, pt, rot_cw, shear,
                      shear_inv, sub, wedge)
from .markov import (BARYCENTRE, MarkovTriangle, markov_triangle,
                     mutate_polygon, seed_triangle, wahl_vertex,
                     word_triple, _ray_exit)
from .quotient import CyclicQuotient, continuant

GENERIC = "generic"
BOUNDARY_NAMES = ("e_x", "e_y", "e_z")   # edge opposite p0, p1, p2


@dataclass(frozen=True)
class BranchCut:
    vertex: tuple
    node: tuple
    direction: tuple
    monodromy: Mat2

    def to_json(self):
        return {"vertex": [fmt(x) for x in self.vertex], "node": [fmt(x) for x in self.node],
                "direction": list(self.direction), "monodromy": self.monodromy.to_json()}


def make_cut(vertex, node) -> BranchCut:
    vertex, node = pt(*vertex), pt(*node)
    w = primitive(sub(node, vertex))
    M = shear_inv(w)
    assert M.det() == 1 and M(w) == w
    return BranchCut(vertex, node, w, M)


@dataclass(frozen=True)
class Ray:
    """Half-plane <u, normal> >= -offset, u measured from the node."""
    label: str
    normal: tuple
    offset: Fraction
    home: Optional[int] = None      # triangle vertex the ray belongs to
    kind: str = "boundary"


@dataclass(frozen=True)
class TropDiagram:
    polygon: ConvexPolygon
    rays: tuple
    cuts: tuple = ()
    node: tuple = BARYCENTRE
    triangle: Optional[MarkovTriangle] = None
    kept: tuple = ()
    name: str = ""
    flags: tuple = ()

    def ray(self, label) -> Ray:
        for r in self.rays:
            if r.label == label:
                return r
        raise KeyError(label)

    def labels(self):
        return [r.label for r in self.rays]

    def cut_at(self, k: int) -> Optional[BranchCut]:
        if self.triangle is None:
            return None
        v = self.triangle.vertices[k]
        return next((c for c in self.cuts if c.vertex == v), None)

    def table_labels(self):
        """Edges reported in displacement tables, in clockwise order.

        Resolution edges always; a boundary edge only when both of its ends
        are kept singular vertices (edges meeting a traded corner merge).
        """
        out = []
        for r in self.rays:
            if r.kind == "resolution":
                out.append(r.label)
            elif self.triangle is not None:
                ends = [k for k in range(3) if k != BOUNDARY_NAMES.index(r.label)]
                if all(k in self.kept and self.triangle.triple[k] > 1 for k in ends):
                    out.append(r.label)
        return out

    def to_json(self):
        return {
            "name": self.name,
            "polygon": self.polygon.to_json(),
            "node": [fmt(x) for x in self.node],
            "rays": [{"label": r.label, "normal": list(r.normal), "offset": fmt(r.offset),
                      "kind": r.kind} for r in self.rays],
            "cuts": [c.to_json() for c in self.cuts],
            "flags": list(self.flags),
        }


def halfplane_polygon(rays: Sequence[Ray], node=BARYCENTRE) -> ConvexPolygon:
    """Recover the polygon {x : <x - node, rho> >= -b} from its rays."""
    cands = set()
    for i, r in enumerate(rays):
        for s in rays[i + 1:]:
            det = wedge(r.normal, s.normal)
            if det == 0:
                continue
            # <x, r> = -b_r, <x, s> = -b_s relative to node
            c1, c2 = -r.offset, -s.offset
            x = Fraction(c1 * s.normal[1] - c2 * r.normal[1], det)
            y = Fraction(r.normal[0] * c2 - s.normal[0] * c1, det)
            cands.add((x, y))
    ok = [p for p in cands if all(dot(p, r.normal) >= -r.offset for r in rays)]
    return ConvexPolygon([add(p, node) for p in ok])


def _offset(P: ConvexPolygon, rho, node=BARYCENTRE) -> Fraction:
    return -min(dot(sub(v, node), rho) for v in P.vertices)


def _bezout(a: int, b: int) -> tuple:
    """(x, y) with x a + y b = 1 for coprime a, b."""
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        t = a // b
        a, b = b, a - t * b
        x0, x1 = x1, x0 - t * x1
        y0, y1 = y1, y0 - t * y1
    if a == -1:
        return -x0, -y0
    if a != 1:
        raise ValueError("vector is not primitive")
    return x0, y0


def fan_rays(r_in, r_out) -> list:
    """Lattice rays strictly between r_in and r_out on the boundary of the cone hull."""
    n = wedge(r_in, r_out)
    s, n = (1 if n > 0 else -1), abs(n)
    if n == 0:
        raise ValueError("degenerate cone")
    if n == 1:
        return []
    # r1 = (r_out + k r_in) / n; read k off in a basis (r_in, u) with u ^ r_in = 1
    x, y = _bezout(r_in[0], r_in[1])
    u = (y, -x)
    k = wedge(r_out, u) % n
    r1 = ((r_out[0] + k * r_in[0]) // n, (r_out[1] + k * r_in[1]) // n)
    if add(r_out, (k * r_in[0], k * r_in[1])) != (n * r1[0], n * r1[1]) or wedge(r_in, r1) != s:
        raise ArithmeticError("no first resolution ray")
    rays = [r_in, r1]
    while rays[-1] != r_out:
        a, b = rays[-2], rays[-1]
        # smallest d keeping d*b - a inside the cone
        num, den = s * wedge(a, r_out), s * wedge(b, r_out)
        d = -(-num // den)
        rays.append((d * b[0] - a[0], d * b[1] - a[1]))
        if len(rays) > 10 ** 5:
            raise ArithmeticError("fan recursion did not close")
    return rays[1:-1]


def chain_of_fan(r_in, rays, r_out) -> list:
    seq = [r_in, *rays, r_out]
    out = []
    for i in range(1, len(seq) - 1):
        t = add(seq[i - 1], seq[i + 1])
        k = t[0] // seq[i][0] if seq[i][0] else t[1] // seq[i][1]
        if (k * seq[i][0], k * seq[i][1]) != t:
            raise ArithmeticError("rays fail the fan-order check")
        out.append(k)
    return out


@dataclass(frozen=True)
class ResolutionFan:
    vertex: int
    point: tuple
    rays: tuple
    chain: tuple
    singularity: CyclicQuotient
    labels: tuple
    i0: Optional[int] = None      # position (1-based) of the ray orthogonal to w0
    i1: Optional[int] = None

    def to_json(self):
        return {"vertex": self.vertex, "point": [fmt(x) for x in self.point],
                "rays": [list(r) for r in self.rays], "chain": list(self.chain),
                "singularity": str(self.singularity), "labels": list(self.labels),
                "i0": self.i0, "i1": self.i1}


def _boundary_normals(T: MarkovTriangle, k: int):
    """Inward normals of the edges entering and leaving vertex k clockwise."""
    V = T.vertices
    p, nxt, prv = V[k], V[(k + 1) % 3], V[(k - 1) % 3]
    d = primitive(sub(nxt, p))
    r_in = (-d[1], d[0])
    d = primitive(sub(p, prv))
    r_out = (-d[1], d[0])
    return r_in, r_out


def _vertex_fan(T: MarkovTriangle, k: int, start: int):
    r_in, r_out = _boundary_normals(T, k)
    rays = fan_rays(r_in, r_out)
    chain = chain_of_fan(r_in, rays, r_out)
    n = abs(wedge(r_in, r_out))
    s = CyclicQuotient(n, continuant(chain)[1] if chain else 0) if n > 1 else CyclicQuotient(1, 0)
    labels = tuple(f"e{start + i}" for i in range(len(rays)))
    ws = T.eigendirections()
    marks = []
    for w in ws[:2]:
        hit = [i + 1 for i, r in enumerate(rays) if dot(r, w) == 0]
        marks.append(hit[0] if hit else None)
    return ResolutionFan(k, T.vertices[k], tuple(rays), tuple(chain), s, labels, *marks)


def resolution_fan(D: TropDiagram, k: int, s: Optional[CyclicQuotient] = None) -> ResolutionFan:
    if D.triangle is None:
        raise ValueError("diagram has no Markov triangle")
    order = [2, 1, 0]
    start = 1
    for j in order:
        F = _vertex_fan(D.triangle, j, start)
        if j == k:
            if s is not None and not s.same_as(F.singularity):
                raise ValueError(f"vertex carries {F.singularity}, not {s}")
            return F
        if j in D.kept:
            start += len(F.rays)
    raise IndexError(k)


def triangle_diagram(T: MarkovTriangle, traded=(), node=BARYCENTRE, name="") -> TropDiagram:
    """Diagram of T with nodal trades at the listed vertex indices.

    Trading a smooth corner is a no-op and is flagged.
    """
    flags = []
    cuts = []
    kept = []
    for k in range(3):
        if k in traded:
            if T.triple[k] == 1:
                flags.append(f"vertex p{k} is smooth: nodal trade omitted")
                kept.append(k)
                continue
            wv = T.wahl(k)
            c = make_cut(T.vertices[k], node)
            if c.direction != primitive(wv.eigendirection):
                raise ValueError("node is not on the eigenline")
            cuts.append(c)
        else:
            kept.append(k)
    P = T.polygon
    rays = []
    start = 1
    for opp_name, k in (("e_y", 2), ("e_x", 1), ("e_z", 0)):
        opp = BOUNDARY_NAMES.index(opp_name)
        a, b = [T.vertices[j] for j in range(3) if j != opp]
        d = primitive(sub(b, a))
        rho = (-d[1], d[0])
        if dot(sub(T.vertices[opp], a), rho) < 0:
            rho = (-rho[0], -rho[1])
        rays.append(Ray(opp_name, rho, _offset(P, rho, node), 2 if opp_name != "e_z" else None))
        if k in kept and T.triple[k] > 1:
            F = _vertex_fan(T, k, start)
            for lab, r in zip(F.labels, F.rays):
                rays.append(Ray(lab, r, _offset(P, r, node), k, "resolution"))
            start += len(F.rays)
    return TropDiagram(P, tuple(rays), tuple(cuts), node, T, tuple(kept), name, tuple(flags))


def nodal_trade(D: TropDiagram, vertex, node=None) -> TropDiagram:
    """Replace a corner by a branch cut running to a node on its eigenline."""
    v = pt(*vertex)
    if D.triangle is not None:
        k = D.triangle.vertices.index(v)
        traded = [j for j in range(3) if j not in D.kept] + [k]
        return triangle_diagram(D.triangle, traded, D.node if node is None else pt(*node), D.name)
    wv = wahl_vertex(D.polygon, v)
    if wv.index == 1 and node is None:
        return replace(D, flags=D.flags + (f"corner {v} is smooth: nodal trade omitted",))
    node = pt(*node) if node is not None else D.node
    c = make_cut(v, node)
    if c.direction != wv.eigendirection:
        raise ValueError("node is not on the eigenline")
    return replace(D, cuts=D.cuts + (c,))


def untrade(D: TropDiagram, vertex) -> TropDiagram:
    """Slide a node back into its corner, restoring the singular vertex."""
    v = pt(*vertex)
    keep = tuple(c for c in D.cuts if c.vertex != v)
    if len(keep) == len(D.cuts):
        raise ValueError(f"no branch cut at {v}")
    return replace(D, cuts=keep)


def polygon_diagram(verts, node=None, name="") -> TropDiagram:
    P = ConvexPolygon([pt(*v) for v in verts])
    node = pt(*node) if node is not None else _concurrence(P)
    V = P.vertices
    rays = []
    for i in range(len(V)):
        d = primitive(sub(V[(i + 1) % len(V)], V[i]))
        rho = (-d[1], d[0])
        rays.append(Ray(f"s{i}", rho, _offset(P, rho, node)))
    return TropDiagram(P, tuple(rays), (), node, None, (), name)


def _concurrence(P: ConvexPolygon):
    """Common point of the eigenlines of P, or the first vertex average if none."""
    lines = []
    for v in P.vertices:
        try:
            wv = wahl_vertex(P, v)
        except ValueError:
            continue
        lines.append((v, wv.eigendirection))
    if len(lines) >= 2:
        (p, w), (r, u) = lines[0], lines[1]
        den = wedge(w, u)
        if den:
            t = Fraction(wedge(sub(r, p), u), den)
            x = add(p, (t * w[0], t * w[1]))
            if all(wedge(sub(x, a), b) == 0 for a, b in lines):
                return x
    n = len(P.vertices)
    return (sum(v[0] for v in P.vertices) / n, sum(v[1] for v in P.vertices) / n)


def mutate_diagram(D: TropDiagram, vertex, clockwise: bool, node=None) -> TropDiagram:
    """Trade at `vertex` and mutate: the new cut starts where the eigenline exits.

    Existing cuts in the sheared piece move with it.
    """
    P = D.polygon
    v = pt(*vertex)
    wv = wahl_vertex(P, v)
    w = wv.eigendirection
    node = pt(*node) if node is not None else D.node
    if wedge(sub(node, v), w) != 0:
        raise ValueError("node is not on the eigenline")
    exit_pt = _ray_exit(P, v, w)
    side = 1 if wedge(w, wv.u1) > 0 else -1
    if clockwise:
        M, moved = shear_inv(w), -side
    else:
        M, moved = shear(w), side

    def f(x):
        return add(v, M(sub(x, v)))

    cuts = []
    for c in D.cuts:
        s = wedge(w, sub(c.vertex, v))
        if s * moved > 0:
            cuts.append(make_cut(f(c.vertex), f(c.node)))
        else:
            cuts.append(c)
    cuts.append(make_cut(exit_pt, node))
    Q = mutate_polygon(P, v, clockwise)
    out = polygon_diagram(Q.vertices, node, D.name)
    return replace(out, cuts=tuple(cuts))


def appendix_sequence():
    """The mutation sequence from the moment triangle of the plane to the
    single-cut diagram with a 1/25(1,4) corner. Returns the list of stages."""
    D0 = polygon_diagram([(0, 0), (10, 0), (0, 10)], name="plane")
    D1 = mutate_diagram(D0, (10, 0), clockwise=False, node=(2, 4))
    D2 = mutate_diagram(D1, (20, 0), clockwise=False, node=(5, 3))
    D3 = untrade(D2, (0, 4))
    return [D0, D1, D2, replace(D3, name="HP(5)")]


# resolving a singular corner of a diagram with cuts

@dataclass(frozen=True)
class BoundaryEdge:
    name: str
    direction: tuple
    nodes: int = 0


@dataclass(frozen=True)
class CutStage:
    label: str
    edges: tuple

    def directions(self):
        return [e.direction for e in self.edges]

    def squares(self):
        E = self.edges
        out = []
        for i, e in enumerate(E):
            t = add(E[i - 1].direction, E[(i + 1) % len(E)].direction)
            try:
                out.append(-_multiple(t, e.direction) - e.nodes)
            except ArithmeticError:
                out.append(None)      # a neighbouring corner is not smooth
        return out

    def hirzebruch(self) -> Optional[int]:
        s = self.squares()
        if len(s) != 4:
            return None
        for i in range(4):
            r = s[i:] + s[:i]
            if r[0] == 0 and r[2] == 0 and r[1] == -r[3]:
                return abs(r[1])
        return None

    def to_json(self):
        return {"label": self.label,
                "edges": [{"name": e.name, "direction": list(e.direction), "nodes": e.nodes}
                          for e in self.edges],
                "squares": self.squares()}


def _multiple(t, d):
    k = t[0] // d[0] if d[0] else t[1] // d[1]
    if (k * d[0], k * d[1]) != t:
        raise ArithmeticError(f"{t} is not a multiple of {d}")
    return k


def _clockwise_edges(P: ConvexPolygon):
    V = list(reversed(P.vertices))
    V = V[-1:] + V[:-1]      # start at the least vertex, clockwise
    out = []
    for i in range(len(V)):
        out.append((V[i], V[(i + 1) % len(V)], primitive(sub(V[(i + 1) % len(V)], V[i]))))
    return out


def _merge_parallel(edges):
    out = list(edges)
    i = 0
    while len(out) > 3 and i < len(out):
        j = (i + 1) % len(out)
        if out[i].direction == out[j].direction:
            out[i] = BoundaryEdge(out[i].name + "+" + out[j].name, out[i].direction,
                                  out[i].nodes + out[j].nodes)
            del out[j]
            i = 0
            continue
        i += 1
    return out


def resolve_diagram_cuts(D: TropDiagram) -> list:
    """Make the singular corner Delzant, then blow down to a minimal toric surface.

    Returns the stages: resolved corner, branch cut changed, non-toric
    blow-down, toric blow-downs. A diagram without singular corners yields
    a single unchanged stage.
    """
    P = D.polygon
    cut_vertices = {c.vertex for c in D.cuts}
    sing = []
    for v in P.vertices:
        try:
            wv = wahl_vertex(P, v)
        except ValueError:
            continue
        if wv.index > 1 and v not in cut_vertices:
            sing.append(v)
    cw = _clockwise_edges(P)
    names = {}
    for i, (a, b, _) in enumerate(cw):
        names[(a, b)] = f"s{i}"
    if not sing:
        return [CutStage("unchanged", tuple(BoundaryEdge(names[(a, b)], d) for a, b, d in cw))]
    if len(sing) > 1:
        raise ValueError("more than one singular corner")
    corner = sing[0]
    edges = []
    cut_after = {}
    for i, (a, b, d) in enumerate(cw):
        edges.append(BoundaryEdge(names[(a, b)], d))
        if b == corner:
            nxt = cw[(i + 1) % len(cw)][2]
            r_in, r_out = rot_cw(d), rot_cw(nxt)
            for j, r in enumerate(fan_rays(r_in, r_out)):
                edges.append(BoundaryEdge(f"r{j + 1}", (-r[1], r[0])))
        if b in cut_vertices:
            cut_after[len(edges) - 1] = next(c for c in D.cuts if c.vertex == b)
    stages = [CutStage("resolved", tuple(edges))]
    for pos, c in sorted(cut_after.items(), reverse=True):
        w = c.direction
        par = [i for i, e in enumerate(edges) if e.name.startswith("r") and wedge(e.direction, w) == 0]
        if not par:
            raise ValueError("no resolution edge is parallel to the branch cut")
        j = par[0]
        span = list(range(j + 1, pos + 1)) if j < pos else list(range(j + 1, len(edges))) + list(range(0, pos + 1))
        chosen = None
        for M in (shear(w), shear_inv(w)):
            trial = list(edges)
            for i in span:
                e = trial[i]
                trial[i] = BoundaryEdge(e.name, primitive(M(e.direction)), e.nodes)
            nxt = trial[(pos + 1) % len(trial)]
            if trial[pos].direction == nxt.direction:
                chosen = trial
                break
        if chosen is None:
            raise ValueError("inconsistent cut data: no shear straightens the cut corner")
        chosen[j] = BoundaryEdge(chosen[j].name, chosen[j].direction, chosen[j].nodes + 1)
        edges = _merge_parallel(chosen)
    stages.append(CutStage("cut changed", tuple(edges)))
    edges = [BoundaryEdge(e.name, e.direction, max(e.nodes - 1, 0)) for e in edges]
    stages.append(CutStage("non-toric blow-down", tuple(edges)))
    while True:
        st = CutStage("", tuple(edges))
        sq = st.squares()
        # among several -1 edges contract the clockwise-last one
        hits = [i for i, s in enumerate(sq) if s == -1 and edges[i].nodes == 0]
        hit = hits[-1] if hits else None
        if hit is None or len(edges) <= 3:
            break
        del edges[hit]
    stages.append(CutStage("toric blow-down", tuple(edges)))
    return stages


# surfaces

@dataclass(frozen=True)
class SurfaceId:
    kind: str            # "P", "HP", "HPpair"
    numbers: tuple

    def __str__(self):
        return f"{self.kind}:{','.join(map(str, self.numbers))}"


def parse_surface(s: str) -> SurfaceId:
    try:
        kind, rest = s.split(":", 1)
        nums = tuple(int(x) for x in rest.split(","))
    except ValueError:
        raise ValueError(f"cannot parse surface {s!r}; use P:a,b,c, HP:c or HPpair:a,b") from None
    want = {"P": 3, "HP": 1, "HPpair": 2}
    if kind not in want or len(nums) != want[kind]:
        raise ValueError(f"cannot parse surface {s!r}; use P:a,b,c, HP:c or HPpair:a,b")
    if any(n <= 0 for n in nums):
        raise ValueError("surface parameters must be positive")
    return SurfaceId(kind, nums)


def find_triangle(contains: Sequence[int], max_len: int = 16) -> MarkovTriangle:
    """The Markov triangle of the smallest triple containing all the given numbers."""
    need = sorted(contains)
    for t in ((1, 1, 1), (1, 1, 2)):
        if _contains(t, need):
            return seed_triangle(t)
    frontier = [()]
    best = None
    for _ in range(max_len + 1):
        nxt = []
        for w in frontier:
            t = word_triple(w)
            if _contains(t, need) and (best is None or max(t) < max(best[1])):
                best = (w, t)
            if max(t) <= max(need) * 3 * max(need):
                nxt += [w + (0,), w + (1,)]
        if best is not None:
            break
        frontier = [w for w in nxt if min(word_triple(w)) <= max(need)]
        if not frontier:
            break
    if best is None:
        raise ValueError(f"no Markov triple contains {need}")
    return markov_triangle(best[0])


def _contains(t, need):
    pool = list(t)
    for n in need:
        if n not in pool:
            return False
        pool.remove(n)
    return True


def surface_diagram(sid) -> TropDiagram:
    if isinstance(sid, str):
        sid = parse_surface(sid)
    if sid.kind == "P":
        roots = []
        for w in sid.numbers:
            r = isqrt(w)
            if r * r != w:
                raise ValueError(f"weight {w} is not a square")
            roots.append(r)
        T = find_triangle(roots)
        if sorted(T.triple) != sorted(roots):
            raise ValueError(f"{tuple(roots)} is not a Markov triple")
        return triangle_diagram(T, (), name=str(sid))
    T = find_triangle(sid.numbers)
    keep = list(sid.numbers)
    kept = []
    for k, x in enumerate(T.triple):
        if x in keep:
            keep.remove(x)
            kept.append(k)
    traded = [k for k in range(3) if k not in kept and T.triple[k] > 1]
    return triangle_diagram(T, traded, name=str(sid))


# displacement engine

@dataclass(frozen=True)
class EdgeRow:
    label: str
    normal: tuple
    length: Fraction
    displacement: Fraction
    btilde: Fraction
    transported: tuple = ()
    flag: Optional[str] = None

    def to_json(self):
        return {"edge": self.label, "normal": list(self.normal), "length": fmt(self.length),
                "displacement": fmt(self.displacement), "btilde": fmt(self.btilde),
                "transported": list(self.transported), "flag": self.flag}


@dataclass(frozen=True)
class DisplacementTable:
    rows: tuple
    tabulated: tuple
    support_size: int
    flags: tuple = ()

    def row(self, label) -> EdgeRow:
        for r in self.rows:
            if r.label == label:
                return r
        raise KeyError(label)

    def table(self):
        return [self.row(l) for l in self.tabulated]

    def lengths(self, labels=None):
        return [self.row(l).length for l in (labels or self.tabulated)]

    def displacements(self, labels=None):
        return [self.row(l).displacement for l in (labels or self.tabulated)]

    def to_json(self):
        return {"support_size": self.support_size, "edges": list(self.tabulated),
                "rows": [r.to_json() for r in self.rows], "flags": list(self.flags)}


def support_set(D: TropDiagram, support=GENERIC, drop=()) -> frozenset:
    base = frozenset(lattice_points(D.polygon))
    if support is None or support == GENERIC:
        pts = set(base)
    else:
        pts = {tuple(int(c) for c in p) for p in support}
    for p in drop:
        pts.discard(tuple(p))
    if not pts:
        raise ValueError("support is empty")
    outside = pts - base
    if outside:
        raise ValueError(f"support point {sorted(outside)[0]} lies outside the diagram")
    return frozenset(pts)


def _in_triangle(s, tri, closed=True):
    vals = [wedge(sub(tri[(k + 1) % 3], tri[k]), sub(s, tri[k])) for k in range(3)]
    if all(v >= 0 for v in vals) or all(v <= 0 for v in vals):
        if closed:
            return True
        return all(v != 0 for v in vals)
    return False


def _candidates(D: TropDiagram, ray: Ray, s, closed: bool):
    d = sub(pt(*s), D.node)
    T = D.triangle
    h = ray.home
    if T is None or h is None or not D.cuts:
        return [d], ()
    out, used = [], []
    for k in range(3):
        if k == h or D.cut_at(k) is None:
            continue
        m = 3 - h - k
        w = T.wahl(k).eigendirection
        if dot(ray.normal, w) <= 0:
            continue
        if not _in_triangle(s, (T.vertices[k], T.vertices[m], D.node), closed):
            continue
        M = shear(w) if k == (h + 1) % 3 else shear_inv(w)
        out.append(M(d))
        used.append(f"p{k}")
    return (out or [d]), tuple(used)


def _evaluate(D, ray, pts, closed):
    best, arg, crossed = None, [], set()
    for s in pts:
        cands, used = _candidates(D, ray, s, closed)
        for c in cands:
            v = dot(c, ray.normal)
            if best is None or v < best:
                best, arg = v, [c]
                crossed = set(used)
            elif v == best:
                arg.append(c)
                crossed |= set(used)
    tang = rot_cw(ray.normal)
    ts = [dot(x, tang) for x in arg]
    length = Fraction(max(ts) - min(ts), dot(tang, tang))
    return best, length, tuple(sorted(crossed))


def displace_edges(D: TropDiagram, support=GENERIC, drop=()):
    """Push every edge inwards until it touches the (transported) support.

    Returns the displaced diagram and the table of affine lengths and
    displacements.
    """
    pts = support_set(D, support, drop)
    rows, new_rays, flags = [], [], []
    for r in D.rays:
        value, length, crossed = _evaluate(D, r, pts, True)
        flag = None
        if D.cuts:
            v2, l2, _ = _evaluate(D, r, pts, False)
            if (v2, l2) != (value, length):
                flag = "tie-break: points on a sector boundary change this entry"
                flags.append(f"{r.label}: {flag}")
        disp = value + r.offset
        if disp < 0:
            raise ArithmeticError(f"edge {r.label} moved outwards")
        rows.append(EdgeRow(r.label, r.normal, length, disp, -value, crossed, flag))
        new_rays.append(replace(r, offset=-value))
    table = DisplacementTable(tuple(rows), tuple(D.table_labels()), len(pts), tuple(flags))
    try:
        P = None if D.cuts else halfplane_polygon(new_rays, D.node)
    except ValueError:
        # collinear support: the displaced region is a segment or a point
        flags.append("displaced polygon is degenerate; the original is kept")
        table = replace(table, flags=tuple(flags))
        P = D.polygon
    else:
        if P is None:
            P = D.polygon
        elif not all(P.contains(x) for x in pts):
            raise ArithmeticError("displaced polygon misses a support point")
        elif not all(D.polygon.contains(v) for v in P.vertices):
            raise ArithmeticError("displaced polygon leaves the original one")
    return replace(D, rays=tuple(new_rays), polygon=P), table


def b_pairing(table: DisplacementTable, label) -> Fraction:
    return table.row(label).btilde


def branch_multiplicities(displacements: Sequence) -> tuple:
    """(n, b) with n the least odd common multiple making every n*eps integral."""
    from math import lcm
    n = 1
    for e in displacements:
        n = lcm(n, Fraction(e).denominator)
    if n % 2 == 0:
        raise ValueError("displacements have even denominators; no odd Cartier multiple")
    return n, tuple(int(n * Fraction(e)) for e in displacements)
