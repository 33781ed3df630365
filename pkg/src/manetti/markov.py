"""Markov triples, Markov triangles and their mutations."""

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import isqrt
from typing import Optional, Sequence

from .lattice import (ConvexPolygon, Mat2, add, affine_map,
                      lattice_points, polygon, primitive, pt, q, rot_cw,
                      shear, shear_inv, sub, wedge, dot)

BARYCENTRE = pt(Fraction(8, 3), Fraction(8, 3))

SLOTS = {"a": 0, "b": 1, "c": 2}


def is_markov(t: Sequence[int]) -> bool:
    a, b, c = t
    return a > 0 and b > 0 and c > 0 and a * a + b * b + c * c == 3 * a * b * c


def mutate_triple(t: Sequence[int], slot) -> tuple:
    if not is_markov(t):
        raise ValueError(f"{tuple(t)} is not a Markov triple")
    i = SLOTS.get(slot, slot)
    y, z = (t[j] for j in range(3) if j != i)
    out = list(t)
    out[i] = 3 * y * z - t[i]
    return tuple(out)


def parse_word(s) -> tuple:
    if isinstance(s, str):
        s = s.strip()
        if s in ("", "-", "()"):
            return ()
        if set(s) - {"0", "1"}:
            raise ValueError(f"mutation word must be binary, got {s!r}")
        return tuple(int(ch) for ch in s)
    bits = tuple(int(b) for b in s)
    if any(b not in (0, 1) for b in bits):
        raise ValueError("mutation word must be binary")
    return bits


def word_str(word) -> str:
    return "".join(str(b) for b in word)


def word_triple(word) -> tuple:
    """Ordered triple (index of p0, p1, p2) reached from (1,2,5)."""
    a, b, c = 1, 2, 5
    for bit in parse_word(word):
        if bit == 0:
            a, b, c = c, b, 3 * b * c - a
        else:
            a, b, c = a, c, 3 * a * c - b
    return (a, b, c)


@dataclass
class TopographNode:
    triple: tuple
    depth: int
    word: Optional[tuple]
    parent: Optional[tuple] = None
    children: list = field(default_factory=list)

    @property
    def key(self):
        return tuple(sorted(self.triple))


def topograph(depth: int) -> list:
    """Nodes of the Markov tree up to the given depth, in breadth-first order.

    Depth 0 is (1,1,1), depth 1 is (1,1,2), depth 2 is (1,2,5); below that a
    node reached by the mutation word w sits at depth len(w) + 2.
    """
    if depth < 0:
        raise ValueError("depth must be non-negative")
    seeds = [TopographNode((1, 1, 1), 0, None), TopographNode((1, 1, 2), 1, None),
             TopographNode((1, 2, 5), 2, ())]
    nodes = seeds[:depth + 1]
    for par, ch in zip(nodes, nodes[1:]):
        par.children.append(ch.key)
        ch.parent = par.key
    seen = {n.key for n in nodes}
    frontier = [seeds[2]] if depth >= 2 else []
    d = 2
    while frontier and d < depth:
        nxt = []
        for node in frontier:
            for bit in (0, 1):
                w = node.word + (bit,)
                child = TopographNode(word_triple(w), d + 1, w, parent=node.key)
                if child.key in seen:
                    continue
                seen.add(child.key)
                node.children.append(child.key)
                nxt.append(child)
        nodes.extend(nxt)
        frontier = nxt
        d += 1
    return nodes


@dataclass(frozen=True)
class WahlVertex:
    vertex: tuple
    index: int
    eigendirection: tuple
    monodromy: Mat2
    u1: tuple
    u2: tuple


def wahl_vertex(P: ConvexPolygon, v) -> WahlVertex:
    """Index, eigendirection and monodromy at a vertex of P.

    u1 points along the anticlockwise edge, u2 along the clockwise one. The
    returned monodromy is u -> u + (u ^ w) w, the matrix for crossing the cut
    clockwise around the node.
    """
    V = P.vertices
    i = P.index_of(v) if not isinstance(v, int) else v
    p = V[i]
    u1 = primitive(sub(V[(i + 1) % len(V)], p))
    u2 = primitive(sub(V[i - 1], p))
    c2 = wedge(u1, u2)
    c = isqrt(c2) if c2 > 0 else 0
    if c == 0 or c * c != c2:
        raise ValueError(f"not a Wahl vertex: u1^u2 = {c2}")
    s = add(u1, u2)
    if s[0] % c or s[1] % c:
        raise ValueError("not a Wahl vertex: u1+u2 not divisible by the index")
    w = (s[0] // c, s[1] // c)
    return WahlVertex(p, c, w, shear_inv(w), u1, u2)


def _ray_exit(P: ConvexPolygon, p, w):
    best = None
    for a, b in P.edges():
        d = sub(b, a)
        den = wedge(w, d)
        if den == 0:
            continue
        t = Fraction(wedge(sub(a, p), d)) / den
        s = Fraction(wedge(sub(a, p), w)) / den
        if t > 0 and 0 <= s <= 1 and (best is None or t < best[0]):
            best = (t, add(p, (t * w[0], t * w[1])))
    if best is None:
        raise ValueError("eigenline does not meet the interior")
    return best[1]


def mutate_polygon(P: ConvexPolygon, v, clockwise: bool) -> ConvexPolygon:
    """Cut P along the eigenline at v and shear one side.

    Clockwise keeps the piece u1 points into and applies the inverse shear
    to the other; anticlockwise shears the u1 piece and keeps the rest.
    """
    wv = wahl_vertex(P, v)
    p, w = wv.vertex, wv.eigendirection
    qx = _ray_exit(P, p, w)
    side = 1 if wedge(w, wv.u1) > 0 else -1
    one, two = [p, qx], [p, qx]
    for x in P.vertices:
        s = wedge(w, sub(x, p))
        if s * side > 0:
            one.append(x)
        elif s * side < 0:
            two.append(x)
    if clockwise:
        f = affine_map(shear_inv(w), p)
        pts = one + [f(x) for x in two]
    else:
        f = affine_map(shear(w), p)
        pts = [f(x) for x in one] + two
    return ConvexPolygon(pts)


SEED_TRIANGLES = {
    (1, 1, 1): ((0, 0), (8, 0), (0, 8)),
    (1, 1, 2): ((0, 0), (16, 0), (0, 4)),
    (1, 2, 5): ((0, 0), (20, 0), (0, Fraction(16, 5))),
}


@dataclass(frozen=True)
class MarkovTriangle:
    p0: tuple
    p1: tuple
    p2: tuple
    triple: tuple
    word: Optional[tuple]

    @property
    def polygon(self) -> ConvexPolygon:
        return ConvexPolygon([self.p0, self.p1, self.p2])

    @property
    def vertices(self):
        return (self.p0, self.p1, self.p2)

    def wahl(self, k: int) -> WahlVertex:
        return _wahl_at(self, k)

    def eigendirections(self):
        return tuple(self.wahl(k).eigendirection for k in range(3))

    def edge_lengths(self):
        """Affine lengths of the edges opposite p0, p1, p2."""
        from .lattice import affine_length
        return (affine_length(self.p1, self.p2), affine_length(self.p2, self.p0),
                affine_length(self.p0, self.p1))


@lru_cache(maxsize=4096)
def _wahl_at(T: MarkovTriangle, k: int) -> WahlVertex:
    return wahl_vertex(T.polygon, T.vertices[k])


def _split_vertices(P: ConvexPolygon):
    bottom = sorted(v for v in P.vertices if v[1] == 0)
    top = [v for v in P.vertices if v[1] != 0]
    if len(bottom) != 2 or len(top) != 1:
        raise ValueError("not a bottom-edge triangle")
    return bottom[0], bottom[1], top[0]


def seed_triangle(triple) -> MarkovTriangle:
    t = tuple(triple)
    if t not in SEED_TRIANGLES:
        raise KeyError(t)
    p0, p1, p2 = (pt(*v) for v in SEED_TRIANGLES[t])
    return MarkovTriangle(p0, p1, p2, t, () if t == (1, 2, 5) else None)


def mu(T: MarkovTriangle, bit: int) -> MarkovTriangle:
    """mu_0 is clockwise at p0, mu_1 anticlockwise at p1."""
    a, b, c = T.triple
    if bit == 0:
        P = mutate_polygon(T.polygon, T.p0, clockwise=True)
        t = (c, b, 3 * b * c - a)
    else:
        P = mutate_polygon(T.polygon, T.p1, clockwise=False)
        t = (a, c, 3 * a * c - b)
    p0, p1, p2 = _split_vertices(P)
    w = None if T.word is None else T.word + (bit,)
    return MarkovTriangle(p0, p1, p2, t, w)


def markov_triangle(word=()) -> MarkovTriangle:
    T = seed_triangle((1, 2, 5))
    for bit in parse_word(word):
        T = mu(T, bit)
    return T


def closed_form_vertices(word) -> tuple:
    """(p0, p1) from the accumulated affine lengths 8b/(ac) and 8a/(bc).

    Each step uses the triple before the mutation.
    """
    alpha, beta = Fraction(0), Fraction(0)
    a, b, c = 1, 2, 5
    for bit in parse_word(word):
        if bit == 0:
            alpha += Fraction(8 * b, a * c)
            a, b, c = c, b, 3 * b * c - a
        else:
            beta += Fraction(8 * a, b * c)
            a, b, c = a, c, 3 * a * c - b
    return pt(-alpha, 0), pt(20 + beta, 0)


# n-coordinates

@dataclass(frozen=True)
class NCoords:
    n0: Fraction
    n1: Fraction
    n2: Fraction

    def as_tuple(self):
        return (self.n0, self.n1, self.n2)


def n_coords(T: MarkovTriangle, n) -> NCoords:
    n = pt(*n)
    ws = T.eigendirections()
    vals = [dot(sub(n, p), rot_cw(w)) for p, w in zip(T.vertices, ws)]
    return NCoords(*(q(v) for v in vals))


def predicted_n_coords(T: MarkovTriangle, before: NCoords, bit: int) -> NCoords:
    a, b, _ = T.triple
    n0, n1, n2 = before.as_tuple()
    if bit == 0:
        return NCoords(n2 + 3 * b * n0, n1, -n0)
    return NCoords(n0, n2 + 3 * a * n1, -n1)


@dataclass(frozen=True)
class TransformCheck:
    before: NCoords
    after: NCoords
    predicted: NCoords

    @property
    def ok(self) -> bool:
        return self.after == self.predicted


def n_transform_check(T: MarkovTriangle, n, bit: int) -> TransformCheck:
    before = n_coords(T, n)
    after = n_coords(mu(T, bit), n)
    return TransformCheck(before, after, predicted_n_coords(T, before, bit))


def in_inner_triangle(T: MarkovTriangle, n) -> bool:
    tri = (T.p0, T.p1, BARYCENTRE)
    n = pt(*n)
    return all(wedge(sub(tri[(k + 1) % 3], tri[k]), sub(n, tri[k])) >= 0 for k in range(3))


# lattice-point types

TYPE_POLYGONS = {
    "Five": polygon((0, 0), (0, 3), (1, 3), (20, 0)),
    "A": polygon((0, 0), (0, 3), (14, 1), (20, 0)),
    "B": polygon((-3, 0), (2, 2), (7, 2), (14, 1), (20, 0)),
    "C": polygon((-3, 0), (-1, 1), (2, 2), (7, 2), (20, 0)),
}
_TYPE_POINTS = {k: frozenset(lattice_points(P)) for k, P in TYPE_POLYGONS.items()}


def lattice_type(P: ConvexPolygon) -> Optional[str]:
    pts = frozenset(lattice_points(P))
    for k, s in _TYPE_POINTS.items():
        if pts == s:
            return k
    return None


def syntactic_type(word) -> str:
    w = parse_word(word)
    if not w:
        return "Five"
    if w[0] == 0:
        return "C"
    return "A" if all(w) else "B"


@dataclass(frozen=True)
class TypeResult:
    tag: str
    syntactic: str
    flag: Optional[str] = None


def classify_type(word) -> TypeResult:
    w = parse_word(word)
    tag = lattice_type(markov_triangle(w).polygon)
    if tag is None:
        raise ValueError(f"word {word_str(w)!r}: integer points match no reference polygon")
    syn = syntactic_type(w)
    flag = None
    if tag != syn:
        flag = f"lattice-set type {tag} differs from syntactic rule {syn}"
    elif tag == "A" and len(w) < 3:
        flag = "all-ones word shorter than 3 classified as A by lattice set"
    return TypeResult(tag, syn, flag)


# persistence certificates

@dataclass(frozen=True)
class Certificate:
    word: tuple
    triple: tuple
    point: tuple
    coords: NCoords
    left: bool   # n2 >= (1-3b) n0 and n0 >= 2
    right: bool  # n2 <= (1-3a) n1 and n1 <= -2

    @property
    def holds(self) -> bool:
        return self.left or self.right

    def to_json(self):
        from .lattice import fmt
        return {
            "word": word_str(self.word), "triple": list(self.triple),
            "n": list(self.point),
            "n_coords": [fmt(x) for x in self.coords.as_tuple()],
            "n0_branch": self.left, "n1_branch": self.right,
        }


def persistence_certificate(word, n) -> Certificate:
    w = parse_word(word)
    T = markov_triangle(w)
    if not in_inner_triangle(T, n):
        raise ValueError(f"{tuple(n)} is outside the inner triangle")
    a, b, _ = T.triple
    nc = n_coords(T, n)
    left = nc.n0 >= 2 and nc.n2 >= (1 - 3 * b) * nc.n0
    right = nc.n1 <= -2 and nc.n2 <= (1 - 3 * a) * nc.n1
    return Certificate(w, T.triple, tuple(n), nc, left, right)
