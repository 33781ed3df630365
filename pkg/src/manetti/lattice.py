"""Exact rational vectors, 2x2 matrices and convex lattice polygons."""

from dataclasses import dataclass
from fractions import Fraction
from math import ceil, floor, gcd
from typing import Iterable, Sequence

Q = Fraction


def q(x) -> Fraction:
    if isinstance(x, str):
        return Fraction(x)
    return x if isinstance(x, Fraction) else Fraction(x)


def fmt(x) -> str:
    """Serialize a rational as "p/q", or "p" for integers."""
    x = q(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def pt(x, y) -> tuple:
    return (q(x), q(y))


def add(u, v):
    return (u[0] + v[0], u[1] + v[1])


def sub(u, v):
    return (u[0] - v[0], u[1] - v[1])


def scale(k, u):
    return (k * u[0], k * u[1])


def dot(u, v):
    return u[0] * v[0] + u[1] * v[1]


def wedge(u, v):
    return u[0] * v[1] - u[1] * v[0]


def as_int_vec(v) -> tuple:
    out = []
    for c in v:
        c = q(c)
        if c.denominator != 1:
            raise ValueError(f"vector {v} is not integral")
        out.append(c.numerator)
    return tuple(out)


def primitive(v) -> tuple:
    """Primitive integer vector pointing along the rational vector v."""
    a, b = q(v[0]), q(v[1])
    if a == 0 and b == 0:
        raise ValueError("zero vector has no primitive direction")
    den = a.denominator * b.denominator // gcd(a.denominator, b.denominator)
    x, y = int(a * den), int(b * den)
    g = gcd(x, y)
    return (x // g, y // g)


def rot_cw(v):
    """Clockwise quarter turn (x, y) -> (y, -x)."""
    return (v[1], -v[0])


@dataclass(frozen=True)
class Mat2:
    a: Fraction
    b: Fraction
    c: Fraction
    d: Fraction

    @classmethod
    def of(cls, rows) -> "Mat2":
        (a, b), (c, d) = rows
        return cls(q(a), q(b), q(c), q(d))

    @classmethod
    def identity(cls) -> "Mat2":
        return cls.of(((1, 0), (0, 1)))

    def __call__(self, u):
        return (self.a * u[0] + self.b * u[1], self.c * u[0] + self.d * u[1])

    def __matmul__(self, o: "Mat2") -> "Mat2":
        return Mat2(self.a * o.a + self.b * o.c, self.a * o.b + self.b * o.d,
                    self.c * o.a + self.d * o.c, self.c * o.b + self.d * o.d)

    def det(self) -> Fraction:
        return self.a * self.d - self.b * self.c

    def inverse(self) -> "Mat2":
        dt = self.det()
        if dt == 0:
            raise ZeroDivisionError("singular 2x2 matrix")
        return Mat2(self.d / dt, -self.b / dt, -self.c / dt, self.a / dt)

    def transpose(self) -> "Mat2":
        return Mat2(self.a, self.c, self.b, self.d)

    def rows(self):
        return ((self.a, self.b), (self.c, self.d))

    def is_integral(self) -> bool:
        return all(x.denominator == 1 for x in (self.a, self.b, self.c, self.d))

    def to_json(self):
        return [[fmt(x) for x in r] for r in self.rows()]


def shear(w) -> Mat2:
    """u -> u - (u ^ w) w."""
    x, y = w
    return Mat2.of(((1 - x * y, x * x), (-y * y, 1 + x * y)))


def shear_inv(w) -> Mat2:
    """u -> u + (u ^ w) w, the inverse of shear(w)."""
    x, y = w
    return Mat2.of(((1 + x * y, -x * x), (y * y, 1 - x * y)))


def affine_map(m: Mat2, origin):
    """The map x -> origin + m(x - origin)."""
    return lambda x: add(origin, m(sub(x, origin)))


def convex_hull(points: Iterable) -> list:
    pts = sorted(set((q(x), q(y)) for x, y in points))
    if len(pts) < 3:
        return pts

    def half(seq):
        h = []
        for p in seq:
            while len(h) > 1 and wedge(sub(h[-1], h[-2]), sub(p, h[-2])) <= 0:
                h.pop()
            h.append(p)
        return h

    lo, up = half(pts), half(pts[::-1])
    return lo[:-1] + up[:-1]


class ConvexPolygon:
    """Strictly convex polygon, vertices CCW from the lexicographically least one."""

    __slots__ = ("vertices",)

    def __init__(self, vertices: Sequence):
        hull = convex_hull(vertices)
        if len(hull) < 3:
            raise ValueError("polygon has zero area")
        self.vertices = tuple(hull)

    def __eq__(self, other):
        return isinstance(other, ConvexPolygon) and self.vertices == other.vertices

    def __hash__(self):
        return hash(self.vertices)

    def __len__(self):
        return len(self.vertices)

    def __repr__(self):
        return "ConvexPolygon([" + ", ".join(f"({fmt(x)},{fmt(y)})" for x, y in self.vertices) + "])"

    def edges(self):
        n = len(self.vertices)
        return [(self.vertices[i], self.vertices[(i + 1) % n]) for i in range(n)]

    def area(self) -> Fraction:
        s = sum((wedge(a, b) for a, b in self.edges()), Fraction(0))
        return s / 2

    def contains(self, p) -> bool:
        return all(wedge(sub(b, a), sub(p, a)) >= 0 for a, b in self.edges())

    def index_of(self, v) -> int:
        return self.vertices.index((q(v[0]), q(v[1])))

    def to_json(self):
        return [[fmt(x), fmt(y)] for x, y in self.vertices]


def polygon(*verts) -> ConvexPolygon:
    return ConvexPolygon([pt(x, y) for x, y in verts])


def lattice_points(P: ConvexPolygon) -> set:
    """All integer points inside or on P, scanned row by row."""
    if not isinstance(P, ConvexPolygon):
        P = ConvexPolygon(P)
    ys = [y for _, y in P.vertices]
    out = set()
    edges = P.edges()
    for y in range(ceil(min(ys)), floor(max(ys)) + 1):
        lo, hi = None, None
        for a, b in edges:
            if a[1] == b[1]:
                if a[1] == y:
                    for x in (a[0], b[0]):
                        lo = x if lo is None or x < lo else lo
                        hi = x if hi is None or x > hi else hi
                continue
            if min(a[1], b[1]) <= y <= max(a[1], b[1]):
                x = a[0] + (b[0] - a[0]) * (y - a[1]) / (b[1] - a[1])
                lo = x if lo is None or x < lo else lo
                hi = x if hi is None or x > hi else hi
        if lo is None:
            continue
        for x in range(ceil(lo), floor(hi) + 1):
            out.add((x, y))
    return out


def affine_length(a, b) -> Fraction:
    """Lattice length of the segment ab (0 when a = b)."""
    d = sub((q(a[0]), q(a[1])), (q(b[0]), q(b[1])))
    if d == (0, 0):
        return Fraction(0)
    u = primitive(d)
    k = d[0] / u[0] if u[0] != 0 else d[1] / u[1]
    return abs(k)


def solve_linear(N: Sequence[Sequence], beta: Sequence) -> list:
    """Exact Gauss-Jordan solve of N x = beta over the rationals."""
    n = len(N)
    if any(len(r) != n for r in N) or len(beta) != n:
        raise ValueError("system must be square")
    A = [[q(x) for x in row] + [q(beta[i])] for i, row in enumerate(N)]
    for col in range(n):
        piv = next((r for r in range(col, n) if A[r][col] != 0), None)
        if piv is None:
            raise ZeroDivisionError("singular matrix")
        A[col], A[piv] = A[piv], A[col]
        pv = A[col][col]
        A[col] = [x / pv for x in A[col]]
        for r in range(n):
            if r != col and A[r][col] != 0:
                f = A[r][col]
                A[r] = [x - f * y for x, y in zip(A[r], A[col])]
    x = [A[i][n] for i in range(n)]
    for i in range(n):
        if sum(q(N[i][j]) * x[j] for j in range(n)) != q(beta[i]):
            raise ArithmeticError("back-substitution failed")
    return x


def determinant(N: Sequence[Sequence]) -> Fraction:
    A = [[q(x) for x in row] for row in N]
    n, det = len(A), Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if A[r][col] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            A[col], A[piv] = A[piv], A[col]
            det = -det
        det *= A[col][col]
        for r in range(col + 1, n):
            f = A[r][col] / A[col][col]
            if f:
                A[r] = [x - f * y for x, y in zip(A[r], A[col])]
    return det
