"""Property tests for the invariants of the exact geometry and the calculi."""

from fractions import Fraction
from math import gcd

from hypothesis import assume, given, settings
from hypothesis import strategies as st

from manetti.cover import (Node, blow_down, blow_up, configuration_key, curve_graph,
                           double_cover, lifted_count)
from manetti.lattice import (ConvexPolygon, affine_length, lattice_points, solve_linear, sub,
                             wedge)
from manetti.markov import (BARYCENTRE, closed_form_vertices, is_markov, markov_triangle,
                            mu, mutate_polygon, mutate_triple, n_transform_check, word_triple)
from manetti.quotient import (CyclicQuotient, continuant, discrepancies, hj_expand, hj_value,
                              is_wahl, normalize_singularity)
from manetti.tropical import displace_edges, surface_diagram

words = st.lists(st.integers(0, 1), max_size=7).map(tuple)
small = settings(max_examples=60, deadline=None)


@small
@given(words, st.integers(0, 1))
def test_mutation_involution(w, bit):
    T = markov_triangle(w)
    U = mu(T, bit)
    back = mutate_polygon(U.polygon, U.p2, clockwise=bit == 1)
    assert set(back.vertices) == set(T.vertices)
    slot = "a" if bit == 0 else "b"
    assert mutate_triple(mutate_triple(T.triple, slot), slot) == T.triple


@small
@given(words)
def test_area_preserved(w):
    T = markov_triangle(w)
    assert T.polygon.area() == 32
    assert len(lattice_points(T.polygon)) == 45


@small
@given(words)
def test_eigenline_concurrence(w):
    T = markov_triangle(w)
    assert BARYCENTRE == (Fraction(8, 3), Fraction(8, 3))
    for p, e in zip(T.vertices, T.eigendirections()):
        assert wedge(sub(BARYCENTRE, p), e) == 0


@small
@given(words)
def test_wedge_relations(w):
    T = markov_triangle(w)
    a, b, c = T.triple
    w0, w1, w2 = T.eigendirections()
    assert (wedge(w1, w2), wedge(w2, w0), wedge(w0, w1)) == (3 * a, 3 * b, 3 * c)


@small
@given(words)
def test_triangle_data(w):
    T = markov_triangle(w)
    a, b, c = T.triple
    assert is_markov(T.triple) and T.triple == word_triple(w)
    assert T.edge_lengths() == (Fraction(8 * a, b * c), Fraction(8 * b, a * c), Fraction(8 * c, a * b))
    assert closed_form_vertices(w) == (T.p0, T.p1)
    assert [T.wahl(k).index for k in range(3)] == [a, b, c]


@settings(max_examples=120, deadline=None)
@given(words, st.integers(0, 1), st.integers(-40, 40), st.integers(-10, 10))
def test_n_transform_closed_form(w, bit, x, y):
    assert n_transform_check(markov_triangle(w), (x, y), bit).ok


def _wahl(draw_p, draw_a):
    p, a = draw_p, draw_a % draw_p
    assume(a > 0 and gcd(a, p) == 1)
    return CyclicQuotient(p * p, p * a - 1)


@settings(max_examples=100, deadline=None)
@given(st.integers(2, 40), st.integers(1, 39))
def test_wahl_discrepancies_zero_pairing(p, a):
    s = _wahl(p, a)
    chain = hj_expand(s.n, s.q)
    rep = discrepancies(chain, [0] * len(chain))
    assert all(-1 < x < 0 for x in rep.alpha)
    assert is_wahl(s).kind == "wahl"


@settings(max_examples=200, deadline=None)
@given(st.integers(2, 3000), st.integers(1, 2999))
def test_hj_round_trip(n, q):
    assume(q < n and gcd(n, q) == 1)
    chain = hj_expand(n, q)
    assert all(d >= 2 for d in chain)
    assert hj_value(chain) == Fraction(n, q)
    assert continuant(chain) == (n, q)


@settings(max_examples=60, deadline=None)
@given(words)
def test_vertex_singularities_are_wahl(w):
    a, b, c = markov_triangle(w).triple
    for x, y, z in ((a, b, c), (b, c, a), (c, a, b)):
        if 1 < x < 3000:
            assert is_wahl(normalize_singularity(x, y, z)).kind == "wahl"


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 40), st.integers(1, 39), st.data())
def test_discrepancy_monotone(p, a, data):
    s = _wahl(p, a)
    chain = hj_expand(s.n, s.q)
    base = [data.draw(st.integers(0, 3)) for _ in chain]
    i = data.draw(st.integers(0, len(chain) - 1))
    more = list(base)
    more[i] += 1
    lo, hi = discrepancies(chain, base).alpha, discrepancies(chain, more).alpha
    assert all(h < l for h, l in zip(hi, lo))


pts = st.tuples(st.integers(-12, 12), st.integers(-12, 12))


@settings(max_examples=80, deadline=None)
@given(st.lists(pts, min_size=3, max_size=7))
def test_lattice_points_brute_force(vs):
    try:
        P = ConvexPolygon(vs)
    except ValueError:
        assume(False)
    want = {(x, y) for x in range(-12, 13) for y in range(-12, 13) if P.contains((x, y))}
    assert lattice_points(P) == want


@settings(max_examples=80, deadline=None)
@given(pts, pts, st.integers(-5, 5), st.integers(-5, 5), st.integers(-3, 3))
def test_affine_length_unimodular(a, b, k, t, s):
    d = sub(a, b)
    assert affine_length(a, b) == gcd(int(d[0]), int(d[1]))
    # a unimodular map and a translation leave the lattice length alone
    M = ((1 + k * t, k), (t, 1)) if s >= 0 else ((1, 0), (k, 1))

    def f(u):
        return (M[0][0] * u[0] + M[0][1] * u[1] + s, M[1][0] * u[0] + M[1][1] * u[1] - s)

    assert affine_length(f(a), f(b)) == affine_length(a, b)


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 5).flatmap(lambda n: st.tuples(
    st.lists(st.lists(st.integers(-6, 6), min_size=n, max_size=n), min_size=n, max_size=n),
    st.lists(st.integers(-9, 9), min_size=n, max_size=n))))
def test_solve_linear_exact(system):
    N, beta = system
    try:
        x = solve_linear(N, beta)
    except ZeroDivisionError:
        return
    assert all(isinstance(v, Fraction) for v in x)
    assert [sum(Fraction(r[j]) * x[j] for j in range(len(x))) for r in N] == beta


def _graph(data):
    k = data.draw(st.integers(2, 5))
    nodes = [Node(f"C{i}", data.draw(st.integers(-6, -1)), data.draw(st.booleans()))
             for i in range(k)]
    edges = [(f"C{i}", f"C{i + 1}") for i in range(k - 1)]
    return curve_graph(nodes, edges)


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_blow_up_then_down(data):
    G = _graph(data)
    e = data.draw(st.sampled_from(G.edges))
    H = blow_up(G, point=e.point, name="X")
    back = blow_down(H, "X", point=e.point)
    assert configuration_key(back) == configuration_key(G)
    F = blow_up(G, free=G.nodes[0].id, name="X")
    assert configuration_key(blow_down(F, "X")) == configuration_key(G)


def _coverable(data):
    """A chain whose off-branch curves each meet 0 or 2 branch curves."""
    k = 2 * data.draw(st.integers(0, 3)) + 1
    alternate = data.draw(st.booleans())
    nodes = []
    for i in range(k):
        inb = alternate and i % 2 == 0
        sq = -2 * data.draw(st.integers(1, 3)) if inb else data.draw(st.integers(-6, -1))
        nodes.append(Node(f"C{i}", sq, inb))
    return curve_graph(nodes, [(f"C{i}", f"C{i + 1}") for i in range(k - 1)])


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_lifted_count(data):
    G = _coverable(data)
    C = double_cover(G)
    assert lifted_count(G) == len(C.nodes)
    # every branch curve lifts once, every other curve once or twice
    assert len(C.nodes) <= 2 * len(G.nodes)


def _oracle(D, support):
    """Displacement and length of each edge straight from the definitions."""
    out = {}
    for r in D.rays:
        rho = r.normal
        low = min(x * rho[0] + y * rho[1] for x, y in D.polygon.vertices)
        vals = {s: s[0] * rho[0] + s[1] * rho[1] for s in support}
        m = min(vals.values())
        arg = [s for s, v in vals.items() if v == m]
        ends = sorted(arg, key=lambda s: s[0] * -rho[1] + s[1] * rho[0])
        d = sub(ends[-1], ends[0])
        length = gcd(int(d[0]), int(d[1]))
        out[r.label] = (Fraction(m - low), Fraction(length))
    return out


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(["P:1,1,4", "P:1,4,25", "P:1,1,1"]), st.data())
def test_toric_displacements_brute_force(surface, data):
    D = surface_diagram(surface)
    base = sorted(lattice_points(D.polygon))
    support = data.draw(st.sets(st.sampled_from(base), min_size=1, max_size=20))
    _, t = displace_edges(D, support=sorted(support))
    want = _oracle(D, support)
    for r in t.rows:
        assert (r.displacement, r.length) == want[r.label]
