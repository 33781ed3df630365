"""End-to-end classification of octic double covers of Manetti surfaces."""

import hashlib
import json
from dataclasses import dataclass
from math import isqrt, prod
from typing import Optional

from . import __version__
from .cover import (Node, curve_graph, branch_parity_adjust, double_cover, double_fork_graph,
                    fork_graph, graph_discrepancies, isomorphic,
                    log_resolve, smooth_subcase, star_graph)
from .lattice import fmt, lattice_points
from .markov import (in_inner_triangle, is_markov, markov_triangle, mu, n_transform_check,
                     persistence_certificate, topograph, word_str)
from .quotient import CyclicQuotient, blow_down_chain, discrepancies, hj_expand
from .tropical import (SurfaceId, displace_edges, find_triangle, parse_surface,
                       resolution_fan, surface_diagram, triangle_diagram)

VERDICTS = ("normal-lc-stratum", "not-log-canonical", "non-normal")

# triples whose vertex data admit no persistence certificate
EXCEPTIONS = ((1, 1, 1), (1, 1, 2), (1, 2, 5), (1, 5, 13), (1, 13, 34), (2, 5, 29))

# base cases of the sweep: word prefix -> lattice point n
CERTIFICATE_ROOTS = {"00": (-1, 1), "01": (13, 1), "10": (0, 1), "110": (0, 1), "111": (14, 1)}

# dimensions of automorphism groups, taken as given constants
DIM_AUT = {"P2": 8, "P(1,1,4)": 9, "HP(5)": 9, "P(1,4,25)": 10}

CODIM = {"open": 0, "I": 0, "IIa": 1, "IIb": 2, "IIc": 3}

ADJACENCIES = (
    ("P(1,1,4) IIc", "P(1,1,4) IIb"), ("P(1,1,4) IIb", "P(1,1,4) IIa"),
    ("P(1,1,4) IIa", "P(1,1,4) I"),
    ("P(1,4,25) IIc", "P(1,4,25) IIb"), ("P(1,4,25) IIb", "P(1,4,25) IIa"),
    ("P(1,4,25) IIa", "P(1,4,25) I"),
    ("P(1,4,25) I", "P(1,1,4) I"), ("P(1,4,25) IIa", "P(1,1,4) IIa"),
    ("P(1,4,25) IIb", "P(1,1,4) IIb"), ("P(1,4,25) IIc", "P(1,1,4) IIc"),
    ("P(1,4,25) I", "HP(5) I"),
)

EXCLUDED_BY_DEGENERATION = (
    ("P(4,25,841)", "HP(29)"), ("HP(5,29)", "HP(29)"), ("HP(2,29)", "HP(29)"),
    ("P(1,25,169)", "HP(13)"), ("P(1,169,1156)", "HP(34)"),
)


# surfaces

@dataclass(frozen=True)
class ManettiSurfaceId:
    """A Manetti surface, with `kept` the Markov numbers whose singular points survive."""
    triple: tuple
    kept: tuple
    word: Optional[tuple]

    @property
    def kind(self) -> str:
        big = [x for x in self.kept if x > 1]
        if len(self.kept) == 3:
            return "P"
        return "HP" if len(big) == 1 else "HPpair"

    @property
    def name(self) -> str:
        if self.kind == "P":
            if self.triple == (1, 1, 1):
                return "P2"
            return "P(" + ",".join(str(x * x) for x in sorted(self.triple)) + ")"
        return "HP(" + ",".join(str(x) for x in sorted(x for x in self.kept if x > 1)) + ")"

    @property
    def code(self) -> str:
        if self.kind == "P":
            return "P:" + ",".join(str(x * x) for x in sorted(self.triple))
        big = sorted(x for x in self.kept if x > 1)
        return ("HP:" if len(big) == 1 else "HPpair:") + ",".join(map(str, big))

    def __str__(self):
        return self.name

    def to_json(self):
        return {"name": self.name, "code": self.code, "triple": list(self.triple),
                "kept": list(self.kept),
                "word": None if self.word is None else word_str(self.word)}


_ALIASES = (("ℍℙ", "HP"), ("ℙ²", "P2"), ("ℙ", "P"), (" ", ""))


def manetti_surface(spec) -> ManettiSurfaceId:
    """Normalise "P:1,4,25", "HP:5", "HPpair:5,29", "P(1,4,25)", "HP(5)" or "P2".

    Redundant names collapse: HP(1) and HP(1,1) are P2, HP(2) is P(1,1,4)
    and HP(a,b) with (a,b,1) Markov is P(1,a^2,b^2).
    """
    if isinstance(spec, ManettiSurfaceId):
        return spec
    if isinstance(spec, SurfaceId):
        sid = spec
    else:
        s = str(spec)
        for a, b in _ALIASES:
            s = s.replace(a, b)
        if s in ("P2", "P^2"):
            s = "P:1,1,1"
        elif "(" in s and s.endswith(")"):
            head, body = s[:-1].split("(", 1)
            n = body.count(",") + 1
            kind = {"P": "P", "HP": "HP" if n == 1 else "HPpair"}.get(head)
            if kind is None:
                raise ValueError(f"cannot parse surface {spec!r}")
            s = f"{kind}:{body}"
        sid = parse_surface(s)
    if sid.kind == "P":
        roots = []
        for w in sid.numbers:
            r = isqrt(w)
            if r * r != w:
                raise ValueError(f"weight {w} is not a square")
            roots.append(r)
        if not is_markov(roots):
            raise ValueError(f"{tuple(roots)} is not a Markov triple")
        kept = list(roots)
    else:
        kept = list(sid.numbers)
    T = find_triangle(kept)
    triple = tuple(sorted(T.triple))
    # a kept entry of 1 is a smooth point; retain every other singular point
    rest = list(triple)
    for x in kept:
        rest.remove(x)
    if all(x == 1 for x in rest):
        kept = list(triple)
    else:
        kept = [x for x in kept if x > 1]
    return ManettiSurfaceId(triple, tuple(sorted(kept)), T.word)


def octic_class(Y) -> int:
    """8 times the product of the Markov numbers of the retained singular points."""
    Y = manetti_surface(Y)
    return 8 * prod(Y.kept)


# non-normality sweep

@dataclass(frozen=True)
class SweepEntry:
    triple: tuple
    word: Optional[str]
    depth: int
    exempt: bool
    root: Optional[str] = None
    certificate: Optional[dict] = None
    transforms_ok: Optional[bool] = None
    btilde: Optional[tuple] = None
    agrees: Optional[bool] = None

    def to_json(self):
        return {"triple": list(self.triple), "word": self.word, "depth": self.depth,
                "exempt": self.exempt, "root": self.root, "certificate": self.certificate,
                "transforms_ok": self.transforms_ok,
                "btilde": None if self.btilde is None else [None if b is None else fmt(b) for b in self.btilde],
                "agrees": self.agrees}


def certificate_root(word) -> Optional[str]:
    w = word_str(word)
    return next((r for r in sorted(CERTIFICATE_ROOTS) if w.startswith(r)), None)


def direct_btilde(word) -> tuple:
    """(b_i0, b_i1) read off the displaced diagram of the triangle at `word`.

    The first entry is None when p0 is a smooth point.
    """
    T = markov_triangle(word)
    D = triangle_diagram(T, traded=tuple(k for k in (0, 1) if T.triple[k] > 1))
    F = resolution_fan(D, 2)
    _, table = displace_edges(D)
    b0 = table.row(F.labels[F.i0 - 1]).btilde if F.i0 else None
    b1 = table.row(F.labels[F.i1 - 1]).btilde if F.i1 else None
    return b0, b1


def _transforms_ok(root: str, word: str, n) -> bool:
    T = markov_triangle(root)
    for bit in word[len(root):]:
        if not n_transform_check(T, n, int(bit)).ok:
            return False
        T = mu(T, int(bit))
    return True


def nonnormality_sweep(depth: int, cross_check: bool = True) -> list:
    """Certify every non-exceptional triple up to `depth` in the topograph."""
    if depth < 2:
        raise ValueError("sweep depth must be at least 2")
    out = []
    for node in topograph(depth):
        w = None if node.word is None else word_str(node.word)
        root = None if w is None else certificate_root(w)
        key = tuple(sorted(node.triple))
        if root is None:
            if key not in EXCEPTIONS:
                raise ArithmeticError(f"{node.triple} has no persistence certificate")
            out.append(SweepEntry(node.triple, w, node.depth, True))
            continue
        if key in EXCEPTIONS:
            raise ArithmeticError(f"exceptional triple {node.triple} matched root {root}")
        n = CERTIFICATE_ROOTS[root]
        if not in_inner_triangle(markov_triangle(w), n):
            raise ArithmeticError(f"{n} left the inner triangle at {w}")
        cert = persistence_certificate(w, n)
        if not cert.holds:
            raise ArithmeticError(f"certificate fails for {node.triple} (word {w})")
        bt, agrees = None, None
        if cross_check:
            bt = direct_btilde(w)
            agrees = min(b for b in bt if b is not None) <= -2
        out.append(SweepEntry(node.triple, w, node.depth, False, root, cert.to_json(),
                              _transforms_ok(root, w, n), bt, agrees))
    return out


# case verdicts

@dataclass(frozen=True)
class CaseVerdict:
    surface: ManettiSurfaceId
    case: str
    support: str
    verdict: str
    basket: str
    evidence: dict

    @property
    def label(self) -> str:
        return f"{self.surface.name} {self.case}"

    def to_json(self):
        return {"label": self.label, "surface": self.surface.to_json(), "case": self.case,
                "support": self.support, "verdict": self.verdict, "basket": self.basket,
                "evidence": self.evidence}


@dataclass(frozen=True)
class CaseSpec:
    surface: str
    case: str
    support: str
    drop: tuple = ()
    subcase: Optional[str] = None


_Q2, _Q3, _Q4, _Q5, _Q6 = (1, 3), (7, 2), (13, 1), (19, 0), (20, 0)
_ROW3 = tuple((i, 3) for i in range(5))

CASES = (
    CaseSpec("P2", "generic", "all points"),
    CaseSpec("P(1,1,4)", "I", "(0,4) in the support"),
    *(CaseSpec("P(1,1,4)", f"II({x})", "(0,4) absent, some (i,3) present", ((0, 4),), x)
      for x in "abcde"),
    CaseSpec("P(1,1,4)", "III", "(0,4) and every (i,3) absent", ((0, 4),) + _ROW3),
    CaseSpec("P(1,4,25)", "I", "q2 and q6 in the support"),
    *(CaseSpec("P(1,4,25)", f"II({x})", "q6 absent, one of q2..q5 present", (_Q6,), x)
      for x in "abcde"),
    CaseSpec("P(1,4,25)", "III", "q6 and q2..q5 absent", (_Q2, _Q3, _Q4, _Q5, _Q6)),
    CaseSpec("P(1,4,25)", "IV", "q6 present, q2 absent", (_Q2,)),
    CaseSpec("HP(5)", "generic", "all points"),
    CaseSpec("HP(5)", "q2-dropped", "q2 absent", (_Q2,)),
    CaseSpec("HP(13)", "generic", "all points"),
    CaseSpec("HP(29)", "generic", "all points"),
    CaseSpec("HP(34)", "generic", "all points"),
    *(CaseSpec(s, "generic", "all points") for s, _ in EXCLUDED_BY_DEGENERATION),
)

CASE_LABELS = tuple(f"{c.surface} {c.case}" for c in CASES)

# expected dual graph of the cover over C1 in the smooth subcases
_SUBCASE_GRAPH = {"a": star_graph, "b": lambda: fork_graph(1), "c": lambda: double_fork_graph(1, 1)}


def case_spec(Y, case: str) -> CaseSpec:
    Y = manetti_surface(Y)
    c = case.strip()
    if c.startswith(Y.name + " "):
        c = c[len(Y.name) + 1:]
    for spec in CASES:
        if spec.surface == Y.name and spec.case == c:
            return spec
    known = [s.case for s in CASES if s.surface == Y.name]
    if not known:
        raise ValueError(f"{Y.name} is not among the surfaces left by the non-normality sweep")
    raise ValueError(f"unknown case {case!r} for {Y.name}; expected one of {known}")


def wahl_configuration(chain, pairing, prefix="C"):
    """A chain of exceptional curves with the branch curve B meeting C_i pairing[i] times."""
    nodes = [Node(f"{prefix}{i}", -d) for i, d in enumerate(chain, 1)]
    nodes.append(Node("B", None, True, "branch"))
    edges = [(f"{prefix}{i}", f"{prefix}{i + 1}") for i in range(1, len(chain))]
    for i, m in enumerate(pairing, 1):
        edges += [("B", f"{prefix}{i}")] * int(m)
    return curve_graph(nodes, edges)


def _fan_for(D, k):
    F = resolution_fan(D, k)
    return F if F.chain else None


def _boundary_multiplicities(D, table) -> dict:
    return {r.label: r.displacement for r in table.rows if r.label.startswith("e_")}


def _discrepancy_evidence(chain, pairing) -> dict:
    rep = discrepancies(chain, pairing)
    return {"chain": list(chain), "pairing": [fmt(x) for x in pairing], **rep.to_json()}


def _boundary_neighbours(D, labels) -> tuple:
    """Boundary edges next to the first and last ray of a resolution fan."""
    order = D.labels()
    i, j = order.index(labels[0]), order.index(labels[-1])
    before, after = order[i - 1], order[(j + 1) % len(order)]
    return (before if before.startswith("e_") else None,
            after if after.startswith("e_") else None)


def _read_from(C, anchor: str) -> list:
    """Squares of a chain, read from the end closest to `anchor`."""
    ends = [i for i, _ in C.nodes if len(C.neighbours(i)) <= 1]
    dist, frontier = {anchor: 0}, [anchor]
    while frontier:
        nxt = []
        for x in frontier:
            for y in C.neighbours(x):
                if y not in dist:
                    dist[y] = dist[x] + 1
                    nxt.append(y)
        frontier = nxt
    return C.chain(start=min(ends, key=lambda e: (dist.get(e, 1 << 30), e)))


def _wahl_cover(D, F, table) -> dict:
    """Double cover over a Wahl point, from the branch data read off the table."""
    chain = F.chain
    pairing = [table.row(l).length for l in F.labels]
    n, b = _odd_multiples([table.row(l).displacement for l in F.labels])
    G = wahl_configuration(chain, pairing)
    G = branch_parity_adjust(G, {f"C{i}": m for i, m in enumerate(b, 1)})
    # boundary curves in the branch locus that touch the chain ends
    extra = []
    for end, lab in zip((1, len(chain)), _boundary_neighbours(D, F.labels)):
        if lab is None:
            continue
        m = table.row(lab).displacement
        if m.denominator == 1 and m % 2 == 1:
            extra.append(("D" + lab[1:], f"C{end}"))
    if extra:
        nodes = list(G.nodes) + [Node(x, None, True, "branch") for x, _ in extra]
        edges = [(e.a, e.b, e.mult, e.point) for e in G.edges] + [(x, c, 1, "") for x, c in extra]
        G = curve_graph(nodes, edges)
    C = double_cover(log_resolve(G))
    comps = [c for c in C.components() if c.chain() is not None and any(s != -1 for s in c.chain())]
    comps.sort(key=lambda c: -len(c.nodes))
    main = comps[0]
    anchor = next((i for i, _ in main.nodes if i.startswith("C1")), main.nodes[0][0])
    ch = _read_from(main, anchor)
    hj = [-x for x in blow_down_chain(ch)]
    s = _quotient_of_chain(hj)
    return {"cartier_multiple": n, "multiplicities": list(b),
            "branch_curves": [f"C{i}" for i, m in enumerate(b, 1) if m % 2] + [x for x, _ in extra],
            "cover_chain": list(ch), "blown_down": hj, "singularity": str(s),
            "graph": C.to_json()}


def _odd_multiples(displacements):
    from .tropical import branch_multiplicities
    return branch_multiplicities(displacements)


def _quotient_of_chain(hj) -> CyclicQuotient:
    from .quotient import continuant
    n, q = continuant(hj)
    s = CyclicQuotient(n, q)
    if hj_expand(n, q) != list(hj):
        raise ArithmeticError(f"chain {hj} does not round-trip")
    return s


def _graph_evidence(C) -> dict:
    alpha = graph_discrepancies(C)
    return {"graph": C.to_json(), "discrepancies": [fmt(a) for a in alpha],
            "min": fmt(min(alpha))}


def _subcase_cover(letter: str) -> tuple:
    R = log_resolve(smooth_subcase(letter))
    C = double_cover(R)
    g = next(c for c in C.components() if any(i.startswith("C1") for i, _ in c.nodes))
    ev = _graph_evidence(g)
    if letter in _SUBCASE_GRAPH:
        ev["matches_expected"] = isomorphic(g, _SUBCASE_GRAPH[letter]())
    return g, ev


def classify_surface(Y, case: str) -> CaseVerdict:
    """Run the displacement, discrepancy and cover steps for one closed case."""
    Y = manetti_surface(Y)
    spec = case_spec(Y, case)
    D = surface_diagram(Y.code)
    _, table = displace_edges(D, drop=spec.drop)
    ev = {"table": table.to_json(), "dropped": [list(p) for p in spec.drop]}
    mults = _boundary_multiplicities(D, table)
    heavy = {k: v for k, v in mults.items() if v >= 2}
    if heavy:
        k = max(sorted(heavy), key=lambda x: heavy[x])
        ev["multiplicity"] = {"edge": k, "curve": "D" + k[1:], "value": fmt(heavy[k])}
        if spec.surface in dict(EXCLUDED_BY_DEGENERATION):
            ev["degeneration_of"] = dict(EXCLUDED_BY_DEGENERATION)[spec.surface]
        return CaseVerdict(Y, spec.case, spec.support, "non-normal",
                           f"{ev['multiplicity']['curve']} has multiplicity {fmt(heavy[k])}", ev)

    name = spec.surface
    if name == "P2":
        return CaseVerdict(Y, spec.case, spec.support, "normal-lc-stratum",
                           "Gorenstein singularities only", ev)

    if name == "P(1,1,4)":
        e1 = table.row("e1")
        ev["discrepancy"] = _discrepancy_evidence([4], [e1.length])
        if spec.case == "I":
            G = curve_graph([Node("C1", -4), Node("B", None, True, "branch")], [])
            C = double_cover(G)
            ev["cover"] = C.to_json()
            ok = len([1 for _, s in C.nodes if s == -4]) == 2 and e1.displacement == 0
            return CaseVerdict(Y, spec.case, spec.support,
                               "normal-lc-stratum" if ok else "not-log-canonical",
                               "two 1/4(1,1)", ev)
        if spec.case == "III":
            return CaseVerdict(Y, spec.case, spec.support, ev["discrepancy"]["verdict"]
                               .replace("log-terminal-range", "normal-lc-stratum"),
                               f"C1.B = {fmt(e1.length)}", ev)
        return _subcase_verdict(Y, spec, ev, table.row("e1"))

    if name in ("P(1,4,25)", "HP(5)"):
        F = resolution_fan(D, 2)
        L = [table.row(l).length for l in F.labels]
        ev["discrepancy"] = _discrepancy_evidence(F.chain, L)
        if ev["discrepancy"]["verdict"] == "not-log-canonical":
            return CaseVerdict(Y, spec.case, spec.support, "not-log-canonical",
                               "1/25(1,4) point not log canonical", ev)
        ev["wahl_cover"] = _wahl_cover(D, F, table)
        basket = ev["wahl_cover"]["singularity"]
        if name == "HP(5)":
            return CaseVerdict(Y, spec.case, spec.support, "normal-lc-stratum", basket, ev)
        e5 = table.row("e5")
        if spec.case == "I":
            if e5.displacement != 0 or e5.length != 0:
                raise ArithmeticError("C5 unexpectedly meets the branch curve")
            C = double_cover(curve_graph([Node("C5", -4), Node("B", None, True, "branch")], []))
            ev["cover_C5"] = C.to_json()
            return CaseVerdict(Y, spec.case, spec.support, "normal-lc-stratum",
                               f"{basket} + two 1/4(1,1)", ev)
        # D_x now lies in the branch curve and supplies the fourth point on C5
        ev["C5_points"] = fmt(e5.length + mults["e_x"])
        v = _subcase_verdict(Y, spec, ev, e5, extra=mults["e_x"])
        return CaseVerdict(Y, spec.case, spec.support, v.verdict, f"{basket} + {v.basket}", v.evidence)

    # the remaining surfaces: discrepancies at the largest kept singular point
    k = max((k for k in D.kept if D.triangle.triple[k] > 1), key=lambda k: D.triangle.triple[k])
    F = resolution_fan(D, k)
    L = [table.row(l).length for l in F.labels]
    ev["discrepancy"] = _discrepancy_evidence(F.chain, L)
    ev["singular_point"] = str(F.singularity)
    if name in dict(EXCLUDED_BY_DEGENERATION):
        ev["degeneration_of"] = dict(EXCLUDED_BY_DEGENERATION)[name]
    verdict = ev["discrepancy"]["verdict"]
    if verdict != "not-log-canonical":
        verdict = "normal-lc-stratum"
    return CaseVerdict(Y, spec.case, spec.support, verdict, f"{F.singularity} point", ev)


def _subcase_verdict(Y, spec, ev, row, extra=0) -> CaseVerdict:
    if row.displacement != 1 or row.length + extra != 4:
        raise ArithmeticError(f"{row.label}: expected four points and multiplicity 1, got "
                              f"{fmt(row.length + extra)} and {fmt(row.displacement)}")
    g, gev = _subcase_cover(spec.subcase)
    ev = dict(ev, subcase_cover=gev)
    lc = min(graph_discrepancies(g)) >= -1
    shape = {"a": "star (simple elliptic quotient)", "b": "forked chain (cusp quotient)",
             "c": "doubly forked chain (cusp quotient)"}.get(spec.subcase)
    if shape is None:
        shape = f"cover over {row.label} has discrepancy {gev['min']}"
    return CaseVerdict(Y, spec.case, spec.support,
                       "normal-lc-stratum" if lc else "not-log-canonical", shape, ev)


# full classification

SURVEYED = ("P2", "P(1,1,4)", "P(1,4,25)", "HP(5)", "HP(13)", "HP(29)", "HP(34)",
            "P(1,25,169)", "P(4,25,841)", "P(1,169,1156)", "HP(5,29)", "HP(2,29)")


@dataclass(frozen=True)
class ClassificationReport:
    data: dict

    @property
    def surviving_bases(self) -> list:
        return self.data["surviving_bases"]

    @property
    def strata(self) -> list:
        return self.data["strata"]

    @property
    def verdicts(self) -> list:
        return self.data["verdicts"]

    def to_json(self) -> dict:
        return self.data

    def dumps(self) -> str:
        return json.dumps(self.data, sort_keys=True, indent=2) + "\n"

    @classmethod
    def loads(cls, text: str) -> "ClassificationReport":
        return cls(json.loads(text))


def _stratum_label(v: CaseVerdict) -> Optional[str]:
    if v.verdict != "normal-lc-stratum":
        return None
    if v.surface.name == "P2":
        return "open"
    if v.surface.name == "HP(5)" and v.case == "generic":
        return "I"
    c = v.case.replace("(", "").replace(")", "")
    return c if c in CODIM else None


def full_classification(depth: int = 6) -> ClassificationReport:
    if depth < 6:
        raise ValueError("depth must be at least 6 to reach every certificate root")
    inputs = {"depth": depth, "cases": list(CASE_LABELS)}
    digest = hashlib.sha256(json.dumps(inputs, sort_keys=True).encode()).hexdigest()
    sweep = nonnormality_sweep(depth)
    exempt = sorted(tuple(sorted(e.triple)) for e in sweep if e.exempt)
    if tuple(exempt) != tuple(t for t in EXCEPTIONS):
        raise ArithmeticError(f"uncertified triples {exempt} differ from the exception list")

    verdicts = [classify_surface(c.surface, c.case) for c in CASES]
    npts = len(lattice_points(markov_triangle(()).polygon))
    sections = npts - 1
    strata = []
    for v in verdicts:
        lab = _stratum_label(v)
        if lab is None:
            continue
        base = v.surface.name
        dim = sections - DIM_AUT[base] - CODIM[lab]
        strata.append({"base": base, "case": lab, "dimension": dim,
                       "from": v.label, "basket": v.basket})
    strata.sort(key=lambda s: (SURVEYED.index(s["base"]), CODIM.get(s["case"], 0)))
    surviving = [s for s in SURVEYED if any(v.surface.name == s and v.verdict == "normal-lc-stratum"
                                            for v in verdicts)]
    data = {
        "tool": "manetti", "version": __version__, "input": inputs, "input_hash": digest,
        "sweep": {
            "depth": depth,
            "triples": len(sweep),
            "exempt": [list(t) for t in exempt],
            "certified": sum(1 for e in sweep if not e.exempt),
            "cross_check_disagreements": [e.word for e in sweep if e.agrees is False],
            "entries": [e.to_json() for e in sweep],
        },
        "surveyed": list(SURVEYED),
        "verdicts": [v.to_json() for v in verdicts],
        "surviving_bases": surviving,
        "strata": strata,
        "constants": {"lattice_points": npts, "sections": sections,
                      "dim_aut": dict(sorted(DIM_AUT.items())),
                      "dim_aut_source": "automorphism counts for the weighted projective "
                                        "and partially smoothed surfaces, taken as given"},
        "adjacencies": [{"stratum": a, "in_closure_of": b} for a, b in ADJACENCIES],
        "excluded_by_degeneration": [{"surface": a, "degeneration_of": b}
                                     for a, b in EXCLUDED_BY_DEGENERATION],
    }
    return ClassificationReport(data)
