"""Cyclic quotient singularities, Hirzebruch-Jung chains and discrepancies."""

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt
from typing import Optional, Sequence

import numpy as np

from .lattice import determinant, fmt, solve_linear


@dataclass(frozen=True)
class CyclicQuotient:
    """The singularity 1/n(1,q); `dual` records that q was swapped for q^-1 mod n."""
    n: int
    q: int
    dual: bool = False

    def __post_init__(self):
        if not (0 < self.q < self.n) or gcd(self.n, self.q) != 1:
            if not (self.n == 1 and self.q == 0):
                raise ValueError(f"1/{self.n}(1,{self.q}) is not a valid cyclic quotient")

    def other(self) -> "CyclicQuotient":
        return CyclicQuotient(self.n, pow(self.q, -1, self.n), not self.dual)

    def same_as(self, o: "CyclicQuotient") -> bool:
        return self.n == o.n and (self.q == o.q or self.q * o.q % self.n == 1)

    def __str__(self):
        return f"1/{self.n}(1,{self.q})"


def hj_expand(n: int, q: int) -> list:
    """[d1,...,dk] with n/q = d1 - 1/(d2 - 1/(...)), all di >= 2."""
    if not (0 < q < n) or gcd(n, q) != 1:
        raise ValueError(f"need 0 < q < n coprime, got n={n}, q={q}")
    out = []
    while q:
        if 2 * q >= n:
            # a run of 2s keeps n - q fixed, so emit it in one go
            r = n - q
            m = (2 * q - n) // r + 1
            out.extend([2] * m)
            n, q = n - m * r, q - m * r
        else:
            d = -(-n // q)
            out.append(d)
            n, q = q, d * q - n
    return out


def hj_value(chain: Sequence[int]) -> Fraction:
    x = Fraction(chain[-1])
    for d in reversed(chain[:-1]):
        x = d - 1 / x
    return x


def continuant(chain: Sequence[int], reverse: bool = False) -> tuple:
    """(numerator, denominator) of the chain's continued fraction.

    The numerator is also |det| of the chain's intersection matrix.
    """
    p, pp = 1, 0
    r, rr = 0, -1
    for d in (reversed(chain) if reverse else chain):
        p, pp = d * p - pp, p
        r, rr = d * r - rr, r
    return p, r


def coprime_pairs(nmax: int):
    """Arrays (n, q) of every coprime 0 < q < n <= nmax."""
    n = np.repeat(np.arange(2, nmax + 1, dtype=np.int64), np.arange(1, nmax))
    start = np.repeat(np.cumsum(np.arange(0, nmax - 1)), np.arange(1, nmax))
    q = np.arange(len(n), dtype=np.int64) - start + 1
    keep = np.gcd(n, q) == 1
    return n[keep], q[keep]


def hj_expand_batch(N, Q) -> tuple:
    """Vectorised hj_expand over arrays of pairs.

    Returns run-length tokens (D, M), one row per step: entry d repeated m
    times. Only d = 2 ever repeats; m = 0 pads pairs that have finished.
    """
    k = len(N)
    idx = np.arange(k)
    n, q = np.asarray(N, np.int64).copy(), np.asarray(Q, np.int64).copy()
    Ds, Ms = [], []
    while len(idx):
        d, m = np.ones(k, np.int64), np.zeros(k, np.int64)
        run = 2 * q >= n
        r = n - q
        mm = np.where(run, (2 * q - n) // r + 1, 1)
        dd = np.where(run, 2, -(-n // q))
        n, q = np.where(run, n - mm * r, q), np.where(run, q - mm * r, dd * q - n)
        d[idx], m[idx] = dd, mm
        Ds.append(d)
        Ms.append(m)
        live = q > 0
        idx, n, q = idx[live], n[live], q[live]
    return np.array(Ds).reshape(-1, k), np.array(Ms).reshape(-1, k)


def decode_tokens(D, M, j: int) -> list:
    out = []
    for d, m in zip(D[:, j].tolist(), M[:, j].tolist()):
        out += [d] * m
    return out


def _batch_continuant(D, M, reverse=False):
    k = D.shape[1]
    p = np.stack([np.ones(k, np.int64), np.zeros(k, np.int64)])
    pp = np.stack([np.zeros(k, np.int64), -np.ones(k, np.int64)])
    for i in (range(len(D) - 1, -1, -1) if reverse else range(len(D))):
        d, m = D[i], M[i]
        # d repeated m times as one 2x2 step; closed form for runs of 2s
        two, on = d == 2, (m > 0).astype(np.int64)
        a = np.where(two, m + 1, np.where(on, d, 1))
        b = np.where(two, -m, -on)
        c = np.where(two, m, on)
        e = np.where(two, 1 - m, 1 - on)
        p, pp = a * p + b * pp, c * p + e * pp
    return p[0], p[1]


def hj_sweep(nmax: int) -> int:
    """Check the round trip and |det N| = n for every coprime 0 < q < n <= nmax."""
    N, Q = coprime_pairs(nmax)
    if not len(N):
        return 0
    D, M = hj_expand_batch(N, Q)
    if ((D < 2) & (M > 0)).any():
        raise ArithmeticError("chain entry below 2")
    p, r = _batch_continuant(D, M)
    bad = np.flatnonzero((p != N) | (r != Q))
    if len(bad):
        j = bad[0]
        raise ArithmeticError(f"round trip failed for {N[j]}/{Q[j]}")
    p, _ = _batch_continuant(D, M, reverse=True)
    bad = np.flatnonzero(p != N)
    if len(bad):
        j = bad[0]
        raise ArithmeticError(f"|det N| != n for {N[j]}/{Q[j]}")
    return len(N)


@dataclass(frozen=True)
class WahlType:
    kind: str           # "wahl", "T", or "neither"
    d: int = 0
    n: int = 0
    a: int = 0
    flag: Optional[str] = None

    @property
    def p(self):
        return self.n


def is_wahl(s: CyclicQuotient) -> WahlType:
    """Recognise 1/(d n^2)(1, d n a - 1); d = 1 is the Wahl case."""
    for qq, dual in ((s.q, False), (pow(s.q, -1, s.n), True)):
        for n in range(2, isqrt(s.n) + 1):
            if s.n % (n * n):
                continue
            d = s.n // (n * n)
            if (qq + 1) % (d * n):
                continue
            a = (qq + 1) // (d * n)
            if 0 < a < n and gcd(a, n) == 1:
                flag = "matched through the dual representative" if dual else None
                if d == 1:
                    return WahlType("wahl", 1, n, a, flag)
                note = f"{s.n} is not a square: T-singularity with d={d}, not Wahl"
                return WahlType("T", d, n, a, note if flag is None else f"{note}; {flag}")
    return WahlType("neither")


def chain_matrix(chain: Sequence[int]) -> list:
    """Tridiagonal intersection matrix of an exceptional chain."""
    if not chain:
        raise ValueError("empty chain")
    k = len(chain)
    N = [[0] * k for _ in range(k)]
    for i, d in enumerate(chain):
        N[i][i] = -d
        if i + 1 < k:
            N[i][i + 1] = N[i + 1][i] = 1
    # negative definite: leading minors alternate in sign
    for m in range(1, k + 1):
        det = determinant([row[:m] for row in N[:m]])
        if (-1) ** m * det <= 0:
            raise ArithmeticError("chain matrix is not negative definite")
    n = hj_value(chain).numerator
    if abs(determinant(N)) != n:
        raise ArithmeticError("|det N| differs from the chain's n")
    return N


def graph_matrix(squares: Sequence[int], edges: Sequence) -> list:
    k = len(squares)
    N = [[0] * k for _ in range(k)]
    for i, s in enumerate(squares):
        N[i][i] = s
    for i, j, *m in edges:
        N[i][j] += m[0] if m else 1
        N[j][i] = N[i][j]
    return N


def blow_down_chain(squares: Sequence[int]) -> list:
    """Contract -1 curves of a chain, leftmost first, until none are left.

    Each contraction raises the square of each neighbour by one. A
    non-negative square strictly inside the chain means the chain did not
    come from resolving a quotient singularity and is reported.
    """
    chain = list(squares)
    while -1 in chain:
        i = chain.index(-1)
        del chain[i]
        if i > 0:
            chain[i - 1] += 1
        if i < len(chain):
            chain[i] += 1
        if any(x >= 0 for x in chain[1:-1]):
            raise ValueError(f"blow-down produced a non-negative interior square: {chain}")
    return chain


@dataclass(frozen=True)
class DiscrepancyReport:
    alpha: tuple
    beta: tuple
    verdict: str

    def to_json(self):
        return {"alpha": [fmt(a) for a in self.alpha], "beta": [fmt(b) for b in self.beta],
                "verdict": self.verdict}


def discrepancies(chain: Sequence[int], pairing: Sequence) -> DiscrepancyReport:
    """alpha = N^-1 beta with beta_i = -2 + d_i + (B.D_i)/2.

    `pairing` holds the raw intersection numbers of the strict transform
    with each curve; the half is applied here.
    """
    if len(pairing) != len(chain):
        raise ValueError("pairing and chain lengths differ")
    if any(Fraction(x) < 0 for x in pairing):
        raise ValueError("pairings must be non-negative")
    N = chain_matrix(chain)
    beta = [Fraction(-2 + d) + Fraction(x) / 2 for d, x in zip(chain, pairing)]
    alpha = solve_linear(N, beta)
    if any(a < -1 for a in alpha):
        verdict = "not-log-canonical"
    elif any(a == -1 for a in alpha):
        verdict = "boundary"
    else:
        verdict = "log-terminal-range"
    return DiscrepancyReport(tuple(alpha), tuple(beta), verdict)


def normalize_singularity(a: int, b: int, c: int) -> CyclicQuotient:
    """The vertex singularity 1/a^2(b^2, c^2) written as 1/a^2(1, aq-1), q = 3c/b mod a."""
    if a * a + b * b + c * c != 3 * a * b * c:
        raise ValueError(f"({a},{b},{c}) is not a Markov triple")
    if a == 1:
        return CyclicQuotient(1, 0)
    qq = 3 * c * pow(b, -1, a) % a
    n, r = a * a, a * qq - 1
    if (b * b * r - c * c) % n:
        raise ArithmeticError("normal form identity failed")
    return CyclicQuotient(n, r)
