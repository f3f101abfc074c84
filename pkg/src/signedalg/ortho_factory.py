"""Construction, factorization and counting of D-orthogonal matrices.

A 0-1 matrix P is D-orthogonal when P^T P = I mod 2: its columns have odd
mass and pairwise even intersections.  The elementary examples are
``I + u u^T`` with ``u`` of even mass; every D-orthogonal matrix is a
product of at most n of them followed by a permutation.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Sequence

import numpy as np

from . import _bounds
from .dyadic_core import BitMatrix, BitVec, gf2_matmul, gf2_rank, tensor
from .dyadic_invert import is_d_orthogonal
from .errors import BadSeed, FlatlineInSpan, NotOrthogonal, OddMass


@dataclass(frozen=True)
class ElementaryFactor:
    u: BitVec

    def __post_init__(self):
        if self.u.mass() % 2:
            raise OddMass(f"u={self.u} has odd mass; I + u u^T would not be D-orthogonal")

    def matrix(self) -> BitMatrix:
        return BitMatrix.identity(self.u.len) ^ tensor(self.u, self.u)


@dataclass(frozen=True)
class OrthoFactorization:
    """P = K_1 K_2 ... K_r perm (mod 2), each K_i = I + u_i u_i^T."""

    factors: tuple[ElementaryFactor, ...]
    perm: BitMatrix

    def reassemble(self) -> BitMatrix:
        out = self.perm
        for f in reversed(self.factors):
            out = gf2_matmul(f.matrix(), out)
        return out

    def perm_images(self) -> list[int]:
        return [self.perm.column(j).support()[0] for j in range(self.perm.cols)]


def elementary_orthogonal(u: BitVec) -> BitMatrix:
    return ElementaryFactor(u).matrix()


def _project(u: int, basis: Sequence[int]) -> int:
    for p in basis:
        if (u & p).bit_count() & 1:
            u ^= p
    return u


def gram_schmidt_complete(seed: Sequence[BitVec], n: int) -> BitMatrix:
    """Extend pairwise D-orthogonal odd vectors to an n x n D-orthogonal matrix.

    Candidates are scanned in increasing integer order; each one is made
    orthogonal to the current columns by u' = u + sum <u p_j> p_j and
    accepted when it is odd and, before the last column, keeps the running
    sum of columns off the all-ones vector.
    """
    full = (1 << n) - 1
    cols: list[int] = []
    for v in seed:
        if v.len != n:
            raise BadSeed(f"seed vector {v} has length {v.len}, expected {n}")
        if v.mass() % 2 == 0:
            raise BadSeed(f"seed vector {v} has even mass")
        for w in cols:
            if (v.bits & w).bit_count() & 1:
                raise BadSeed(f"seed vectors {v} and {BitVec(n, w)} meet in an odd set")
        cols.append(v.bits)
    if len(cols) > n:
        raise BadSeed("more seed vectors than the dimension")
    running = 0
    for c in cols:
        running ^= c
    if len(cols) < n and cols and running == full:
        # the all-ones vector lies in the span iff it is the sum of every seed vector
        raise FlatlineInSpan("the all-ones vector is in the span of the seed")
    while len(cols) < n:
        last = len(cols) == n - 1
        for u in range(1, full + 1):
            cand = _project(u, cols)
            if not cand.bit_count() & 1:
                continue
            if not last and running ^ cand == full:
                continue
            cols.append(cand)
            running ^= cand
            break
        else:  # pragma: no cover - excluded by the parity argument
            raise FlatlineInSpan("no admissible extension vector")
    return BitMatrix.from_columns([BitVec(n, c) for c in cols], n)


def factor_orthogonal(P: BitMatrix) -> OrthoFactorization:
    """Write P as a product of elementary factors times a permutation.

    Column j of the running product is sent to a unit vector e_k by
    K = I + (p + e_k)(p + e_k)^T, with k the smallest still-unused row
    where p vanishes; earlier unit columns are left untouched.
    """
    n = P.require_square()
    if not is_d_orthogonal(P):
        raise NotOrthogonal("P^T P differs from I mod 2")
    M = P
    used = 0
    factors: list[ElementaryFactor] = []
    for j in range(n):
        p = M.column(j)
        if p.mass() == 1:
            used |= p.bits
            continue
        k = next(i for i in range(n) if not (used >> i & 1) and not p[i])
        f = ElementaryFactor(BitVec(n, p.bits ^ (1 << k)))
        M = gf2_matmul(f.matrix(), M)
        factors.append(f)
        used |= 1 << k
    # K_r ... K_1 P = M is a permutation, so P = K_1 ... K_r M
    return OrthoFactorization(factors=tuple(factors), perm=M)


def random_d_orthogonal(n: int, rng: np.random.Generator, depth: int | None = None) -> BitMatrix:
    """Product of ``depth`` (default n) random elementary factors and a random permutation."""
    depth = n if depth is None else depth
    M = BitMatrix.permutation([int(i) for i in rng.permutation(n)])
    for _ in range(depth):
        bits = [int(b) for b in rng.integers(0, 2, size=n)]
        if sum(bits) % 2:
            bits[int(rng.integers(n))] ^= 1
        M = gf2_matmul(elementary_orthogonal(BitVec.from_bits(bits)), M)
    return M


# -- counting -------------------------------------------------------------


@dataclass(frozen=True)
class CountReport:
    n: int
    exact: int
    formula: int | None
    reference_asymptotic: float | None = None
    label: str = ""
    notes: tuple[str, ...] = field(default_factory=tuple)

    @property
    def match(self) -> bool | None:
        if self.formula is None:
            return None
        return self.exact == self.formula

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "label": self.label,
            "exact": self.exact,
            "formula": self.formula,
            "match": self.match,
            "reference_asymptotic": self.reference_asymptotic,
            "notes": list(self.notes),
        }


def euler_phi(q: float, terms: int = 200) -> float:
    """Euler function prod_{k>=1} (1 - q^k)."""
    return math.prod(1.0 - q**k for k in range(1, terms + 1))


def gl2_order(n: int) -> int:
    """Number of invertible n x n matrices over GF(2)."""
    return math.prod(2**n - 2**i for i in range(n))


def printed_ordered_bases(n: int) -> int:
    """prod_{i=1}^{n-1} (2^n - 2^i), the ordered-basis count with the index range as published."""
    return math.prod(2**n - 2**i for i in range(1, n))


def _scan_range(n: int, kind: str, start: int, stop: int) -> int:
    m = (1 << n) - 1
    eye = tuple(1 << i for i in range(n))
    total = 0
    for code in range(start, stop):
        P = BitMatrix(n, n, tuple((code >> (n * i)) & m for i in range(n)))
        if kind == "di":
            total += gf2_rank(P) == n
        elif kind == "dorth":
            total += gf2_matmul(P.transpose(), P).data == eye
        elif kind == "symdi":
            total += P == P.transpose() and gf2_rank(P) == n
        else:
            raise ValueError(kind)
    return total


def _scan(n: int, kind: str, jobs: int) -> int:
    _bounds.check(n, _bounds.MATRIX_SCAN_MAX, "exhaustive matrix scan")
    total = 1 << (n * n)
    if jobs <= 1 or total < 4096:
        return _scan_range(n, kind, 0, total)
    step = -(-total // jobs)
    bounds = [(a, min(a + step, total)) for a in range(0, total, step)]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        parts = pool.map(_scan_range, [n] * len(bounds), [kind] * len(bounds),
                         [a for a, _ in bounds], [b for _, b in bounds])
        return sum(parts)


def count_di_exhaustive(n: int, jobs: int = 1) -> CountReport:
    exact = _scan(n, "di", jobs)
    notes = ()
    printed = printed_ordered_bases(n)
    if printed != exact:
        notes = (f"ordered-basis product over i=1..n-1 gives {printed}; "
                 f"over i=0..n-1 gives {gl2_order(n)}",)
    return CountReport(n=n, exact=exact, formula=printed,
                       reference_asymptotic=euler_phi(0.5) * 2.0 ** (n * n),
                       label="dyadically invertible matrices", notes=notes)


def count_d_orthogonal_exhaustive(n: int, jobs: int = 1) -> CountReport:
    exact = _scan(n, "dorth", jobs)
    return CountReport(n=n, exact=exact, formula=None,
                       reference_asymptotic=2.0 ** (n * n / 2),
                       label="D-orthogonal matrices")


def symmetric_di_formula(n: int) -> int:
    """prod_{i=1}^{m} 2^{2i} (2^{2i-1} - 1) with n = 2m or 2m + 1."""
    m = n // 2
    return math.prod(2 ** (2 * i) * (2 ** (2 * i - 1) - 1) for i in range(1, m + 1))


def count_symmetric_di_exhaustive(n: int, jobs: int = 1) -> CountReport:
    exact = _scan(n, "symdi", jobs)
    formula = symmetric_di_formula(n)
    orth = _scan(n, "dorth", jobs)
    notes = []
    if exact != orth:
        notes.append(f"symmetric DI count {exact} differs from D-orthogonal count {orth}; "
                     "the coset O M and the set of symmetric DI matrices are not equinumerous")
    m = n // 2
    ref = euler_phi(0.5) / euler_phi(0.25) * 2.0 ** (2 * m * m + m)
    return CountReport(n=n, exact=exact, formula=formula, reference_asymptotic=ref,
                       label="symmetric dyadically invertible matrices", notes=tuple(notes))


@lru_cache(maxsize=None)
def partition_function(m: int) -> int:
    """Number of partitions of m, by Euler's pentagonal-number recurrence."""
    if m < 0:
        return 0
    if m == 0:
        return 1
    total = 0
    k = 1
    while True:
        g1 = k * (3 * k - 1) // 2
        if g1 > m:
            break
        g2 = k * (3 * k + 1) // 2
        sign = 1 if k % 2 else -1
        total += sign * partition_function(m - g1)
        if g2 <= m:
            total += sign * partition_function(m - g2)
        k += 1
    return total


def hardy_ramanujan(m: float) -> float:
    a = 1.0 / (4.0 * math.sqrt(3.0))
    b = math.pi * math.sqrt(2.0 / 3.0)
    return a * math.exp(b * math.sqrt(m)) / m


def p0_printed(n: int) -> int:
    """Literal weighted sum: sum_{j=0}^{m} j p(m-j), plus p(m) when n = 2m."""
    m = n // 2
    total = sum(j * partition_function(m - j) for j in range(m + 1))
    if n % 2 == 0:
        total += partition_function(m)
    return total


def _disjoint_even_block_patterns(n: int) -> set[tuple[int, ...]]:
    """Enumerate I + sum u_i u_i^T over disjoint even u_i; collect sorted block sizes."""
    patterns: set[tuple[int, ...]] = set()

    def blocks_from(free: int):
        if not free:
            yield ()
            return
        low = free & -free
        rest = free ^ low
        # smallest free index stays on the identity part
        yield from blocks_from(rest)
        # or opens a block together with an odd-sized subset of the rest
        sub = rest
        while sub:
            if sub.bit_count() % 2 == 1:
                for tail in blocks_from(rest ^ sub):
                    yield ((low | sub),) + tail
            sub = (sub - 1) & rest

    eye = BitMatrix.identity(n)
    for blocks in blocks_from((1 << n) - 1):
        P = eye
        for b in blocks:
            u = BitVec(n, b)
            P = P ^ tensor(u, u)
        if not is_d_orthogonal(P):  # pragma: no cover - guaranteed by even masses
            raise AssertionError("disjoint even blocks must give a D-orthogonal matrix")
        patterns.add(tuple(sorted(BitVec(n, b).mass() for b in blocks)))
    return patterns


def p0_counts(n: int) -> CountReport:
    """Distinguishable block patterns of I + sum u_i u_i^T with disjoint even u_i.

    ``exact`` enumerates the matrices (n <= 10) and counts distinct multisets
    of block sizes; ``formula`` is the literal weighted sum.
    """
    _bounds.check(n, 10, "block-pattern enumeration")
    exact = len(_disjoint_even_block_patterns(n))
    formula = p0_printed(n)
    by_partitions = sum(partition_function(t) for t in range(n // 2 + 1))
    notes = [f"sum of p(t) for t <= n/2 gives {by_partitions}"]
    if formula != exact:
        notes.append(f"weighted sum gives {formula}, enumeration gives {exact}")
    b = math.pi * math.sqrt(2.0 / 3.0)
    a = 1.0 / (4.0 * math.sqrt(3.0))
    ref = a * 4.0 / b**2 * math.exp(b * math.sqrt(n / 2)) if n else None
    return CountReport(n=n, exact=exact, formula=formula, reference_asymptotic=ref,
                       label="p0 block patterns", notes=tuple(notes))
