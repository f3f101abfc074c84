"""Dyadic invertibility, D-orthogonality and anticommutative matrices.

A square 0-1 matrix P is dyadically invertible (DI) when some integer
matrix A gives AP = I mod 2.  Everything here is decided by Gaussian
elimination over GF(2); no integer determinants are formed.
"""

from __future__ import annotations

from dataclasses import dataclass

from .dyadic_core import BitMatrix, complement_identity, gf2_matmul, gf2_rank
from .errors import MalformedGram, NotAnticommutative, NotInvertible


@dataclass(frozen=True)
class AcBlockForm:
    """Canonical block split of P^T P for an anticommutative P.

    After relabelling indices by ``perm`` the Gram matrix is
    ``[[I_m, II], [II, Ī_k]]``.
    """

    m: int
    k: int
    perm: tuple[int, ...]
    di: bool

    @property
    def antiorthogonal(self) -> bool:
        return self.m == 0

    @property
    def orthogonal(self) -> bool:
        return self.k == 0


def is_dyadically_invertible(P: BitMatrix) -> bool:
    n = P.require_square()
    return gf2_rank(P) == n


def dyadic_inverse(P: BitMatrix) -> BitMatrix:
    """Gauss-Jordan inverse mod 2; raises NotInvertible for singular P."""
    n = P.require_square()
    rows = [r | (1 << (n + i)) for i, r in enumerate(P.data)]
    for j in range(n):
        bit = 1 << j
        pivot = next((i for i in range(j, n) if rows[i] & bit), None)
        if pivot is None:
            raise NotInvertible(f"matrix has mod-2 rank below {n}")
        rows[j], rows[pivot] = rows[pivot], rows[j]
        for i in range(n):
            if i != j and rows[i] & bit:
                rows[i] ^= rows[j]
    return BitMatrix(n, n, tuple(r >> n for r in rows))


def gram(P: BitMatrix) -> BitMatrix:
    """P^T P mod 2: column masses on the diagonal, pairwise intersections off it."""
    return gf2_matmul(P.transpose(), P)


def is_d_orthogonal(P: BitMatrix) -> bool:
    n = P.require_square()
    return gram(P) == BitMatrix.identity(n)


def is_anticommutative_matrix(P: BitMatrix) -> bool:
    """Test P^T Ī P = Ī mod 2, i.e. P maps anticommutative generators to anticommutative ones.

    Vacuously true for n <= 1.
    """
    n = P.require_square()
    if n <= 1:
        return True
    cI = complement_identity(n)
    return gf2_matmul(gf2_matmul(P.transpose(), cI), P) == cI


def canonical_ac_blocks(P: BitMatrix) -> AcBlockForm:
    n = P.require_square()
    if not is_anticommutative_matrix(P):
        raise NotAnticommutative("P^T Ī P differs from Ī")
    C = gram(P)
    diag = [C[i, i] for i in range(n)]
    # odd columns first; ties keep index order
    perm = tuple(sorted(range(n), key=lambda i: (1 - diag[i], i)))
    m = sum(diag)
    k = n - m
    want = [[0] * n for _ in range(n)]
    for a in range(n):
        for b in range(n):
            if a < m and b < m:
                want[a][b] = int(a == b)
            elif a >= m and b >= m:
                want[a][b] = int(a != b)
            else:
                want[a][b] = 1
    if C.permute(perm) != BitMatrix.from_rows(want):
        raise MalformedGram("P^T P does not match [[I, II], [II, Ī]]")
    di = not (m % 2 == 0 and k % 2 == 1)
    return AcBlockForm(m=m, k=k, perm=perm, di=di)


def add_column_matrix(n: int, i: int = 0) -> BitMatrix:
    """Matrix adding column i to every other column: the 'multiply by e_i' replacement."""
    rows = [1 << j for j in range(n)]
    rows[i] = (1 << n) - 1
    return BitMatrix(n, n, tuple(rows))


def add_row_matrix(n: int, src: int = 0, dst: int = 1) -> BitMatrix:
    """Elementary row operation: add row ``src`` to row ``dst`` (left action)."""
    rows = [1 << j for j in range(n)]
    rows[dst] |= 1 << src
    return BitMatrix(n, n, tuple(rows))
