"""Matrix representation of double-logic elements.

Each coordinate j carries one of the four 2x2 blocks

    I = [[1,0],[0,1]]   R = [[0,1],[1,0]]   S = [[1,0],[0,-1]]   A = RS = [[0,-1],[1,0]]

chosen by the exponent pair (s_j, p_j), and an element on n coordinates is
represented by the Kronecker product of its blocks with coordinate 0 as the
innermost (rightmost) factor.  Row and column indices are Walsh indices
q = sum_j q_j 2^j, so coordinate 0 is the lowest bit.  With this ordering
the 4x4 quaternion matrices in the standard (1, r_1, r_2, r_1 r_2) basis come
out exactly.

Every such matrix is a signed permutation: column q has a single entry
sign * (-1)^<p, q> in row q xor s.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Literal

import numpy as np

from .dyadic_core import BitVec
from .errors import LengthMismatch
from .signed_group import GroupElement, mul, signature

I2 = np.array([[1, 0], [0, 1]], dtype=np.int64)
R2 = np.array([[0, 1], [1, 0]], dtype=np.int64)
S2 = np.array([[1, 0], [0, -1]], dtype=np.int64)
A2 = R2 @ S2

# (s_j, p_j) -> 2x2 block of R^s S^p
BLOCKS = {(0, 0): I2, (1, 0): R2, (0, 1): S2, (1, 1): A2}

DENSE_MAX = 6


@dataclass(frozen=True)
class RepMatrix:
    """Signed permutation form: ``rows[q]`` is the row hit by column q, ``signs[q]`` its entry."""

    n: int
    rows: np.ndarray
    signs: np.ndarray

    def dense(self) -> np.ndarray:
        size = 1 << self.n
        out = np.zeros((size, size), dtype=np.int64)
        out[self.rows, np.arange(size)] = self.signs
        return out

    def __matmul__(self, other: RepMatrix) -> RepMatrix:
        # (self @ other) column q = self applied to (signs_o[q] * e_{rows_o[q]})
        rows = self.rows[other.rows]
        signs = self.signs[other.rows] * other.signs
        return RepMatrix(self.n, rows, signs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, RepMatrix):
            return NotImplemented
        return (self.n == other.n and np.array_equal(self.rows, other.rows)
                and np.array_equal(self.signs, other.signs))

    def __hash__(self):
        return hash((self.n, self.rows.tobytes(), self.signs.tobytes()))


def represent_dense(e: GroupElement, n: int | None = None) -> np.ndarray:
    """Dense 2^n x 2^n matrix, built one coordinate (one doubling step) at a time."""
    n = e.n if n is None else n
    if e.n != n:
        raise LengthMismatch(f"element has length {e.n}, asked for {n} levels")
    out = np.ones((1, 1), dtype=np.int64)
    for j in range(n):
        out = np.kron(BLOCKS[(e.s[j], e.p[j])], out)
    return e.sign * out


def represent_perm(e: GroupElement, n: int | None = None) -> RepMatrix:
    """Signed permutation form, computed directly from (s, p) without forming the matrix."""
    n = e.n if n is None else n
    if e.n != n:
        raise LengthMismatch(f"element has length {e.n}, asked for {n} levels")
    q = np.arange(1 << n, dtype=np.int64)
    parity = np.bitwise_count(q & e.p.bits) & 1
    signs = e.sign * (1 - 2 * parity.astype(np.int64))
    return RepMatrix(n, q ^ e.s.bits, signs)


def represent(e: GroupElement, n: int | None = None) -> np.ndarray | RepMatrix:
    """Dense matrix for n <= 6, signed permutation form beyond."""
    n = e.n if n is None else n
    if n <= DENSE_MAX:
        return represent_dense(e, n)
    return represent_perm(e, n)


def verify_homomorphism(e: GroupElement, f: GroupElement, n: int | None = None) -> bool:
    n = e.n if n is None else n
    if e.n != n or f.n != n:
        raise LengthMismatch("elements and level count disagree")
    if n <= DENSE_MAX:
        return bool(np.array_equal(represent_dense(mul(e, f), n),
                                   represent_dense(e, n) @ represent_dense(f, n)))
    return represent_perm(mul(e, f), n) == represent_perm(e, n) @ represent_perm(f, n)


def format_matrix(M: np.ndarray) -> str:
    """Rows of space-separated entries, e.g. "0 -1"."""
    return "".join(" ".join(str(int(x)) for x in row) + "\n" for row in np.asarray(M))


# -- named elements -----------------------------------------------------------


def code(top: str, bottom: str) -> GroupElement:
    """Element from a double-logic code; see GroupElement.from_code."""
    return GroupElement.from_code(top, bottom)


def quaternion_units() -> dict[str, GroupElement]:
    """i, j, k on two coordinates; i^2 = j^2 = k^2 = ijk = -1."""
    i = code("11", "01")  # S_1 R_1 S_2 (1-based) = -R_1 S_1 S_2
    j = code("10", "10")  # S_2 R_2
    k = code("01", "11")  # S_1 R_1 R_2
    return {"i": i, "j": j, "k": k}


def pauli_triple() -> dict[str, GroupElement]:
    """sigma_1, sigma_2, sigma_3 and the central iota on two coordinates."""
    s1 = code("00", "10")  # R_2
    s3 = code("10", "00")  # S_2
    s2 = -code("11", "11")
    iota = code("01", "01")  # S_1 R_1
    return {"sigma1": s1, "sigma2": s2, "sigma3": s3, "iota": iota}


# -- toy Fock operators --------------------------------------------------------

FockKind = Literal["number", "annihilation", "creation", "R", "S"]


def toy_fock_apply(kind: FockKind, j: int, idx: BitVec) -> tuple[int, BitVec]:
    """Action of a one-coordinate operator on the Walsh basis vector w(idx).

    Returns (coefficient, new index); a zero coefficient means the result is 0.
    """
    if not 0 <= j < idx.len:
        raise IndexError(f"coordinate {j} outside 0..{idx.len - 1}")
    pj = idx[j]
    flipped = BitVec(idx.len, idx.bits ^ (1 << j))
    if kind == "number":
        return pj, idx
    if kind == "annihilation":
        return pj, flipped
    if kind == "creation":
        return 1 - pj, flipped
    if kind == "R":
        return 1, flipped
    if kind == "S":
        return 1 - 2 * pj, idx
    raise ValueError(f"unknown operator kind {kind!r}")


def fock_matrix(kind: FockKind, j: int, n: int) -> np.ndarray:
    """Dense matrix of toy_fock_apply on all 2^n Walsh indices."""
    size = 1 << n
    out = np.zeros((size, size), dtype=np.int64)
    for q in range(size):
        c, out_idx = toy_fock_apply(kind, j, BitVec(n, q))
        if c:
            out[out_idx.bits, q] += c
    return out


# -- 2x2 anticommutants ----------------------------------------------------------


@dataclass(frozen=True)
class Quadruple2x2:
    """gamma I + a R + b S + c A."""

    gamma: Fraction | int | float
    a: Fraction | int | float
    b: Fraction | int | float
    c: Fraction | int | float

    @property
    def v(self) -> tuple:
        return (self.a, self.b, self.c)

    def standard(self) -> np.ndarray:
        """Entries [[p, q], [r, s]] with p = gamma + b, s = gamma - b, q = a - c, r = a + c."""
        g, a, b, c = self.gamma, self.a, self.b, self.c
        return np.array([[g + b, a - c], [a + c, g - b]], dtype=object)

    @classmethod
    def from_standard(cls, M) -> Quadruple2x2:
        (p, q), (r, s) = [[Fraction(x) for x in row] for row in M]
        return cls((p + s) / 2, (q + r) / 2, (p - s) / 2, (r - q) / 2)

    def conjugate(self) -> Quadruple2x2:
        """gamma - v."""
        return Quadruple2x2(self.gamma, -self.a, -self.b, -self.c)

    def scalar_free(self) -> bool:
        return self.gamma == 0


def g_form(v, w):
    """ax + by - cz for v = (a, b, c) and w = (x, y, z)."""
    (a, b, c), (x, y, z) = v, w
    return a * x + b * y - c * z


def anticommutes(M: Quadruple2x2, N: Quadruple2x2) -> bool:
    A, B = M.standard(), N.standard()
    return bool(np.all(A.dot(B) + B.dot(A) == 0))


@dataclass(frozen=True)
class AnticommutantDescription:
    """All 2x2 matrices anticommuting with M, as a basis of a vector space.

    ``case`` is 'scalar-free' (gamma = 0: the scalar-free w with G(v, w) = 0),
    'conjugate' (gamma != 0 and G(v, v) = gamma^2: multiples of gamma - v),
    or 'zero' (only the zero matrix).
    """

    case: str
    basis: tuple[Quadruple2x2, ...]

    @property
    def dimension(self) -> int:
        return len(self.basis)


def anticommutant_2x2(M: Quadruple2x2) -> AnticommutantDescription:
    g = M.gamma
    a, b, c = M.v
    if g == 0:
        if (a, b, c) == (0, 0, 0):
            basis = (Quadruple2x2(1, 0, 0, 0), Quadruple2x2(0, 1, 0, 0),
                     Quadruple2x2(0, 0, 1, 0), Quadruple2x2(0, 0, 0, 1))
            return AnticommutantDescription("zero-matrix", basis)
        # scalar-free w = (x, y, z) with ax + by - cz = 0
        if a != 0:
            ws = [(-b, a, 0), (c, 0, a)]
        elif b != 0:
            ws = [(1, 0, 0), (0, c, b)]
        else:
            ws = [(1, 0, 0), (0, 1, 0)]
        return AnticommutantDescription(
            "scalar-free", tuple(Quadruple2x2(0, *w) for w in ws))
    if g_form(M.v, M.v) == g * g:
        return AnticommutantDescription("conjugate", (M.conjugate(),))
    return AnticommutantDescription("zero", ())


def anticommutant_nullspace(M: Quadruple2x2, tol: float = 1e-9) -> int:
    """Dimension of {N : MN + NM = 0} by numerical rank; an independent check."""
    A = np.array(M.standard(), dtype=float)
    # vec(MN + NM) = (I kron M + M^T kron I) vec(N)
    L = np.kron(np.eye(2), A) + np.kron(A.T, np.eye(2))
    return 4 - int(np.linalg.matrix_rank(L, tol=tol))


def signature_check(e: GroupElement) -> bool:
    """represent(e)^2 == signature(e) * I."""
    D = represent_dense(e)
    return bool(np.array_equal(D @ D, signature(e) * np.eye(D.shape[0], dtype=np.int64)))
