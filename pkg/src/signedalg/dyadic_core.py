"""Bit-packed vectors and matrices over {0, 1} with mod-2 arithmetic.

Vectors pack their bits into one Python integer (bit ``i`` holds entry
``i``), matrices hold one such integer per row.  Padding bits above the
logical length are always zero.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import DimensionMismatch, LengthMismatch, NotSquare


def _mask(n: int) -> int:
    return (1 << n) - 1


@dataclass(frozen=True, slots=True)
class BitVec:
    """A finitary 0-1 sequence of fixed length.

    Entry ``i`` is bit ``i`` of ``bits``, so the integer value coincides with
    the binary reading ``sum p_i 2^i`` and integer order is the lexicographic
    order on exponent vectors.
    """

    len: int
    bits: int = 0

    def __post_init__(self):
        if self.len < 0:
            raise ValueError("negative length")
        if self.bits < 0 or self.bits >> self.len:
            raise ValueError(f"bits {self.bits:#x} do not fit length {self.len}")

    @classmethod
    def zeros(cls, n: int) -> BitVec:
        return cls(n, 0)

    @classmethod
    def ones(cls, n: int) -> BitVec:
        return cls(n, _mask(n))

    @classmethod
    def unit(cls, n: int, i: int) -> BitVec:
        if not 0 <= i < n:
            raise IndexError(i)
        return cls(n, 1 << i)

    @classmethod
    def from_bits(cls, entries: Iterable[int]) -> BitVec:
        entries = list(entries)
        value = 0
        for i, b in enumerate(entries):
            if b not in (0, 1, True, False):
                raise ValueError(f"entry {b!r} is not a bit")
            if b:
                value |= 1 << i
        return cls(len(entries), value)

    @classmethod
    def parse(cls, text: str) -> BitVec:
        """Read the single-line format: characters '0'/'1', entry 0 first."""
        text = text.strip()
        if any(ch not in "01" for ch in text):
            raise ValueError(f"not a bit string: {text!r}")
        return cls.from_bits(int(ch) for ch in text)

    def __str__(self) -> str:
        return "".join("1" if self.bits >> i & 1 else "0" for i in range(self.len))

    def __len__(self) -> int:
        return self.len

    def __getitem__(self, i: int) -> int:
        if i < 0:
            i += self.len
        if not 0 <= i < self.len:
            raise IndexError(i)
        return self.bits >> i & 1

    def __iter__(self):
        return (self.bits >> i & 1 for i in range(self.len))

    def _check(self, other: BitVec) -> None:
        if self.len != other.len:
            raise LengthMismatch(f"lengths {self.len} and {other.len}")

    def __xor__(self, other: BitVec) -> BitVec:
        self._check(other)
        return BitVec(self.len, self.bits ^ other.bits)

    __add__ = __xor__

    def __and__(self, other: BitVec) -> BitVec:
        self._check(other)
        return BitVec(self.len, self.bits & other.bits)

    def __or__(self, other: BitVec) -> BitVec:
        self._check(other)
        return BitVec(self.len, self.bits | other.bits)

    def complement(self) -> BitVec:
        return BitVec(self.len, self.bits ^ _mask(self.len))

    def mass(self) -> int:
        return self.bits.bit_count()

    def dot(self, other: BitVec) -> int:
        """Mass of the entrywise product, reduced mod 2."""
        self._check(other)
        return (self.bits & other.bits).bit_count() & 1

    def support(self) -> list[int]:
        return [i for i in range(self.len) if self.bits >> i & 1]

    def padded(self, n: int) -> BitVec:
        if n < self.len:
            raise LengthMismatch(f"cannot pad length {self.len} down to {n}")
        return BitVec(n, self.bits)

    def to_array(self) -> np.ndarray:
        return np.fromiter(iter(self), dtype=np.uint8, count=self.len)


def mass(v: BitVec) -> int:
    return v.mass()


@dataclass(frozen=True, slots=True)
class BitMatrix:
    """A dyadic matrix stored row-major, one packed integer per row."""

    rows: int
    cols: int
    data: tuple[int, ...]

    def __post_init__(self):
        if len(self.data) != self.rows:
            raise DimensionMismatch(f"{len(self.data)} rows given, expected {self.rows}")
        limit = 1 << self.cols
        for r in self.data:
            if r < 0 or r >= limit:
                raise ValueError(f"row {r:#x} does not fit {self.cols} columns")

    # -- constructors ----------------------------------------------------

    @classmethod
    def zeros(cls, rows: int, cols: int | None = None) -> BitMatrix:
        cols = rows if cols is None else cols
        return cls(rows, cols, (0,) * rows)

    @classmethod
    def identity(cls, n: int) -> BitMatrix:
        return cls(n, n, tuple(1 << i for i in range(n)))

    @classmethod
    def ones(cls, rows: int, cols: int | None = None) -> BitMatrix:
        """The block of ones, II."""
        cols = rows if cols is None else cols
        return cls(rows, cols, (_mask(cols),) * rows)

    @classmethod
    def complement_identity(cls, n: int) -> BitMatrix:
        """Ī: ones everywhere except the diagonal."""
        return cls(n, n, tuple(_mask(n) ^ (1 << i) for i in range(n)))

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> BitMatrix:
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        data = []
        for r in rows:
            if len(r) != ncols:
                raise DimensionMismatch("ragged rows")
            data.append(BitVec.from_bits(r).bits)
        return cls(len(rows), ncols, tuple(data))

    @classmethod
    def from_columns(cls, columns: Sequence[BitVec], n: int | None = None) -> BitMatrix:
        if n is None:
            if not columns:
                raise ValueError("row count needed for an empty column list")
            n = columns[0].len
        data = [0] * n
        for j, c in enumerate(columns):
            if c.len != n:
                raise LengthMismatch(f"column {j} has length {c.len}, expected {n}")
            for i in c.support():
                data[i] |= 1 << j
        return cls(n, len(columns), tuple(data))

    @classmethod
    def from_array(cls, a) -> BitMatrix:
        a = np.asarray(a)
        if a.ndim != 2:
            raise DimensionMismatch("expected a 2-d array")
        return cls.from_rows((a.astype(np.int64) & 1).tolist())

    @classmethod
    def permutation(cls, images: Sequence[int]) -> BitMatrix:
        """Column j carries its single 1 in row images[j]."""
        n = len(images)
        if sorted(images) != list(range(n)):
            raise ValueError(f"not a permutation: {images}")
        return cls.from_columns([BitVec.unit(n, i) for i in images], n)

    @classmethod
    def parse(cls, text: str) -> BitMatrix:
        """Read the text format: a "rows cols" header, then one '0'/'1' line per row."""
        lines = [ln.strip() for ln in text.strip().splitlines() if ln.strip()]
        if not lines:
            raise ValueError("empty matrix text")
        try:
            rows, cols = (int(t) for t in lines[0].split())
        except ValueError as exc:
            raise ValueError(f"bad header {lines[0]!r}") from exc
        body = lines[1:]
        if len(body) != rows:
            raise DimensionMismatch(f"header says {rows} rows, found {len(body)}")
        data = []
        for ln in body:
            v = BitVec.parse(ln)
            if v.len != cols:
                raise DimensionMismatch(f"row {ln!r} has {v.len} entries, expected {cols}")
            data.append(v.bits)
        return cls(rows, cols, tuple(data))

    def to_text(self) -> str:
        lines = [f"{self.rows} {self.cols}"]
        lines += [str(BitVec(self.cols, r)) for r in self.data]
        return "\n".join(lines) + "\n"

    # -- access ----------------------------------------------------------

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def require_square(self) -> int:
        if not self.is_square:
            raise NotSquare(f"expected a square matrix, got {self.rows}x{self.cols}")
        return self.rows

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(ij)
        return self.data[i] >> j & 1

    def row(self, i: int) -> BitVec:
        return BitVec(self.cols, self.data[i])

    def column(self, j: int) -> BitVec:
        bits = 0
        for i, r in enumerate(self.data):
            if r >> j & 1:
                bits |= 1 << i
        return BitVec(self.rows, bits)

    def columns(self) -> list[BitVec]:
        return [self.column(j) for j in range(self.cols)]

    def diagonal(self) -> BitVec:
        n = min(self.rows, self.cols)
        return BitVec.from_bits(self.data[i] >> i & 1 for i in range(n))

    def to_array(self) -> np.ndarray:
        out = np.zeros((self.rows, self.cols), dtype=np.uint8)
        for i, r in enumerate(self.data):
            for j in range(self.cols):
                out[i, j] = r >> j & 1
        return out

    def mass(self) -> int:
        return sum(r.bit_count() for r in self.data)

    def __str__(self) -> str:
        return "\n".join(str(BitVec(self.cols, r)) for r in self.data)

    # -- arithmetic ------------------------------------------------------

    def _same_shape(self, other: BitMatrix) -> None:
        if self.shape != other.shape:
            raise DimensionMismatch(f"shapes {self.shape} and {other.shape}")

    def __xor__(self, other: BitMatrix) -> BitMatrix:
        self._same_shape(other)
        return BitMatrix(self.rows, self.cols, tuple(a ^ b for a, b in zip(self.data, other.data)))

    __add__ = __xor__

    def __and__(self, other: BitMatrix) -> BitMatrix:
        self._same_shape(other)
        return BitMatrix(self.rows, self.cols, tuple(a & b for a, b in zip(self.data, other.data)))

    def __matmul__(self, other: BitMatrix) -> BitMatrix:
        return gf2_matmul(self, other)

    def apply(self, v: BitVec) -> BitVec:
        """Matrix-vector product mod 2."""
        if v.len != self.cols:
            raise DimensionMismatch(f"{self.rows}x{self.cols} matrix times length-{v.len} vector")
        return BitVec.from_bits((r & v.bits).bit_count() & 1 for r in self.data)

    def transpose(self) -> BitMatrix:
        data = [0] * self.cols
        for i, r in enumerate(self.data):
            while r:
                low = r & -r
                data[low.bit_length() - 1] |= 1 << i
                r ^= low
        return BitMatrix(self.cols, self.rows, tuple(data))

    @property
    def T(self) -> BitMatrix:
        return self.transpose()

    def complement(self) -> BitMatrix:
        """Entrywise 1 - P; the bar operation."""
        m = _mask(self.cols)
        return BitMatrix(self.rows, self.cols, tuple(r ^ m for r in self.data))

    def permute(self, perm: Sequence[int]) -> BitMatrix:
        """Return Q with Q[a, b] = self[perm[a], perm[b]] (symmetric relabelling)."""
        n = self.require_square()
        if sorted(perm) != list(range(n)):
            raise ValueError(f"not a permutation: {perm}")
        return BitMatrix.from_rows([[self[perm[a], perm[b]] for b in range(n)] for a in range(n)])

    def is_symmetric(self) -> bool:
        return self.is_square and self == self.transpose()

    def is_permutation(self) -> bool:
        if not self.is_square:
            return False
        seen = 0
        for r in self.data:
            if r.bit_count() != 1 or seen & r:
                return False
            seen |= r
        return True

    def rank(self) -> int:
        return gf2_rank(self)


def gf2_matmul(A: BitMatrix, B: BitMatrix) -> BitMatrix:
    """Product of two dyadic matrices with entries reduced mod 2."""
    if A.cols != B.rows:
        raise DimensionMismatch(f"cannot multiply {A.rows}x{A.cols} by {B.rows}x{B.cols}")
    brows = B.data
    out = []
    for r in A.data:
        acc = 0
        while r:
            low = r & -r
            acc ^= brows[low.bit_length() - 1]
            r ^= low
        out.append(acc)
    return BitMatrix(A.rows, B.cols, tuple(out))


def gf2_rank(A: BitMatrix) -> int:
    rows = list(A.data)
    rank = 0
    for j in range(A.cols):
        bit = 1 << j
        pivot = next((i for i in range(rank, len(rows)) if rows[i] & bit), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        for i in range(len(rows)):
            if i != rank and rows[i] & bit:
                rows[i] ^= rows[rank]
        rank += 1
    return rank


def strict_upper(C: BitMatrix) -> BitMatrix:
    """Zero the diagonal and everything below it."""
    n = C.require_square()
    return BitMatrix(n, n, tuple(r & ~_mask(i + 1) for i, r in enumerate(C.data)))


def tensor(u: BitVec, v: BitVec) -> BitMatrix:
    """The scattered block of ones u v^T."""
    return BitMatrix(u.len, v.len, tuple(v.bits if b else 0 for b in u))


def complement(P: BitMatrix) -> BitMatrix:
    return P.complement()


def identity(n: int) -> BitMatrix:
    return BitMatrix.identity(n)


def ones(n: int, cols: int | None = None) -> BitMatrix:
    return BitMatrix.ones(n, cols)


def complement_identity(n: int) -> BitMatrix:
    return BitMatrix.complement_identity(n)
