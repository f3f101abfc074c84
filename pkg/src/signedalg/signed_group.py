"""Signed groups in the double-logic encoding.

An element is ``sign * R^s S^p`` where ``s`` and ``p`` are 0-1 exponent
vectors over a common ambient length L.  Per coordinate R and S are the
2x2 reflections [[0,1],[1,0]] and [[1,0],[0,-1]], so R_j S_j = -S_j R_j
and everything at different coordinates commutes.  The multiplication rule

    (R^s S^p)(R^t S^q) = (-1)^<p t> R^(s+t) S^(p+q)

is all that is needed; squares are central with value (-1)^<s p>.

Indices are 0-based throughout.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from itertools import product as _iproduct
from typing import Iterable, Sequence

import numpy as np

from . import _bounds
from .dyadic_core import BitMatrix, BitVec, strict_upper
from .errors import LengthMismatch, NotBasic, SignedAlgebraError


@dataclass(frozen=True, slots=True)
class GroupElement:
    sign: int
    s: BitVec
    p: BitVec

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {self.sign!r}")
        if self.s.len != self.p.len:
            raise LengthMismatch(f"s has length {self.s.len}, p has length {self.p.len}")

    @classmethod
    def identity(cls, n: int) -> GroupElement:
        return cls(1, BitVec.zeros(n), BitVec.zeros(n))

    @classmethod
    def from_ints(cls, n: int, s: int, p: int, sign: int = 1) -> GroupElement:
        return cls(sign, BitVec(n, s), BitVec(n, p))

    @classmethod
    def R(cls, n: int, j: int) -> GroupElement:
        return cls(1, BitVec.unit(n, j), BitVec.zeros(n))

    @classmethod
    def S(cls, n: int, j: int) -> GroupElement:
        return cls(1, BitVec.zeros(n), BitVec.unit(n, j))

    @classmethod
    def A(cls, n: int, j: int) -> GroupElement:
        """R_j S_j, the negative element at coordinate j."""
        return cls(1, BitVec.unit(n, j), BitVec.unit(n, j))

    @classmethod
    def from_code(cls, top: str, bottom: str) -> GroupElement:
        """Element S^top R^bottom from a two-row double-logic code.

        Both rows are written with the highest coordinate first, so the
        code ("10", "00") is S at coordinate 1 (0-based).
        """
        if len(top) != len(bottom):
            raise LengthMismatch("code rows differ in length")
        p = BitVec.parse(top[::-1])
        s = BitVec.parse(bottom[::-1])
        # S^p R^s = (-1)^<p s> R^s S^p
        sign = -1 if (p.bits & s.bits).bit_count() & 1 else 1
        return cls(sign, s, p)

    @property
    def n(self) -> int:
        return self.s.len

    @property
    def is_central_unit(self) -> bool:
        """True for +1 and -1."""
        return not self.s.bits and not self.p.bits

    def __neg__(self) -> GroupElement:
        return GroupElement(-self.sign, self.s, self.p)

    def __mul__(self, other: GroupElement) -> GroupElement:
        return mul(self, other)

    def key(self) -> tuple[int, int, int]:
        """Canonical order: sign, then s and p read as little-endian integers."""
        return (self.sign, self.s.bits, self.p.bits)

    def __lt__(self, other: GroupElement) -> bool:
        return self.key() < other.key()

    def padded(self, n: int) -> GroupElement:
        return GroupElement(self.sign, self.s.padded(n), self.p.padded(n))

    def to_text(self) -> str:
        return f"s={self.s} p={self.p} sign={'+' if self.sign > 0 else '-'}"

    @classmethod
    def parse(cls, line: str) -> GroupElement:
        fields = dict(tok.split("=", 1) for tok in line.split())
        try:
            sign = {"+": 1, "-": -1}[fields.get("sign", "+")]
            return cls(sign, BitVec.parse(fields["s"]), BitVec.parse(fields["p"]))
        except KeyError as exc:
            raise ValueError(f"malformed element line {line!r}") from exc

    def __repr__(self) -> str:
        return f"GroupElement({self.to_text()})"


def _check_len(e: GroupElement, f: GroupElement) -> None:
    if e.s.len != f.s.len:
        raise LengthMismatch(f"ambient lengths {e.s.len} and {f.s.len}")


def mul(e: GroupElement, f: GroupElement) -> GroupElement:
    _check_len(e, f)
    swaps = (e.p.bits & f.s.bits).bit_count()
    sign = e.sign * f.sign * (-1 if swaps & 1 else 1)
    return GroupElement(sign, BitVec(e.n, e.s.bits ^ f.s.bits), BitVec(e.n, e.p.bits ^ f.p.bits))


def signature(e: GroupElement) -> int:
    """e^2 as +1 or -1."""
    return -1 if (e.s.bits & e.p.bits).bit_count() & 1 else 1


def commutator_sign(e: GroupElement, f: GroupElement) -> int:
    """+1 if e and f commute, -1 if they anticommute."""
    _check_len(e, f)
    k = (e.p.bits & f.s.bits).bit_count() + (f.p.bits & e.s.bits).bit_count()
    return -1 if k & 1 else 1


def product(elements: Iterable[GroupElement], n: int) -> GroupElement:
    out = GroupElement.identity(n)
    for e in elements:
        out = mul(out, e)
    return out


# -- generators -----------------------------------------------------------


@dataclass(frozen=True)
class Generator:
    """An ordered signed sequence; ``basic`` certifies that no nontrivial power is +-1."""

    elements: tuple[GroupElement, ...]
    ambient: int

    def __post_init__(self):
        for e in self.elements:
            if e.n != self.ambient:
                raise LengthMismatch(f"element of length {e.n} in a length-{self.ambient} generator")

    @classmethod
    def of(cls, elements: Sequence[GroupElement], ambient: int | None = None) -> Generator:
        elements = tuple(elements)
        if ambient is None:
            if not elements:
                raise ValueError("ambient length needed for an empty generator")
            ambient = elements[0].n
        return cls(elements, ambient)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __getitem__(self, i):
        return self.elements[i]

    @property
    def size(self) -> int:
        return len(self.elements)

    @cached_property
    def basic(self) -> bool:
        return is_basic(self)

    def signatures(self) -> list[int]:
        return [signature(e) for e in self.elements]

    def n_plus(self) -> int:
        return sum(1 for e in self.elements if signature(e) > 0)

    def to_text(self) -> str:
        return "".join(e.to_text() + "\n" for e in self.elements)

    @classmethod
    def parse(cls, text: str) -> Generator:
        lines = [ln.strip() for ln in text.splitlines()]
        lines = [ln for ln in lines if ln and not ln.startswith("#")]
        if not lines:
            raise ValueError("empty generator file")
        return cls.of([GroupElement.parse(ln) for ln in lines])

    def padded(self, n: int) -> Generator:
        return Generator(tuple(e.padded(n) for e in self.elements), n)

    def __add__(self, other: Generator) -> Generator:
        if self.ambient != other.ambient:
            raise LengthMismatch("generators live in different ambient lengths")
        return Generator(self.elements + other.elements, self.ambient)


def pad(gen: Generator, n: int) -> Generator:
    """Extend every element to ambient length ``n`` with zero exponents."""
    if n < gen.ambient:
        raise LengthMismatch(f"cannot pad length {gen.ambient} down to {n}")
    return gen.padded(n)


def _packed(e: GroupElement) -> int:
    return e.s.bits | (e.p.bits << e.n)


def is_basic(gen: Generator) -> bool:
    """No product of a nonempty subset of the generator equals +1 or -1.

    Up to size 20 every nonzero exponent is visited in Gray-code order;
    beyond that the equivalent rank test on the packed (s | p) vectors is used.
    """
    n = gen.size
    vecs = [_packed(e) for e in gen.elements]
    if n > _bounds.ENUMERATION_MAX:
        return _packed_rank(vecs) == n
    acc = 0
    for k in range(1, 1 << n):
        acc ^= vecs[(k & -k).bit_length() - 1]
        if acc == 0:
            return False
    return True


def _packed_rank(vecs: list[int]) -> int:
    basis: dict[int, int] = {}
    for v in vecs:
        while v:
            top = v.bit_length() - 1
            if top not in basis:
                basis[top] = v
                break
            v ^= basis[top]
    return len(basis)


def power(gen: Generator, p: BitVec) -> GroupElement:
    """Ordered product e_0^{p_0} e_1^{p_1} ... ."""
    if p.len != gen.size:
        raise LengthMismatch(f"exponent of length {p.len} for a generator of size {gen.size}")
    out = GroupElement.identity(gen.ambient)
    for i in p.support():
        out = mul(out, gen.elements[i])
    return out


@dataclass(frozen=True)
class AcMatrix:
    """Pairwise commutation signs of a generator (c) and their 0-1 form d = (1 - c) / 2."""

    n: int
    c: np.ndarray
    d: BitMatrix


def ac_matrix(gen: Generator) -> AcMatrix:
    n = gen.size
    c = np.ones((n, n), dtype=np.int8)
    for i in range(n):
        for j in range(i + 1, n):
            c[i, j] = c[j, i] = commutator_sign(gen.elements[i], gen.elements[j])
    d = BitMatrix.from_array((1 - c) // 2)
    return AcMatrix(n=n, c=c, d=d)


def is_anticommutative(gen: Generator) -> bool:
    els = gen.elements
    return all(commutator_sign(els[i], els[j]) < 0
               for i in range(len(els)) for j in range(i + 1, len(els)))


def is_commutative(gen: Generator) -> bool:
    els = gen.elements
    return all(commutator_sign(els[i], els[j]) > 0
               for i in range(len(els)) for j in range(i + 1, len(els)))


def is_pure(gen: Generator) -> bool:
    return len(set(gen.signatures())) <= 1


def product_sign(gen: Generator, p: BitVec, q: BitVec) -> int:
    """Sign relating power(p) * power(q) to power(p xor q).

    The swap part is (-1)^<D_up p, q> with D_up the strict upper triangle of
    the 0-1 commutation matrix; coordinates used by both p and q contribute
    the signature e_j^2 of the element squared there.
    """
    if p.len != gen.size or q.len != gen.size:
        raise LengthMismatch("exponent length differs from generator size")
    d_up = strict_upper(ac_matrix(gen).d)
    swaps = d_up.apply(p).dot(q)
    sign = -1 if swaps else 1
    for j in (p & q).support():
        sign *= signature(gen.elements[j])
    return sign


def signature_of_power(gen: Generator, p: BitVec) -> int:
    if p.len != gen.size:
        raise LengthMismatch("exponent length differs from generator size")
    if gen.size >= 2 and is_anticommutative(gen):
        m = p.mass()
        sign = -1 if (m * (m - 1) // 2) % 2 else 1
        for j in p.support():
            sign *= signature(gen.elements[j])
        return sign
    return signature(power(gen, p))


def _exponents(n: int) -> Iterable[BitVec]:
    return (BitVec(n, k) for k in range(1 << n))


def enumerate_group(gen: Generator) -> frozenset[GroupElement]:
    """All elements +-e^p; for basic generators the result has 2^(n+1) members."""
    _bounds.check(gen.size, _bounds.ENUMERATION_MAX, "group enumeration")
    out = set()
    for p in _exponents(gen.size):
        e = power(gen, p)
        out.add(e)
        out.add(-e)
    if gen.basic and len(out) != 2 ** (gen.size + 1):  # pragma: no cover - sanity
        raise AssertionError("basic generator produced the wrong group order")
    return frozenset(out)


def same_group(a: Generator, b: Generator) -> bool:
    return enumerate_group(a) == enumerate_group(b)


def _power_table(gen: Generator) -> tuple[np.ndarray, np.ndarray]:
    """s and p bit arrays (2^n x L) of all powers, built by Gray-code xors."""
    n, L = gen.size, gen.ambient
    svals = np.zeros(1 << n, dtype=object)
    pvals = np.zeros(1 << n, dtype=object)
    s_gen = [e.s.bits for e in gen.elements]
    p_gen = [e.p.bits for e in gen.elements]
    for k in range(1, 1 << n):
        low = (k & -k).bit_length() - 1
        svals[k] = svals[k ^ (1 << low)] ^ s_gen[low]
        pvals[k] = pvals[k ^ (1 << low)] ^ p_gen[low]
    shifts = np.arange(L, dtype=object)
    S = ((svals[:, None] >> shifts[None, :]) & 1).astype(np.int64)
    P = ((pvals[:, None] >> shifts[None, :]) & 1).astype(np.int64)
    return S, P


def ac_count(gen: Generator) -> int:
    """Number of ordered exponent pairs (p, q) whose powers anticommute.

    The commutation sign of every pair is read off the (s, p) vectors of the
    enumerated powers, not from the generator's commutation matrix.
    """
    _bounds.check(gen.size, _bounds.PAIR_SCAN_MAX, "ordered pair scan")
    S, P = _power_table(gen)
    form = (P @ S.T + S @ P.T) & 1
    return int(form.sum())


# -- counts of negative powers -------------------------------------------


def b_q(n: int, q: int) -> int:
    """sum_j C(n, q + 4j)."""
    return sum(math.comb(n, k) for k in range(q, n + 1, 4))


def _trig_term(n: int, plus: bool) -> float:
    t = math.cos(n * math.pi / 4) + (1 if plus else -1) * math.sin(n * math.pi / 4)
    return 2.0 ** (n / 2 - 1) * t


def s_plus_formula(n: int, leading: int | None = None) -> int:
    """Negative powers of a pure positive anticommutative generator, trigonometric form.

    ``leading`` defaults to 2^(n-1); pass 2^(n-2) for the variant as published.
    """
    lead = 2 ** (n - 1) if leading is None else leading
    return round(lead - _trig_term(n, True))


def s_minus_formula(n: int, leading: int | None = None) -> int:
    lead = 2 ** (n - 1) if leading is None else leading
    return round(lead - _trig_term(n, False))


def count_negative_powers(gen: Generator) -> int:
    return sum(1 for p in _exponents(gen.size) if signature(power(gen, p)) < 0)


@dataclass(frozen=True)
class SignatureCountReport:
    n: int
    purity: str  # '+', '-' or 'mixed'
    anticommutative: bool
    enumerated: int
    b_formula: int | None
    trig_printed: int | None
    trig_corrected: int | None

    @property
    def discrepancies(self) -> list[str]:
        out = []
        if self.b_formula is not None and self.b_formula != self.enumerated:
            out.append(f"b-sum {self.b_formula} != enumerated {self.enumerated}")
        if self.trig_printed is not None and self.trig_printed != self.enumerated:
            out.append(f"trigonometric form with leading 2^(n-2) gives {self.trig_printed}, "
                       f"enumeration gives {self.enumerated}")
        if self.trig_corrected is not None and self.trig_corrected != self.enumerated:
            out.append(f"trigonometric form with leading 2^(n-1) gives {self.trig_corrected}")
        return out

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "purity": self.purity,
            "anticommutative": self.anticommutative,
            "enumerated": self.enumerated,
            "b_formula": self.b_formula,
            "trig_printed": self.trig_printed,
            "trig_corrected": self.trig_corrected,
            "paper_discrepancies": self.discrepancies,
        }


def negative_counts(gen: Generator) -> SignatureCountReport:
    """Count negative powers; attach the closed forms when the generator is pure and anticommutative."""
    _bounds.check(gen.size, _bounds.ENUMERATION_MAX, "power enumeration")
    n = gen.size
    sigs = set(gen.signatures())
    purity = "mixed" if len(sigs) > 1 else ("-" if -1 in sigs else "+")
    ac = n < 2 or is_anticommutative(gen)
    enumerated = count_negative_powers(gen)
    b = printed = corrected = None
    if ac and purity != "mixed" and n >= 1:
        if purity == "+":
            b = b_q(n, 2) + b_q(n, 3)
            printed = s_plus_formula(n, 2 ** (n - 2) if n >= 2 else 0.5)
            corrected = s_plus_formula(n)
        else:
            b = b_q(n, 1) + b_q(n, 2)
            printed = s_minus_formula(n, 2 ** (n - 2) if n >= 2 else 0.5)
            corrected = s_minus_formula(n)
    return SignatureCountReport(n, purity, ac, enumerated, b, printed, corrected)


# -- standard constructions ---------------------------------------------


def ac_element(n: int, k: int, negative: bool) -> GroupElement:
    """S_0 ... S_{k-1} X_k with X_k = R_k (positive) or R_k S_k (negative)."""
    below = (1 << k) - 1
    p = below | (1 << k) if negative else below
    return GroupElement(1, BitVec(n, 1 << k), BitVec(n, p))


def standard_ac_generator(signatures: Sequence[int], ambient: int | None = None,
                          offset: int = 0) -> Generator:
    """Pairwise anticommuting basic generator with the prescribed signatures.

    Element k lives on coordinates ``offset .. offset + k``.
    """
    n = len(signatures)
    L = offset + n if ambient is None else ambient
    els = []
    for k, sig in enumerate(signatures):
        e = ac_element(n, k, sig < 0)
        els.append(GroupElement(1, BitVec(L, e.s.bits << offset), BitVec(L, e.p.bits << offset)))
    return Generator(tuple(els), L)


def pure_ac_generator(n: int, sign: int = 1) -> Generator:
    return standard_ac_generator([sign] * n)


def central_element(L: int, j: int, negative: bool = False) -> GroupElement:
    """R_j (positive) or R_j S_j (negative): commutes with anything not touching coordinate j."""
    return GroupElement.A(L, j) if negative else GroupElement.R(L, j)


def doubleton_chain(kinds: Sequence[str], ambient: int | None = None) -> Generator:
    """Commuting anticommutative doubletons; '+' is Pauli-like, '-' quaternion-like."""
    L = 2 * len(kinds) if ambient is None else ambient
    els: list[GroupElement] = []
    for i, kind in enumerate(kinds):
        if kind not in "+-":
            raise ValueError(f"doubleton kind must be '+' or '-', got {kind!r}")
        sig = 1 if kind == "+" else -1
        els.extend(standard_ac_generator([sig, sig], ambient=L, offset=2 * i).elements)
    return Generator(tuple(els), L)


def random_element(L: int, rng: np.random.Generator) -> GroupElement:
    s = int(rng.integers(0, 1 << L)) if L else 0
    p = int(rng.integers(0, 1 << L)) if L else 0
    sign = 1 if rng.integers(2) else -1
    return GroupElement.from_ints(L, s, p, sign)


def random_basic_generator(n: int, rng: np.random.Generator, ambient: int | None = None) -> Generator:
    """Rejection-sample n random elements of length ``ambient`` until they are independent."""
    L = max(1, -(-n // 2)) if ambient is None else ambient
    if 2 * L < n:
        raise NotBasic(f"{n} independent elements need ambient length >= {-(-n // 2)}")
    while True:
        gen = Generator(tuple(random_element(L, rng) for _ in range(n)), L)
        if is_basic(gen):
            return gen


def oracle_report(gen: Generator) -> dict:
    """Group order, AC-count and negative-power counts by brute force."""
    if not gen.basic:
        raise NotBasic("generator is not basic")
    order = len(enumerate_group(gen))
    neg = negative_counts(gen)
    return {
        "order": order,
        "ac_count": ac_count(gen),
        "negatives": neg.enumerated,
        "s_plus": neg.enumerated if neg.anticommutative and neg.purity == "+" else None,
        "s_minus": neg.enumerated if neg.anticommutative and neg.purity == "-" else None,
        "paper_discrepancies": neg.discrepancies,
    }


def all_exponent_pairs(n: int) -> Iterable[tuple[BitVec, BitVec]]:
    exps = list(_exponents(n))
    return _iproduct(exps, exps)


__all__ = [
    "AcMatrix", "Generator", "GroupElement", "SignatureCountReport", "SignedAlgebraError",
    "ac_count", "ac_matrix", "b_q", "commutator_sign", "enumerate_group", "is_anticommutative",
    "is_basic", "is_commutative", "mul", "negative_counts", "pad", "power", "product_sign",
    "signature", "signature_of_power",
]
