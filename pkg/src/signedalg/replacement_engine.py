"""Replacements of signed generators and the canonical forms they lead to.

A replacement is another basic generator of the same group.  The ones
used here are all built from products of the current elements, so group
equality can be checked by enumeration in tests.  Every element keeps the
sign its product produces.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import NamedTuple, Sequence

import numpy as np

from .dyadic_core import BitMatrix
from .dyadic_invert import add_column_matrix, is_dyadically_invertible
from .errors import (DimensionMismatch, ImpureDoubleton, LengthMismatch, NotAChain,
                     NotAnticommutative, NotIndependent, NotInvertible, OddSize,
                     SignedAlgebraError)
from .signed_group import (Generator, GroupElement, central_element, commutator_sign,
                           is_anticommutative, is_basic, is_commutative, mul, power,
                           signature, standard_ac_generator)


def inverse(e: GroupElement) -> GroupElement:
    """e^-1 = signature(e) * e."""
    return e if signature(e) > 0 else -e


def _prod(elements: Sequence[GroupElement], n: int) -> GroupElement:
    out = GroupElement.identity(n)
    for e in elements:
        out = mul(out, e)
    return out


def _gen(elements, ambient: int) -> Generator:
    return Generator(tuple(elements), ambient)


# -- basic replacements ---------------------------------------------------


def transform(gen: Generator, P: BitMatrix) -> Generator:
    """New element j is the power of ``gen`` given by column j of P."""
    n = P.require_square()
    if n != gen.size:
        raise DimensionMismatch(f"{n}x{n} matrix for a generator of size {gen.size}")
    if not is_dyadically_invertible(P):
        raise NotInvertible("P is not dyadically invertible, so the result is not a replacement")
    return _gen((power(gen, P.column(j)) for j in range(n)), gen.ambient)


def multiply_replacement(gen: Generator, i: int) -> Generator:
    """Keep element i and multiply every other element by it from the left."""
    if not 0 <= i < gen.size:
        raise IndexError(f"index {i} out of range for a generator of size {gen.size}")
    f = gen.elements[i]
    return _gen((e if k == i else mul(f, e) for k, e in enumerate(gen.elements)), gen.ambient)


def multiply_matrix(n: int, i: int) -> BitMatrix:
    """The matrix whose transform agrees with multiply_replacement up to signs."""
    return add_column_matrix(n, i)


def quadruple_flip_matrix(n: int, idx: Sequence[int]) -> BitMatrix:
    """Replace four chosen elements each by the product of the other three.

    On four anticommuting elements of equal signature this flips all four
    signatures; the rest of the generator is untouched.
    """
    idx = list(idx)
    if len(idx) != 4 or len(set(idx)) != 4:
        raise ValueError("need four distinct indices")
    rows = [[int(a == b) for b in range(n)] for a in range(n)]
    for a in idx:
        for b in idx:
            rows[a][b] = int(a != b)
    return BitMatrix.from_rows(rows)


def is_chain(u: Generator) -> bool:
    els = u.elements
    for i in range(len(els)):
        for j in range(i + 1, len(els)):
            want = -1 if j == i + 1 else 1
            if commutator_sign(els[i], els[j]) != want:
                return False
    return True


def chain_to_ac(u: Generator) -> Generator:
    """e_k = u_1 ... u_k turns a chain of neighbour-anticommuting elements into an AC sequence."""
    if not is_chain(u):
        raise NotAChain("neighbours must anticommute and all other pairs commute")
    out, acc = [], GroupElement.identity(u.ambient)
    for x in u.elements:
        acc = mul(acc, x)
        out.append(acc)
    return _gen(out, u.ambient)


def ac_to_chain(e: Generator) -> Generator:
    """u_1 = e_1, u_k = e_{k-1}^-1 e_k; exact inverse of chain_to_ac."""
    if not is_anticommutative(e):
        raise NotAnticommutative("input is not anticommutative")
    els = e.elements
    out = [els[0]] if els else []
    for k in range(1, len(els)):
        out.append(mul(inverse(els[k - 1]), els[k]))
    return _gen(out, e.ambient)


def ac_to_doubletons(e: Generator) -> Generator:
    """Split an even AC sequence into commuting anticommuting pairs.

    d_1 = e_1, d_2 = e_2 and later pairs are f e_{2m-1}, f e_{2m} with f the
    product of all earlier elements.
    """
    if e.size % 2:
        raise OddSize(f"size {e.size} is odd")
    if not is_anticommutative(e):
        raise NotAnticommutative("input is not anticommutative")
    out, f = [], GroupElement.identity(e.ambient)
    els = e.elements
    for m in range(0, e.size, 2):
        out.append(mul(f, els[m]))
        out.append(mul(f, els[m + 1]))
        f = mul(mul(f, els[m]), els[m + 1])
    return _gen(out, e.ambient)


def is_doubleton_chain(d: Generator) -> bool:
    if d.size % 2:
        return False
    els = d.elements
    for i in range(len(els)):
        for j in range(i + 1, len(els)):
            same_pair = i // 2 == j // 2
            if commutator_sign(els[i], els[j]) != (-1 if same_pair else 1):
                return False
    return True


def doubletons_to_ac(d: Generator) -> Generator:
    """Inverse of ac_to_doubletons: merge commuting doubletons into one AC sequence."""
    if d.size % 2:
        raise OddSize(f"size {d.size} is odd")
    if not is_doubleton_chain(d):
        raise NotAChain("input is not a chain of commuting anticommuting pairs")
    out: list[GroupElement] = []
    f_inv = GroupElement.identity(d.ambient)
    els = d.elements
    for m in range(0, d.size, 2):
        a = mul(f_inv, els[m])
        b = mul(f_inv, els[m + 1])
        out += [a, b]
        # f_new = f a b, so f_new^-1 = b^-1 a^-1 f^-1
        f_inv = mul(mul(inverse(b), inverse(a)), f_inv)
    return _gen(out, d.ambient)


# -- anticommutant reduction ---------------------------------------------


class Reduction(NamedTuple):
    F: Generator
    g: GroupElement
    case: str  # 'a': F + [g] is anticommutative; 'b': g commutes with all of F


def reduce_anticommutants(F: Generator, g: GroupElement) -> Reduction:
    """Bring g into a normal position relative to the AC sequence F.

    While g anticommutes with two elements f0, f1 of F, F is replaced by
    F(f0) and g by f0 f1 g; this removes exactly f0 and f1 from the
    anticommutant set.  An odd count ends with g anticommuting with all of
    F(f0) (case 'a'), an even count with g commuting with everything (case 'b').
    """
    if F.size >= 2 and not is_anticommutative(F):
        raise NotAnticommutative("F must be anticommutative")
    if g.n != F.ambient:
        raise LengthMismatch("g and F have different ambient lengths")
    if not is_basic(_gen(F.elements + (g,), F.ambient)):
        raise NotIndependent("g is a product of elements of F (up to sign)")
    while True:
        anti = [i for i, f in enumerate(F.elements) if commutator_sign(f, g) < 0]
        if not anti:
            return Reduction(F, g, "b")
        i0 = anti[0]
        if len(anti) == 1:
            return Reduction(multiply_replacement(F, i0), g, "a")
        f0, f1 = F.elements[i0], F.elements[anti[1]]
        g = mul(mul(f0, f1), g)
        F = multiply_replacement(F, i0)


# -- partitions ------------------------------------------------------------


COMMUTATIVE = "commutative"
ANTICOMMUTATIVE = "anticommutative"


@dataclass(frozen=True)
class PartitionReport:
    """Blocks of indices into ``replaced``; block 0 is the commutative part."""

    blocks: tuple[tuple[int, ...], ...]
    kinds: tuple[str, ...]
    replaced: Generator
    form: str = "deco"  # or 'km' for the K-and-M shape
    original: Generator | None = field(default=None, compare=False)

    def block(self, i: int) -> Generator:
        return _gen((self.replaced.elements[k] for k in self.blocks[i]), self.replaced.ambient)

    @property
    def M(self) -> Generator:
        return self.block(0)

    @property
    def K(self) -> Generator:
        if self.form != "km":
            raise ValueError("K is defined for K-and-M reports only")
        if len(self.blocks) < 2:
            return _gen((), self.replaced.ambient)
        return self.block(1)

    def problems(self) -> list[str]:
        """All violated block invariants; empty when the report is valid."""
        out = []
        els = self.replaced.elements
        seen = sorted(k for b in self.blocks for k in b)
        if seen != list(range(self.replaced.size)):
            out.append("blocks do not partition the generator")
        if not self.kinds or self.kinds[0] != COMMUTATIVE:
            out.append("block 0 must be commutative")
        for b, kind in zip(self.blocks, self.kinds):
            sub = _gen((els[k] for k in b), self.replaced.ambient)
            if kind == COMMUTATIVE and not is_commutative(sub):
                out.append(f"block {b} is not commutative")
            if kind == ANTICOMMUTATIVE:
                if not is_anticommutative(sub):
                    out.append(f"block {b} is not anticommutative")
                if self.form == "deco" and len(b) < 2:
                    out.append(f"block {b} has fewer than two elements")
        for x in range(len(self.blocks)):
            for y in range(x + 1, len(self.blocks)):
                if any(commutator_sign(els[a], els[b]) < 0
                       for a in self.blocks[x] for b in self.blocks[y]):
                    out.append(f"blocks {x} and {y} do not commute")
        if not is_basic(self.replaced):
            out.append("replaced generator is not basic")
        return out

    def to_dict(self) -> dict:
        return {
            "form": self.form,
            "blocks": [list(b) for b in self.blocks],
            "kinds": list(self.kinds),
            "sizes": [len(b) for b in self.blocks],
            "replaced": [e.to_text() for e in self.replaced.elements],
        }


def _first_anticommuting_pair(els: Sequence[GroupElement]) -> tuple[int, int] | None:
    for i in range(len(els)):
        for j in range(i + 1, len(els)):
            if commutator_sign(els[i], els[j]) < 0:
                return i, j
    return None


def _absorb_singles(block: Generator, rest: list[GroupElement]) -> tuple[Generator, list[GroupElement]]:
    """Passes of reduce_anticommutants until one absorbs nothing.

    A newly absorbed element may anticommute with elements neutralized
    earlier, hence the repeated passes.  On return every element of ``rest``
    commutes with the whole block.
    """
    changed = True
    while changed:
        changed = False
        kept = []
        for g in rest:
            F, g2, case = reduce_anticommutants(block, g)
            if case == "a":
                block = _gen(F.elements + (g2,), F.ambient)
                changed = True
            else:
                block = F
                kept.append(g2)
        rest = kept
    return block, rest


def _grow_block(block: Generator, rest: list[GroupElement]) -> tuple[Generator, list[GroupElement]]:
    """Enlarge an AC block to the largest size the group allows.

    Single elements are absorbed by reduce_anticommutants.  Once that stalls,
    an anticommuting pair a, b among the neutralized elements joins an even
    block K as (P a, P b) with P the product of K; an odd block is first made
    even by trading its last element for its total product, which is central.
    Finally an even block absorbs one neutral g as P g.
    """
    L = block.ambient
    while True:
        block, rest = _absorb_singles(block, rest)
        pair = _first_anticommuting_pair(rest)
        if pair is None:
            break
        a, b = rest[pair[0]], rest[pair[1]]
        rest = [g for k, g in enumerate(rest) if k not in pair]
        els = list(block.elements)
        if len(els) % 2:
            rest.append(_prod(els, L))
            els.pop()
        P = _prod(els, L)
        block = _gen(els + [mul(P, a), mul(P, b)], L)
    if block.size % 2 == 0 and rest:
        block = _gen(block.elements + (mul(_prod(block.elements, L), rest[0]),), L)
        rest = rest[1:]
    return block, rest


def partition_generator(E: Generator) -> PartitionReport:
    """Replace E by F0, F1, ..., Fk: F0 commutative, the others anticommutative, all commuting.

    Blocks are seeded by the first anticommuting pair in index order and
    grown to maximal size (see _grow_block); the elements left over are then
    split the same way, so in practice one AC block remains and F0 takes the rest.
    """
    if not is_basic(E):
        raise NotIndependent("E must be basic")
    free = list(E.elements)
    blocks: list[Generator] = []
    while (pair := _first_anticommuting_pair(free)) is not None:
        i, j = pair
        seed = _gen((free[i], free[j]), E.ambient)
        rest = [e for k, e in enumerate(free) if k not in (i, j)]
        block, free = _grow_block(seed, rest)
        blocks.append(block)
    ordered = list(free)
    index_blocks = [tuple(range(len(free)))]
    for b in blocks:
        start = len(ordered)
        ordered.extend(b.elements)
        index_blocks.append(tuple(range(start, len(ordered))))
    kinds = (COMMUTATIVE,) + (ANTICOMMUTATIVE,) * len(blocks)
    return PartitionReport(tuple(index_blocks), kinds, _gen(ordered, E.ambient), "deco", E)


def _km_report(K: Sequence[GroupElement], M: Sequence[GroupElement], ambient: int,
               original: Generator | None) -> PartitionReport:
    ordered = list(M) + list(K)
    blocks = [tuple(range(len(M)))]
    kinds = [COMMUTATIVE]
    if K:
        blocks.append(tuple(range(len(M), len(ordered))))
        kinds.append(ANTICOMMUTATIVE)
    return PartitionReport(tuple(blocks), tuple(kinds), _gen(ordered, ambient), "km", original)


def block_to_doubletons(block: Generator) -> tuple[list[GroupElement], GroupElement | None]:
    """Split an AC block into commuting doubletons, plus one central leftover for odd size."""
    els = list(block.elements)
    left = None
    if len(els) % 2:
        head = els[:-1]
        # the product of an even number of AC elements anticommutes with each of them,
        # so multiplying the last element by it makes the last element commute with all
        left = mul(_prod(head, block.ambient), els[-1])
        els = head
    if not els:
        return [], left
    return list(ac_to_doubletons(_gen(els, block.ambient)).elements), left


def canonical_km(E: Generator) -> PartitionReport:
    """Replace E by an even AC sequence K and a commutative M commuting with K."""
    deco = partition_generator(E)
    M = list(deco.M.elements)
    doubletons: list[GroupElement] = []
    for b in range(1, len(deco.blocks)):
        pairs, left = block_to_doubletons(deco.block(b))
        doubletons.extend(pairs)
        if left is not None:
            M.append(left)
    K = list(doubletons_to_ac(_gen(doubletons, E.ambient)).elements) if doubletons else []
    return _km_report(K, M, E.ambient, E)


def parity_toggle(report: PartitionReport) -> PartitionReport:
    """Move one element between K and M, changing the parity of |K|.

    Even |K| with nonempty M: the product of K times the first element of M
    joins K.  Odd |K|: the last element of K is traded for the product of K,
    which commutes with everything and joins M.  Even |K| with empty M is
    returned unchanged.
    """
    if report.form != "km":
        raise ValueError("parity_toggle expects a K-and-M report")
    L = report.replaced.ambient
    K = list(report.K.elements)
    M = list(report.M.elements)
    if len(K) % 2 == 0:
        if not M:
            return report
        K.append(mul(_prod(K, L), M.pop(0)))
    else:
        total = _prod(K, L)
        K.pop()
        M.append(total)
    return _km_report(K, M, L, report.original)


# -- classification --------------------------------------------------------

# residue of n mod 4 -> classes of N_plus mod 4
_SIGNATURE_TABLE: dict[int, tuple[tuple[int, ...], ...]] = {
    0: ((0, 1), (2, 3)),
    1: ((0, 2), (1,), (3,)),
    2: ((0, 3), (1, 2)),
    3: ((0,), (1, 3), (2,)),
}


@dataclass(frozen=True)
class ClassLabel:
    n: int
    residue: int
    label: str
    taxon: str | None = None
    n_plus: int | None = None

    def to_dict(self) -> dict:
        out = {"n": self.n, "residue": self.residue, "label": self.label}
        if self.taxon is not None:
            out["taxon"] = self.taxon
        if self.n_plus is not None:
            out["n_plus"] = self.n_plus
        return out


def classify_signature_type(n: int, n_plus: int) -> ClassLabel:
    """Isomorphism type of the group of an AC generator with n_plus positive elements."""
    if n < 2:
        raise ValueError("classification needs n >= 2")
    if not 0 <= n_plus <= n:
        raise ValueError(f"N_plus={n_plus} outside 0..{n}")
    r = n % 4
    for cls in _SIGNATURE_TABLE[r]:
        if n_plus % 4 in cls:
            return ClassLabel(n, r, f"R_{{{n}:{r}}}({','.join(map(str, cls))})", n_plus=n_plus)
    raise AssertionError("table does not cover every residue")  # pragma: no cover


def classify_generator(gen: Generator) -> ClassLabel:
    if not is_anticommutative(gen):
        raise NotAnticommutative("signature classification applies to AC generators")
    return classify_signature_type(gen.size, gen.n_plus())


def _orbit_moves(n: int, m: int, k: int):
    if m >= 1:
        yield k + 1, m - 1
    if m >= 4:
        yield m - 4, k + 4
    if k >= 4:
        yield m + 4, k - 4


def signature_orbit(n: int, n_plus: int) -> frozenset[tuple[int, int]]:
    """Signature pairs (N+, N-) reachable by the multiply and quadruple-flip replacements."""
    if not 0 <= n_plus <= n:
        raise ValueError(f"N_plus={n_plus} outside 0..{n}")
    start = (n_plus, n - n_plus)
    seen = {start}
    frontier = [start]
    while frontier:
        m, k = frontier.pop()
        for nxt in _orbit_moves(n, m, k):
            if nxt not in seen:
                seen.add(nxt)
                frontier.append(nxt)
    return frozenset(seen)


def signature_classes(n: int) -> list[frozenset[int]]:
    """Partition of {0..n} (values of N+) into orbits, ordered by smallest member."""
    out: list[frozenset[int]] = []
    done: set[int] = set()
    for m in range(n + 1):
        if m in done:
            continue
        cls = frozenset(a for a, _ in signature_orbit(n, m))
        done |= cls
        out.append(cls)
    return out


def purify_doubleton(a: GroupElement, b: GroupElement) -> tuple[GroupElement, GroupElement]:
    """Turn a mixed anticommuting pair into a positive one: keep the positive element e, replace the other by e times it."""
    if signature(a) == signature(b):
        return a, b
    if signature(a) > 0:
        return a, mul(a, b)
    return mul(b, a), b


def _split_chain(chain: Generator, purify: bool) -> list[tuple[GroupElement, GroupElement]]:
    if not is_doubleton_chain(chain):
        raise NotAChain("input is not a chain of commuting anticommuting pairs")
    pairs = []
    for m in range(0, chain.size, 2):
        a, b = chain.elements[m], chain.elements[m + 1]
        if signature(a) != signature(b):
            if not purify:
                raise ImpureDoubleton(f"doubleton {m // 2} has mixed signatures")
            a, b = purify_doubleton(a, b)
        pairs.append((a, b))
    return pairs


def integrate_doubletons(chain: Generator, leftover_sign: int | None = None,
                         purify: bool = True) -> Generator:
    """One AC generator spanning the same group as the chain (plus a fresh central leftover)."""
    pairs = _split_chain(chain, purify)
    L = chain.ambient + (1 if leftover_sign is not None else 0)
    flat = _gen((x.padded(L) for pr in pairs for x in pr), L)
    ac = list(doubletons_to_ac(flat).elements) if pairs else []
    if leftover_sign is not None:
        c = central_element(L, L - 1, negative=leftover_sign < 0)
        ac.append(mul(_prod(ac, L), c))
    return _gen(ac, L)


def classify_doubleton_taxon(chain: Generator, leftover_sign: int | None = None,
                             purify: bool = True) -> ClassLabel:
    """Taxon <p,q> (or <p,q;s> with a leftover) of a chain of p positive and q negative doubletons.

    The taxon is reduced to its class representative; ``label`` is the
    signature type of the integrated AC generator, which must agree.
    """
    pairs = _split_chain(chain, purify)
    j = len(pairs)
    p = sum(1 for a, _ in pairs if signature(a) > 0)
    n = 2 * j + (1 if leftover_sign is not None else 0)
    if leftover_sign is None:
        taxon = f"<{p % 2},{j - p % 2}>"
    elif leftover_sign < 0:
        taxon = f"<0,{j};->"
    else:
        taxon = f"<{p % 2},{j - p % 2};+>"
    ac = integrate_doubletons(chain, leftover_sign, purify)
    label = classify_generator(ac).label if n >= 2 else "R_trivial"
    return ClassLabel(n, n % 4, label, taxon=taxon, n_plus=ac.n_plus())


# -- counts ------------------------------------------------------------------


def ac_count_formula(block_lengths: Sequence[int], block_counts: Sequence[int],
                     m_commuting: int = 0) -> int:
    """AC-count of commuting blocks from their sizes and individual AC-counts."""
    if len(block_lengths) != len(block_counts):
        raise LengthMismatch("one AC-count per block is needed")
    if m_commuting < 0 or any(x < 0 for x in block_lengths):
        raise ValueError("sizes must be non-negative")
    for ell, c in zip(block_lengths, block_counts):
        if not 0 <= c <= 4 ** ell:
            raise ValueError(f"AC-count {c} impossible for a block of size {ell}")
    n = sum(block_lengths)
    prod = 1
    for ell, c in zip(block_lengths, block_counts):
        prod *= 4 ** ell - 2 * c
    twice = 4 ** n - prod
    if twice % 2:
        raise ValueError("block counts give a non-integer total")
    return twice // 2 * 4 ** m_commuting


def ac_block_count(ell: int) -> int:
    """AC-count of a single anticommutative block of size ell."""
    if ell <= 1:
        return 0
    if ell % 2 == 0:
        return 2 ** (ell - 1) * (2 ** ell - 1)
    return 2 ** ell * (2 ** (ell - 1) - 1)


def ac_block_count_printed(ell: int) -> int:
    """Odd-size variant with leading 2^(n-2); reported for comparison only."""
    if ell % 2 == 0:
        return ac_block_count(ell)
    return 2 ** (ell - 2) * (2 ** (ell - 1) - 1) if ell >= 2 else 0


def km_count(n: int, j: int) -> int:
    """AC-count for an AC part K of size 2j plus n - 2j commuting elements."""
    if not 0 <= 2 * j <= n:
        raise ValueError("need 0 <= 2j <= n")
    if j == 0:
        return 0
    return 2 ** (2 * n - 2 * j - 1) * (4 ** j - 1)


def km_count_printed(n: int, j: int) -> int:
    return 2 ** (2 * n - 1) * (2 ** j - 1)


def dual_count(N: int) -> int:
    return 3 * 2 ** (2 * N - 3)


# -- dual decompositions ---------------------------------------------------


def _recipe_base(e_signs: tuple[int, int], d_signs: Sequence[int], N: int):
    e1, e2 = standard_ac_generator(list(e_signs), ambient=N).elements
    d = [GroupElement.identity(N)]
    d += [central_element(N, 2 + t, negative=s < 0) for t, s in enumerate(d_signs)]
    return e1, e2, d


def dual_decomposition(recipe: int, i: int, j: int,
                       signatures: tuple[int, int, Sequence[int]] | None = None
                       ) -> tuple[Generator, Generator]:
    """Two commutative generators F, G with every F-G pair anticommuting.

    Built from an anticommuting pair e1, e2 and commuting elements d_1, d_2, ...
    (d_0 = 1), each on its own coordinate.

    recipe 1: F = e1 d_p for p < i, G = e1 e2 d_q for q = i-1 .. i+j-2.
    recipe 2: with piles c_r = d_1 ... d_r, F = e1, e1 c_1 .. e1 c_i and
        G = e2, e2 c_{i+1} .. e2 c_{i+j}; F has i + 1 elements, G has j + 1.
    recipe 3: e1 and e2 of opposite signatures, so e1 e2 is positive;
        F = e1 d_p for p < i with d_p of mixed signature, G = e1 e2 and
        e1 e2 d_q for q = i .. i+j-2 with positive d_q, so G is purely positive.

    ``signatures`` is (sign e1, sign e2, signs of d_1, d_2, ...).
    """
    if i < 1 or j < 1:
        raise ValueError("need i >= 1 and j >= 1")
    if recipe == 1 or recipe == 3:
        N = i + j
        nd = N - 2
        if signatures is None:
            if recipe == 1:
                signatures = (1, 1, [1] * nd)
            else:
                # d_1 .. d_{i-1} alternate -, +, ...; the later ones are positive
                signatures = (1, -1, [(1 if t % 2 else -1) if t < i - 1 else 1 for t in range(nd)])
        e_signs = (signatures[0], signatures[1])
        if recipe == 3 and e_signs[0] == e_signs[1]:
            raise ValueError("recipe 3 needs e1 and e2 of opposite signature")
        d_signs = list(signatures[2])
        if len(d_signs) != nd:
            raise LengthMismatch(f"need {nd} signatures for the commuting elements")
        e1, e2, d = _recipe_base(e_signs, d_signs, max(N, 2))
        L = max(N, 2)
        F = [mul(e1, d[p]) for p in range(i)]
        e12 = mul(e1, e2)
        if recipe == 1:
            G = [mul(e12, d[q]) for q in range(i - 1, i + j - 1)]
        else:
            G = [e12] + [mul(e12, d[q]) for q in range(i, i + j - 1)]
        return _gen(F, L), _gen(G, L)
    if recipe == 2:
        N = i + j + 2
        nd = N - 2
        if signatures is None:
            signatures = (1, 1, [1] * nd)
        d_signs = list(signatures[2])
        if len(d_signs) != nd:
            raise LengthMismatch(f"need {nd} signatures for the commuting elements")
        e1, e2, d = _recipe_base((signatures[0], signatures[1]), d_signs, N)
        piles, acc = [], GroupElement.identity(N)
        for r in range(1, nd + 1):
            acc = mul(acc, d[r])
            piles.append(acc)
        F = [e1] + [mul(e1, c) for c in piles[:i]]
        G = [e2] + [mul(e2, c) for c in piles[i:]]
        return _gen(F, N), _gen(G, N)
    raise ValueError(f"unknown recipe {recipe!r}")


# -- random commutation matrices -----------------------------------------


class CommutantEstimate(NamedTuple):
    closed_form: float
    monte_carlo: float
    stderr: float
    isolated_mc: float
    isolated_exact: float


def commutant_closed_form(n: int) -> float:
    return 1.0 - math.prod(1.0 - 2.0 ** -k for k in range(1, n))


def isolated_vertex_probability(n: int) -> float:
    """Probability that a uniform random graph on n vertices has an isolated vertex."""
    total = 2 ** math.comb(n, 2)
    none = sum((-1) ** k * math.comb(n, k) * 2 ** math.comb(n - k, 2) for k in range(n + 1))
    return 1.0 - none / total


def commutant_probability(n: int, samples: int = 100_000,
                          rng: np.random.Generator | int | None = 0) -> CommutantEstimate:
    """Closed form against sampling over uniform strict upper triangles D.

    ``monte_carlo`` estimates the event the closed form counts: some row
    i < n of D is zero.  ``isolated_mc`` and ``isolated_exact`` are for the
    stronger event that one element commutes with all the others.
    """
    if n < 2:
        raise ValueError("need n >= 2")
    rng = np.random.default_rng(rng)
    bits = rng.integers(0, 2, size=(samples, n, n), dtype=np.uint8)
    upper = np.triu(bits, k=1)
    zero_row = ~upper[:, : n - 1, :].any(axis=2)
    hit = zero_row.any(axis=1)
    p_hat = float(hit.mean())
    sym = upper | upper.transpose(0, 2, 1)
    isolated = (~sym.any(axis=2)).any(axis=1)
    closed = commutant_closed_form(n)
    stderr = math.sqrt(max(closed * (1 - closed), 1e-300) / samples)
    return CommutantEstimate(closed, p_hat, stderr, float(isolated.mean()),
                             isolated_vertex_probability(n))


__all__ = [
    "ClassLabel", "CommutantEstimate", "PartitionReport", "Reduction", "SignedAlgebraError",
    "ac_count_formula", "ac_to_chain", "ac_to_doubletons", "canonical_km", "chain_to_ac",
    "classify_doubleton_taxon", "classify_signature_type", "commutant_probability",
    "doubletons_to_ac", "dual_decomposition", "multiply_replacement", "parity_toggle",
    "partition_generator", "reduce_anticommutants", "signature_orbit", "transform",
]
