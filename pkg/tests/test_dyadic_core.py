import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import bitmatrices, bitvecs
from signedalg.dyadic_core import (BitMatrix, BitVec, complement, complement_identity, gf2_matmul,
                                   gf2_rank, identity, mass, ones, strict_upper, tensor)
from signedalg.errors import DimensionMismatch, NotSquare


def test_mass_examples():
    assert mass(BitVec.zeros(5)) == 0
    assert mass(BitVec.from_bits([1, 0, 1, 1])) == 3
    assert mass(BitVec.ones(9)) == 9


def test_text_roundtrip():
    v = BitVec.parse("1011")
    assert list(v) == [1, 0, 1, 1]
    assert str(v) == "1011"
    P = BitMatrix.from_rows([[1, 0, 1], [0, 1, 1]])
    assert BitMatrix.parse(P.to_text()) == P
    assert P.to_text() == "2 3\n101\n011\n"


def test_parse_rejects_bad_rows():
    with pytest.raises(DimensionMismatch):
        BitMatrix.parse("2 2\n10\n")
    with pytest.raises(DimensionMismatch):
        BitMatrix.parse("1 2\n101\n")
    with pytest.raises(ValueError):
        BitVec.parse("102")


@given(bitvecs(n=11), bitvecs(n=11), bitvecs(n=11))
def test_xor_group_laws(u, v, w):
    assert (u ^ v) ^ w == u ^ (v ^ w)
    assert u ^ v == v ^ u
    assert u ^ u == BitVec.zeros(11)


def test_length_mismatch():
    with pytest.raises(Exception):
        BitVec.zeros(3) ^ BitVec.zeros(4)


def test_multiplication_tables():
    for n in (2, 4, 6):
        cI, II = complement_identity(n), ones(n)
        assert gf2_matmul(cI, cI) == identity(n)
        assert gf2_matmul(cI, II) == II
        assert gf2_matmul(II, II) == BitMatrix.zeros(n)
    for n in (1, 3, 5):
        cI, II = complement_identity(n), ones(n)
        assert gf2_matmul(cI, cI) == cI
        assert gf2_matmul(cI, II) == BitMatrix.zeros(n)
        assert gf2_matmul(II, II) == II


def test_complement_constants():
    for n in range(1, 6):
        assert complement(identity(n)) == complement_identity(n)
        assert complement(complement_identity(n)) == identity(n)


@given(bitmatrices(rows=5, cols=7))
def test_complement_is_ones_xor(P):
    assert complement(P) == ones(5, 7) ^ P
    assert complement(complement(P)) == P


@given(st.data())
def test_matmul_matches_integer_product(data):
    r, k, c = (data.draw(st.integers(1, 9)) for _ in range(3))
    A = data.draw(bitmatrices(rows=r, cols=k))
    B = data.draw(bitmatrices(rows=k, cols=c))
    want = (A.to_array().astype(int) @ B.to_array().astype(int)) % 2
    assert np.array_equal(gf2_matmul(A, B).to_array(), want)


@given(st.data())
def test_matmul_associative_and_distributive(data):
    n = data.draw(st.integers(1, 8))
    A, B, C = (data.draw(bitmatrices(rows=n, cols=n)) for _ in range(3))
    assert gf2_matmul(gf2_matmul(A, B), C) == gf2_matmul(A, gf2_matmul(B, C))
    assert gf2_matmul(A, B ^ C) == gf2_matmul(A, B) ^ gf2_matmul(A, C)


def test_matmul_shape_check():
    with pytest.raises(DimensionMismatch):
        gf2_matmul(BitMatrix.zeros(2, 3), BitMatrix.zeros(2, 3))


def test_identity_product():
    A = BitMatrix.from_rows([[1, 1, 0], [0, 1, 1], [1, 0, 0]])
    assert gf2_matmul(identity(3), A) == A


def test_strict_upper_examples():
    assert strict_upper(ones(3)) == BitMatrix.from_rows([[0, 1, 1], [0, 0, 1], [0, 0, 0]])
    assert strict_upper(identity(4)) == BitMatrix.zeros(4)
    with pytest.raises(NotSquare):
        strict_upper(BitMatrix.zeros(2, 3))


@given(bitmatrices(rows=6, cols=6))
def test_strict_upper_symmetric_split(P):
    up = strict_upper(P)
    D = up ^ up.transpose()  # symmetric with zero diagonal
    assert strict_upper(D) ^ strict_upper(D).transpose() == D


def test_tensor_examples():
    u = BitVec.from_bits([1, 1, 0])
    assert tensor(u, u) == BitMatrix.from_rows([[1, 1, 0], [1, 1, 0], [0, 0, 0]])
    assert tensor(BitVec.ones(4), BitVec.ones(4)) == ones(4)
    T = tensor(BitVec.unit(5, 1), BitVec.unit(5, 3))
    assert T.mass() == 1 and T[1, 3] == 1


@given(bitvecs(n=16), bitvecs(n=16), bitvecs(n=16), bitvecs(n=16))
def test_scattered_ones_identity(u, v, r, s):
    lhs = gf2_matmul(tensor(u, v), tensor(r, s))
    rhs = tensor(u, s) if v.dot(r) else BitMatrix.zeros(16)
    assert lhs == rhs


@given(bitmatrices(max_dim=10))
def test_rank_matches_numpy_on_small_cases(P):
    # rank over GF(2) never exceeds the real rank of the 0-1 matrix
    assert gf2_rank(P) <= np.linalg.matrix_rank(P.to_array().astype(float))
    assert gf2_rank(P) == gf2_rank(P.transpose())


def test_padding_bits_stay_zero():
    v = BitVec.ones(5).complement()
    assert v.bits == 0
    M = complement(BitMatrix.ones(3, 2))
    assert all(r == 0 for r in M.data)
