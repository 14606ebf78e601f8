import itertools

import pytest
from hypothesis import given, settings, strategies as st

from designcodes.field import FieldCtx, PrimeMatrix, default_modulus, matrix_rank

from .oracles import naive_rank

# Lines of the Fano plane (points of the 3-dim binary geometry), as 0/1 rows.
# Rank over F_2 frozen from naive_rank below: 4.
FANO_ROWS = [
    [1, 1, 0, 1, 0, 0, 0],
    [0, 1, 1, 0, 1, 0, 0],
    [0, 0, 1, 1, 0, 1, 0],
    [0, 0, 0, 1, 1, 0, 1],
    [1, 0, 0, 0, 1, 1, 0],
    [0, 1, 0, 0, 0, 1, 1],
    [1, 0, 1, 0, 0, 0, 1],
]


def test_default_moduli():
    assert default_modulus(2, 2) == 7  # x^2 + x + 1
    assert default_modulus(2, 3) == 11  # x^3 + x + 1
    assert default_modulus(3, 2) == 10  # x^2 + 1


def test_ctx_of_prime_power():
    c = FieldCtx.of(8)
    assert (c.p, c.m, c.q) == (2, 3, 8)
    assert FieldCtx.of(5).modulus == 5  # x


def test_ctx_rejects_bad_orders():
    with pytest.raises(ValueError):
        FieldCtx.of(6)
    with pytest.raises(ValueError):
        FieldCtx.of(1024)
    with pytest.raises(ValueError):
        FieldCtx.of(4, modulus=5)  # x^2 + 1 = (x+1)^2 over F_2
    with pytest.raises(ValueError):
        FieldCtx.of(4, modulus=3)  # not monic of degree 2


def test_mul_examples(gf2, gf4):
    assert gf2.mul(1, 1) == 1
    # x * x = x + 1 modulo x^2 + x + 1
    assert gf4.mul(2, 2) == 3
    for ctx in (gf2, gf4, FieldCtx.of(5)):
        for a in range(ctx.q):
            assert ctx.mul(a, 0) == 0


def test_inv_examples(gf2, gf4):
    assert gf2.inv(1) == 1
    assert gf4.inv(2) == 3  # x * (x+1) = x^2 + x = 1
    assert FieldCtx.of(5).inv(2) == 3
    with pytest.raises(ValueError, match="zero"):
        gf4.inv(0)


@pytest.mark.parametrize("q", [2, 3, 4, 5, 8])
def test_field_axioms_exhaustive(q):
    ctx = FieldCtx.of(q)
    els = range(q)
    for a, b in itertools.product(els, repeat=2):
        assert ctx.add(a, b) == ctx.add(b, a)
        assert ctx.mul(a, b) == ctx.mul(b, a)
        assert ctx.sub(a, b) == ctx.add(a, ctx.neg(b))
    for a, b, c in itertools.product(els, repeat=3):
        assert ctx.mul(a, ctx.mul(b, c)) == ctx.mul(ctx.mul(a, b), c)
        assert ctx.add(a, ctx.add(b, c)) == ctx.add(ctx.add(a, b), c)
        assert ctx.mul(a, ctx.add(b, c)) == ctx.add(ctx.mul(a, b), ctx.mul(a, c))
    for a in els:
        assert ctx.add(a, 0) == a
        assert ctx.mul(a, 1) == a
        assert ctx.add(a, ctx.neg(a)) == 0
        if a:
            assert ctx.mul(a, ctx.inv(a)) == 1


def test_fano_rank_matches_oracle():
    assert naive_rank(FANO_ROWS, 2) == 4
    m = PrimeMatrix.from_rows(FANO_ROWS, p=2, ncols=7)
    assert matrix_rank(m) == 4


def test_rank_trivial_cases():
    ident = [[1 if i == j else 0 for j in range(6)] for i in range(6)]
    for p in (2, 3, 5):
        assert matrix_rank(PrimeMatrix.from_rows(ident, p, 6), p) == 6
    zeros = PrimeMatrix.from_rows([[0] * 4] * 3, 3, 4)
    assert matrix_rank(zeros) == 0
    assert matrix_rank(PrimeMatrix(p=2, ncols=5, rows=[])) == 0


def test_rank_bounded_by_shape():
    rows = [[1, 0, 1], [0, 1, 1], [1, 1, 0], [1, 1, 1]]
    m = PrimeMatrix.from_rows(rows, 2, 3)
    assert matrix_rank(m) <= min(m.nrows, m.ncols)


def test_rank_rejects_large_entries():
    m = PrimeMatrix.from_rows([[0, 2], [1, 1]], p=3, ncols=2)
    with pytest.raises(ValueError, match="prime field"):
        matrix_rank(m, p=2)


def test_rank_of_binary_matrix_over_odd_prime():
    # 0/1 matrix ranked over F_3: the all-ones 2x2 has rank 1, same as F_2.
    m = PrimeMatrix.from_rows([[1, 1], [1, 1]], p=2, ncols=2)
    assert matrix_rank(m, p=3) == 1
    m2 = PrimeMatrix.from_rows([[1, 1, 0], [0, 1, 1], [1, 0, 1]], p=2, ncols=3)
    # over F_2 the rows sum to zero, over F_3 they do not
    assert matrix_rank(m2, p=2) == 2
    assert matrix_rank(m2, p=3) == 3


@settings(max_examples=60, deadline=None)
@given(
    st.integers(min_value=1, max_value=64),
    st.integers(min_value=1, max_value=64),
    st.sampled_from([2, 3]),
    st.randoms(use_true_random=False),
)
def test_rank_agrees_with_naive_oracle(nrows, ncols, p, rng):
    rows = [[rng.randrange(p) for _ in range(ncols)] for _ in range(nrows)]
    m = PrimeMatrix.from_rows(rows, p, ncols)
    assert matrix_rank(m, p) == naive_rank(rows, p)


@settings(max_examples=40)
@given(st.randoms(use_true_random=False))
def test_rank_invariant_under_row_shuffle(rng):
    nrows, ncols = rng.randrange(1, 30), rng.randrange(1, 30)
    rows = [[rng.randrange(2) for _ in range(ncols)] for _ in range(nrows)]
    shuffled = rows[:]
    rng.shuffle(shuffled)
    a = matrix_rank(PrimeMatrix.from_rows(rows, 2, ncols))
    b = matrix_rank(PrimeMatrix.from_rows(shuffled, 2, ncols))
    assert a == b


def test_streaming_rank_over_raw_rows():
    masks = (m for m in [0b101, 0b011, 0b110])
    assert matrix_rank(masks, p=2) == 2
    with pytest.raises(ValueError):
        matrix_rank([[0, 1]], p=None)


def test_matrix_file_roundtrip(tmp_path):
    m = PrimeMatrix.from_rows(FANO_ROWS, 2, 7)
    path = tmp_path / "fano.pmatrix"
    m.save(path)
    text = path.read_text()
    again = PrimeMatrix.load(path)
    assert again.rows == m.rows and again.ncols == m.ncols and again.p == m.p
    path2 = tmp_path / "fano2.pmatrix"
    again.save(path2)
    assert path2.read_text() == text


def test_matrix_file_rejects_garbage(tmp_path):
    with pytest.raises(ValueError):
        PrimeMatrix.loads("not a header\n11\n")
    with pytest.raises(ValueError):
        PrimeMatrix.loads("pmatrix rows=2 cols=2 p=2\n11\n")
    with pytest.raises(ValueError):
        PrimeMatrix.loads("pmatrix rows=1 cols=3 p=2\n11\n")
