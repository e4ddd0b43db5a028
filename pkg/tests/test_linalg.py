import random
from fractions import Fraction

from nichols.linalg import (
    Echelon,
    decode_word,
    encode_word,
    invert_square,
    smith_normal_form,
)
from nichols.scalars import Cyc, integer, one, rational, root_of_unity, zero


def test_word_encoding_roundtrip():
    for d in (2, 3, 4):
        for n in (1, 2, 3):
            for key in range(d ** n):
                assert encode_word(decode_word(key, d, n), d) == key
    # leftmost letter is most significant
    assert encode_word((1, 0, 0), 2) == 4
    # integer order on keys is lexicographic order on words
    assert encode_word((0, 1), 3) < encode_word((0, 2), 3) < encode_word((1, 0), 3)


def test_echelon_rank_and_membership():
    ech = Echelon()
    v1 = {0: integer(1), 1: integer(2)}
    v2 = {1: integer(1)}
    assert ech.insert(v1) == 0
    assert ech.insert({0: integer(2), 1: integer(4)}) is None  # dependent
    assert ech.insert(v2) == 1
    assert ech.rank == 2
    assert ech.contains({0: integer(5), 1: integer(-3)})
    assert not ech.contains({2: one()})


def test_echelon_reduce_is_canonical_projection():
    ech = Echelon()
    ech.insert({0: one(), 2: integer(3)})
    ech.insert({1: one(), 2: integer(-1)})
    res = ech.reduce({0: one(), 1: one(), 2: one()})
    # pivots 0 and 1 must be eliminated entirely
    assert set(res) == {2}
    assert res[2] == integer(-1)


def test_echelon_rref_and_nullspace():
    ech = Echelon()
    ech.insert({0: one(), 1: one(), 2: one()})
    ech.insert({1: one(), 2: integer(2)})
    null = ech.nullspace(range(3))
    assert len(null) == 1
    vec = null[0]
    # check orthogonality against the original rows
    for row in ech.rows.values():
        s = zero()
        for k, c in row.items():
            if k in vec:
                s = s + c * vec[k]
        assert s.is_zero()


def test_invert_square():
    i = root_of_unity(4, 1)
    cols = {0: {0: one(), 1: i}, 1: {1: integer(2)}}
    inv = invert_square(cols, 2)
    # multiply back: columns of M * inv must give the identity
    for j in range(2):
        acc = {}
        for k, c in inv[j].items():
            for r, v in cols[k].items():
                acc[r] = acc.get(r, zero()) + v * c
        for r in range(2):
            want = one() if r == j else zero()
            assert acc.get(r, zero()) == want
    try:
        invert_square({0: {0: one(), 1: one()}, 1: {0: one(), 1: one()}}, 2)
        assert False, "singular matrix must raise"
    except ValueError:
        pass


def test_smith_normal_form_examples():
    assert smith_normal_form([[2, 4], [6, 8]], 2, 2) == [2, 4]
    assert smith_normal_form([[1, 0], [0, 1]], 2, 2) == [1, 1]
    assert smith_normal_form([[0, 0], [0, 0]], 2, 2) == []
    # divisibility chain is enforced
    assert smith_normal_form([[2, 0], [0, 3]], 2, 2) == [1, 6]


def test_smith_normal_form_randomized():
    rng = random.Random(11)
    for _ in range(25):
        rows = rng.randint(1, 4)
        cols = rng.randint(1, 4)
        mat = [[rng.randint(-6, 6) for _ in range(cols)] for _ in range(rows)]
        diag, v, vinv = smith_normal_form(mat, rows, cols, want_right=True)
        for i in range(len(diag) - 1):
            assert diag[i + 1] % diag[i] == 0
        assert all(d > 0 for d in diag)
        # v * vinv = identity
        for i in range(cols):
            for j in range(cols):
                s = sum(v[i][k] * vinv[k][j] for k in range(cols))
                assert s == (1 if i == j else 0)
        # determinant magnitude is preserved for square full-rank inputs
        if rows == cols and len(diag) == rows:
            det = _det(mat)
            prod = 1
            for d in diag:
                prod *= d
            assert abs(det) == prod


def _det(mat):
    n = len(mat)
    m = [[Fraction(v) for v in row] for row in mat]
    det = Fraction(1)
    for c in range(n):
        pivot = next((r for r in range(c, n) if m[r][c]), None)
        if pivot is None:
            return 0
        if pivot != c:
            m[c], m[pivot] = m[pivot], m[c]
            det = -det
        det *= m[c][c]
        for r in range(c + 1, n):
            f = m[r][c] / m[c][c]
            for k in range(c, n):
                m[r][k] -= f * m[c][k]
    return det
