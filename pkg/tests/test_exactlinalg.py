import random
from fractions import Fraction

import pytest

from quivergrass.exactlinalg import (
    BudgetExceeded,
    FieldSpec,
    Matrix,
    block2x2,
    block_diag,
    enumerate_subspaces,
    gaussian_binomial,
    hstack,
    inverse,
    kernel_basis,
    kron,
    matrix_from_json,
    matrix_to_json,
    rref,
    row_space,
    scalar_from_json,
    scalar_to_json,
    solve,
    subspaces_containing,
    vstack,
)

F2 = FieldSpec.prime(2)
F3 = FieldSpec.prime(3)
F5 = FieldSpec.prime(5)
QQ = FieldSpec.rational()


def rand_matrix(field, nr, nc, rng):
    if field.is_prime:
        rows = [[rng.randrange(field.p) for _ in range(nc)] for _ in range(nr)]
    else:
        rows = [[Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(nc)]
                for _ in range(nr)]
    return Matrix(field, rows, ncols=nc)


def test_field_validation():
    with pytest.raises(ValueError):
        FieldSpec.prime(4)
    with pytest.raises(ValueError):
        FieldSpec.prime(1)
    assert FieldSpec.prime(2).p == 2
    assert FieldSpec.prime(101).is_prime
    assert not QQ.is_prime


def test_field_coerce():
    assert F5.coerce(7) == 2
    assert F5.coerce(-1) == 4
    assert F5.coerce(Fraction(1, 2)) == 3  # inverse of 2 mod 5
    assert QQ.coerce(3) == Fraction(3)
    with pytest.raises(TypeError):
        F5.coerce(True)
    with pytest.raises(ValueError):
        F5.coerce(Fraction(1, 5))


def test_field_inv():
    for a in range(1, 5):
        assert (F5.inv(a) * a) % 5 == 1
    assert QQ.inv(Fraction(3, 2)) == Fraction(2, 3)
    with pytest.raises(ZeroDivisionError):
        F5.inv(0)


def test_matrix_basic_arithmetic():
    a = Matrix(F5, [[1, 2], [3, 4]], ncols=2)
    b = Matrix(F5, [[0, 1], [1, 0]], ncols=2)
    assert (a + b).entries == ((1, 3), (4, 4))
    assert (a - b).entries == ((1, 1), (2, 4))
    assert (a * b).entries == ((2, 1), (4, 3))
    assert a.scale(2).entries == ((2, 4), (1, 3))
    assert (-b).entries == ((0, 4), (4, 0))
    assert a.transpose().entries == ((1, 3), (2, 4))


def test_matrix_rational_product():
    a = Matrix(QQ, [[Fraction(1, 2), 1]], ncols=2)
    b = Matrix(QQ, [[2], [Fraction(1, 3)]], ncols=1)
    assert (a * b).entries == ((Fraction(4, 3),),)


def test_zero_dimension_matrices():
    e = Matrix.zeros(F3, 0, 3)
    f = Matrix.zeros(F3, 3, 0)
    assert (f * e).shape == (3, 3)
    assert (f * e).is_zero
    assert (e * f).shape == (0, 0)
    assert e.transpose().shape == (3, 0)
    assert rref(e).rank == 0
    assert kernel_basis(e).nrows == 3  # everything is in the kernel


def test_shape_mismatch_errors():
    a = Matrix(F3, [[1, 2]], ncols=2)
    with pytest.raises(ValueError):
        a + Matrix(F3, [[1]], ncols=1)
    with pytest.raises(ValueError):
        a * a
    with pytest.raises(ValueError):
        a + Matrix(F5, [[1, 2]], ncols=2)


def test_stack_and_blocks():
    a = Matrix(F3, [[1, 2]], ncols=2)
    b = Matrix(F3, [[0, 1]], ncols=2)
    assert vstack([a, b]).entries == ((1, 2), (0, 1))
    assert hstack([a, b]).entries == ((1, 2, 0, 1),)
    d = block_diag(a, b)
    assert d.shape == (2, 4)
    assert d.entries == ((1, 2, 0, 0), (0, 0, 0, 1))
    q = block2x2(Matrix.identity(F3, 1), Matrix(F3, [[2]], ncols=1),
                 Matrix.zeros(F3, 1, 1), Matrix.identity(F3, 1))
    assert q.entries == ((1, 2), (0, 1))


def test_kron_indexing():
    a = Matrix(F5, [[1, 2], [0, 3]], ncols=2)
    b = Matrix(F5, [[0, 1], [1, 0]], ncols=2)
    k = kron(a, b)
    # k[(i*2+r), (j*2+s)] = a[i][j] * b[r][s]
    for i in range(2):
        for j in range(2):
            for r in range(2):
                for s in range(2):
                    assert k.at(i * 2 + r, j * 2 + s) == (a.at(i, j) * b.at(r, s)) % 5


def test_rref_known_example():
    # det = 3, invertible over F_5
    m = Matrix(F5, [[1, 2, 3], [2, 0, 1], [1, 1, 1]], ncols=3)
    res = rref(m)
    assert res.rank == 3
    assert res.reduced == Matrix.identity(F5, 3)
    # the second row is 2x the first over F_3, so the rank drops
    m2 = Matrix(F3, [[1, 2, 0], [2, 1, 0]], ncols=3)
    res2 = rref(m2)
    assert res2.rank == 1
    assert res2.pivots == (0,)
    assert res2.reduced.entries == ((1, 2, 0), (0, 0, 0))


def test_rref_idempotent_random():
    rng = random.Random(1)
    for _ in range(40):
        field = rng.choice([F2, F3, F5, QQ])
        m = rand_matrix(field, rng.randint(0, 4), rng.randint(0, 4), rng)
        r = rref(m).reduced
        again = rref(r)
        assert again.reduced == r
        assert again.rank == rref(m).rank


def test_row_space_canonical():
    rng = random.Random(2)
    for _ in range(30):
        m = rand_matrix(F5, 3, 4, rng)
        s = row_space(m)
        # scrambling the rows by an invertible transform keeps the row space
        g = None
        while g is None or inverse(g) is None:
            g = rand_matrix(F5, 3, 3, rng)
        assert row_space(g * m) == s


def test_kernel_basis_property():
    rng = random.Random(3)
    for _ in range(40):
        field = rng.choice([F3, F5, QQ])
        m = rand_matrix(field, rng.randint(1, 4), rng.randint(1, 4), rng)
        kb = kernel_basis(m)
        assert kb.nrows == m.ncols - rref(m).rank
        prod = m * kb.transpose()
        assert prod.is_zero
        # canonical: already in reduced form
        assert rref(kb).reduced == kb or kb.nrows == 0


def test_solve():
    a = Matrix(F5, [[1, 2], [3, 4]], ncols=2)
    x = solve(a, [1, 1])
    assert x is not None
    got = a * Matrix(F5, [[x[0]], [x[1]]], ncols=1)
    assert got.entries == ((1,), (1,))
    # inconsistent system
    b = Matrix(F5, [[1, 0], [2, 0]], ncols=2)
    assert solve(b, [0, 1]) is None
    # underdetermined: free variables are set to zero
    c = Matrix(F5, [[1, 2, 3]], ncols=3)
    y = solve(c, [4])
    assert y == (4, 0, 0)


def test_inverse():
    rng = random.Random(4)
    for _ in range(25):
        n = rng.randint(0, 4)
        m = rand_matrix(F5, n, n, rng)
        inv = inverse(m)
        if inv is None:
            assert rref(m).rank < n
        else:
            assert m * inv == Matrix.identity(F5, n)
            assert inv * m == Matrix.identity(F5, n)


def test_inverse_singular_mod3():
    # det(1,2;2,1) = 1 - 4 = -3 which vanishes mod 3
    m = Matrix(F3, [[1, 2], [2, 1]], ncols=2)
    assert rref(m).rank == 1
    assert inverse(m) is None


def test_gaussian_binomial_values():
    assert gaussian_binomial(4, 2, 2) == 35
    assert gaussian_binomial(5, 2, 3) == 1210
    assert gaussian_binomial(6, 3, 5) == 2558556
    assert gaussian_binomial(3, 0, 7) == 1
    assert gaussian_binomial(3, 3, 7) == 1
    assert gaussian_binomial(2, 3, 7) == 0
    # symmetry
    for n in range(6):
        for k in range(n + 1):
            assert gaussian_binomial(n, k, 3) == gaussian_binomial(n, n - k, 3)


def test_enumerate_subspaces_counts():
    for p, field in ((2, F2), (3, F3), (5, F5)):
        for n in range(5):
            for k in range(n + 1):
                pts = list(enumerate_subspaces(n, k, field))
                assert len(pts) == gaussian_binomial(n, k, p)
                assert len(set(m.entries for m in pts)) == len(pts)
                for m in pts:
                    assert rref(m).reduced == m


def test_enumerate_subspaces_budget():
    with pytest.raises(BudgetExceeded):
        list(enumerate_subspaces(6, 3, F5, budget=1000))


def test_subspaces_containing():
    base = row_space(Matrix(F3, [[1, 0, 2, 0]], ncols=4))
    found = list(subspaces_containing(base, 2))
    assert len(found) == gaussian_binomial(3, 1, 3)
    for s in found:
        assert s.nrows == 2
        stacked = vstack([s, base])
        assert rref(stacked).rank == 2  # base inside s
    # oracle: filter the full enumeration
    brute = [s for s in enumerate_subspaces(4, 2, F3)
             if rref(vstack([s, base])).rank == 2]
    assert sorted(s.entries for s in found) == sorted(s.entries for s in brute)


def test_subspaces_containing_trivial_base():
    base = Matrix.zeros(F2, 0, 3)
    got = sorted(s.entries for s in subspaces_containing(base, 1))
    want = sorted(s.entries for s in enumerate_subspaces(3, 1, F2))
    assert got == want


def test_scalar_serialization():
    assert scalar_to_json(F5, 3) == 3
    assert scalar_from_json(F5, 3) == 3
    assert scalar_to_json(QQ, Fraction(-2, 3)) == "-2/3"
    assert scalar_from_json(QQ, "-2/3") == Fraction(-2, 3)
    assert scalar_from_json(QQ, 4) == Fraction(4)


def test_matrix_serialization_roundtrip():
    rng = random.Random(5)
    for field in (F3, QQ):
        m = rand_matrix(field, 2, 3, rng)
        data = matrix_to_json(m)
        back = matrix_from_json(field, data, 2, 3)
        assert back == m
    with pytest.raises(ValueError):
        matrix_from_json(F3, [[1, 2]], 1, 3)
