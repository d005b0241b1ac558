import pytest
from hypothesis import given, settings, strategies as st
from sympy import Matrix, ZZ
from sympy.matrices.normalforms import smith_normal_form

from ringlab.intlin import lattice_kernel, smith_form


def sympy_invariants(A, ncols):
    if not A:
        return [0] * ncols
    M = Matrix(A)
    D = smith_normal_form(M, domain=ZZ)
    diag = [abs(int(D[i, i])) for i in range(min(D.shape))]
    diag += [0] * (ncols - len(diag))
    return sorted(diag, key=lambda d: (d == 0, d))


def _matmul(A, B):
    return [[sum(a * b for a, b in zip(row, col)) for col in zip(*B)] for row in A]


def _det(M):
    return int(Matrix(M).det())


def test_smith_examples():
    diag, _ = smith_form([[2, 4], [6, 8]], 2)
    assert diag == [2, 4]
    diag, _ = smith_form([[4, 0], [0, 6]], 2)
    assert diag == [2, 12]
    diag, _ = smith_form([[2, 0, 0]], 3)
    assert diag == [2, 0, 0]
    assert smith_form([], 2)[0] == [0, 0]


def test_vinv_gives_quotient_generators():
    # Z^2 / <(2,0),(0,3)> is Z6 and its generator must have order 6
    diag, Vinv = smith_form([[2, 0], [0, 3]], 2)
    assert diag == [1, 6]
    g = Vinv[1]
    assert all(c % m for c, m in zip(g, (2, 3)))


matrices = st.integers(1, 4).flatmap(
    lambda n: st.integers(1, 4).flatmap(
        lambda m: st.tuples(st.just(m), st.lists(st.lists(st.integers(-12, 12), min_size=m, max_size=m),
                                                 min_size=n, max_size=n))))


@settings(max_examples=150, deadline=None)
@given(matrices)
def test_smith_matches_sympy(data):
    m, A = data
    diag, Vinv = smith_form(A, m)
    assert diag == sympy_invariants(A, m)
    nz = [d for d in diag if d]
    assert all(b % a == 0 for a, b in zip(nz, nz[1:]))
    assert abs(_det(Vinv)) == 1


@settings(max_examples=150, deadline=None)
@given(matrices)
def test_vinv_rows_have_invariant_orders(data):
    """Row t of Vinv, as an element of Z^m / rowspace(A), has order diag[t]."""
    m, A = data
    diag, Vinv = smith_form(A, m)
    V = [list(r) for r in Matrix(Vinv).inv().tolist()]
    V = [[int(x) for x in r] for r in V]
    # A V is diagonal up to a unimodular row transform, so A V has the same invariants
    AV = _matmul(A, V)
    assert sympy_invariants(AV, m) == diag
    for t, d in enumerate(diag):
        # column t of A V vanishes modulo d
        assert all(row[t] % d == 0 if d else True for row in AV)


def test_lattice_kernel_example():
    # relations among h1 = 2, h2 = 3 in Z: the kernel of (c1, c2) -> 2 c1 + 3 c2
    rows = [[2, 1, 0], [3, 0, 1]]
    K = lattice_kernel(rows, 1)
    M = Matrix(K)
    assert M.rank() == 1
    for r in K:
        assert 2 * r[0] + 3 * r[1] == 0
    assert smith_form(K, 2)[0] == [1, 0]


@settings(max_examples=100, deadline=None)
@given(st.lists(st.lists(st.integers(-6, 6), min_size=3, max_size=3), min_size=1, max_size=4))
def test_lattice_kernel_is_kernel(rows):
    # augment with the identity, split one column: kernel of c -> sum c_i a_i
    n = len(rows)
    aug = [r[:1] + [int(i == j) for j in range(n)] for i, r in enumerate(rows)]
    K = lattice_kernel(aug, 1)
    for c in K:
        assert sum(ci * r[0] for ci, r in zip(c, rows)) == 0
    # rank matches: n - rank of the first column
    rank_col = 1 if any(r[0] for r in rows) else 0
    assert (Matrix(K).rank() if K else 0) == n - rank_col
