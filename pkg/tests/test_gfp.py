import numpy as np
import pytest

from hilb3 import gfp

P = gfp.DEFAULT_PRIME
P2 = gfp.SECOND_PRIME


def test_primes_are_prime():
    assert gfp.is_prime(P)
    assert gfp.is_prime(P2)
    assert not gfp.is_prime(2**31 - 3)
    assert not gfp.is_prime(1)


def test_kernel_identity_empty():
    a = gfp.identity(3)
    assert gfp.kernel_basis(a, P).shape == (0, 3)


def test_kernel_zero_map():
    a = gfp.zeros(2, 3)
    k = gfp.kernel_basis(a, P)
    assert k.shape == (3, 3)
    assert gfp.rank(k, P) == 3


def test_kernel_hand_reduced():
    # [[1,1,0],[0,0,1]]: kernel spanned by (1, p-1, 0)
    a = gfp.as_matrix([[1, 1, 0], [0, 0, 1]], P)
    k = gfp.kernel_basis(a, P)
    assert k.shape == (1, 3)
    v = k[0]
    assert (gfp.matmul(a, v.reshape(-1, 1), P) == 0).all()
    scale = gfp.inv_mod(int(v[0]), P)
    assert [int(c) * scale % P for c in v] == [1, P - 1, 0]


def test_zero_row_matrix_kernel():
    a = np.zeros((0, 4), dtype=np.int64)
    assert gfp.kernel_basis(a, P).shape == (4, 4)


@pytest.mark.parametrize("p", [P, P2, 97])
def test_rank_nullity_random(p):
    rng = np.random.default_rng(20240811)
    for _ in range(25):
        n, m = rng.integers(1, 12, size=2)
        a = rng.integers(0, p, size=(n, m), dtype=np.int64)
        r = gfp.rank(a, p)
        k = gfp.kernel_basis(a, p)
        assert r + k.shape[0] == m
        if k.size:
            assert (gfp.matmul(a, k.T, p) == 0).all()


def test_matmul_matches_python_ints():
    rng = np.random.default_rng(7)
    a = rng.integers(0, P, size=(5, 7), dtype=np.int64)
    b = rng.integers(0, P, size=(7, 4), dtype=np.int64)
    got = gfp.matmul(a, b, P)
    want = [[sum(int(a[i, k]) * int(b[k, j]) for k in range(7)) % P
             for j in range(4)] for i in range(5)]
    assert got.tolist() == want


def test_solve():
    a = gfp.as_matrix([[1, 2], [3, 4]], P)
    x = gfp.solve(a, np.array([5, 6]), P)
    assert (gfp.matmul(a, x.reshape(-1, 1), P).ravel() == [5, 6]).all()
    inconsistent = gfp.solve(gfp.as_matrix([[1, 1], [2, 2]], P), np.array([0, 1]), P)
    assert inconsistent is None
