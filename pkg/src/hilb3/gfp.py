"""Exact dense linear algebra over a prime field F_p.

Matrices are numpy ``int64`` arrays with entries reduced into ``[0, p)``.
With p < 2^31 every intermediate product fits in an int64, so plain
Gaussian elimination with ``% p`` after each row operation is exact.
Pivoting always takes the first row with a nonzero entry, which makes
every result deterministic.

The default prime is 2^31 - 1.  Characteristic-zero statements are only
certified numerically by agreement over two large primes, so a second
prime (2^31 - 19) is provided for cross-checks.
"""
from __future__ import annotations

import numpy as np

DEFAULT_PRIME = 2**31 - 1
SECOND_PRIME = 2**31 - 19  # 2147483629, the largest prime below 2^31 - 1


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, valid for all n < 3.3e24."""
    if n < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def inv_mod(a: int, p: int) -> int:
    return pow(int(a) % p, p - 2, p)


def as_matrix(rows, p: int) -> np.ndarray:
    """Coerce a nested sequence (or array) into a reduced int64 F_p matrix."""
    a = np.array(rows, dtype=np.int64)
    if a.ndim == 1:
        a = a.reshape(1, -1)
    return np.mod(a, p)


def zeros(nrows: int, ncols: int) -> np.ndarray:
    return np.zeros((nrows, ncols), dtype=np.int64)


def identity(n: int) -> np.ndarray:
    return np.eye(n, dtype=np.int64)


def matmul(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    """Exact product mod p, chunked so accumulated dot products cannot overflow.

    Each summand is < p^2 < 2^62, so at most two terms may be summed before
    reduction; we reduce after every rank-1 update block instead, splitting
    the inner dimension into slices of length 1 would be slow, so slices of
    length 2 are used: 2 * (p-1)^2 < 2^63 - 1 holds for p <= 2^31 - 1.
    """
    a = np.mod(a, p)
    b = np.mod(b, p)
    n = a.shape[1]
    out = np.zeros((a.shape[0], b.shape[1]), dtype=np.int64)
    step = 2
    for k in range(0, n, step):
        out = (out + a[:, k:k + step] @ b[k:k + step, :]) % p
    return out


def rref(a: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form and the list of pivot columns."""
    a = np.mod(np.array(a, dtype=np.int64, copy=True), p)
    nrows, ncols = a.shape
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        col = a[r:, c]
        nz = np.nonzero(col)[0]
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            a[[r, i]] = a[[i, r]]
        a[r] = a[r] * inv_mod(int(a[r, c]), p) % p
        rest = np.nonzero(a[:, c])[0]
        rest = rest[rest != r]
        if rest.size:
            a[rest] = (a[rest] - np.outer(a[rest, c], a[r])) % p
        pivots.append(c)
        r += 1
    return a, pivots


def rank(a: np.ndarray, p: int) -> int:
    if a.size == 0:
        return 0
    return len(rref(a, p)[1])


def kernel_basis(a: np.ndarray, p: int) -> np.ndarray:
    """Basis of the right null space {v : a v = 0}, one vector per row.

    The number of rows returned is ncols - rank(a).  A 0 x n matrix has
    kernel all of F_p^n.
    """
    a = np.asarray(a, dtype=np.int64)
    ncols = a.shape[1]
    if a.shape[0] == 0 or ncols == 0:
        return identity(ncols)
    r, pivots = rref(a, p)
    free = [c for c in range(ncols) if c not in pivots]
    basis = zeros(len(free), ncols)
    for k, c in enumerate(free):
        basis[k, c] = 1
        for row, pc in enumerate(pivots):
            basis[k, pc] = (-int(r[row, c])) % p
    return basis


def solve(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray | None:
    """One solution of a x = b, or None if inconsistent."""
    a = np.mod(np.asarray(a, dtype=np.int64), p)
    b = np.mod(np.asarray(b, dtype=np.int64).reshape(-1), p)
    aug = np.hstack([a, b.reshape(-1, 1)])
    r, pivots = rref(aug, p)
    ncols = a.shape[1]
    if ncols in pivots:
        return None
    x = np.zeros(ncols, dtype=np.int64)
    for row, pc in enumerate(pivots):
        x[pc] = r[row, ncols]
    return x
