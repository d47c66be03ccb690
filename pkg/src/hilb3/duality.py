"""Dual module, Gorenstein type, and the bicanonical degree of S/I.

For a finite quotient R = S/I with standard monomial basis m_1, ..., m_d,
the dual module omega_R = Hom_k(R, k) carries the R-action
(r.f)(m) = f(rm); in the dual basis the action of a variable is the
transpose of its multiplication matrix.  The Gorenstein type is the
dimension of the socle (0 : m), the simultaneous kernel of the three
multiplication matrices acting on R.

The bicanonical module is Sym^2_R omega_R: the k-linear symmetric square
of omega_R, dimension d(d+1)/2, modulo the relations
(r f) . g - f . (r g) for algebra generators r (telescoping extends
these to all of R).  Its degree is compared with two Hom spaces:
Hom_R(omega_R, R) (matrices F with F M_v^T = M_v F) and its symmetric
part (F also literally symmetric, since R and omega_R carry dual bases);
in characteristic != 2 the symmetric part has the same dimension as the
bicanonical module.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import gfp, poly3
from .errors import CharTwoError
from .poly3 import PolyIdeal, QuotientData


@dataclass
class FiniteAlgebra:
    """Quotient data together with the dual-module action matrices."""

    quotient: QuotientData
    omega_action: tuple[np.ndarray, ...]  # transposes of the mult matrices


def finite_algebra(I: PolyIdeal) -> FiniteAlgebra:
    qd = poly3.quotient_data(I)
    return FiniteAlgebra(quotient=qd,
                         omega_action=tuple(m.T.copy() for m in qd.mult_matrices))


@dataclass
class BicanonicalReport:
    colength: int
    sym2_omega_deg: int
    homsym_dim: int
    hom_full_dim: int


def gorenstein_type(I: PolyIdeal) -> int:
    """dim soc(S/I); type 1 means Gorenstein."""
    qd = poly3.quotient_data(I)
    if qd.colength == 0:
        return 0
    stacked = np.vstack(qd.mult_matrices)
    return qd.colength - gfp.rank(stacked, qd.ring.p)


def _sym_pair_index(d: int) -> dict[tuple[int, int], int]:
    idx = {}
    n = 0
    for i in range(d):
        for j in range(i, d):
            idx[(i, j)] = n
            n += 1
    return idx


def _sym2_relation_rank(mats, d: int, p: int) -> int:
    """Rank of the span of (r e_i) . e_j - e_i . (r e_j) in Sym^2."""
    idx = _sym_pair_index(d)
    nsym = len(idx)
    rows = []
    for m in mats:
        for i in range(d):
            for j in range(i, d):
                row = np.zeros(nsym, dtype=np.int64)
                for k in range(d):
                    c = int(m[i, k])
                    if c:
                        a, b = (k, j) if k <= j else (j, k)
                        row[idx[(a, b)]] = (row[idx[(a, b)]] + c) % p
                    c = int(m[j, k])
                    if c:
                        a, b = (i, k) if i <= k else (k, i)
                        row[idx[(a, b)]] = (row[idx[(a, b)]] - c) % p
                if row.any():
                    rows.append(row)
    if not rows:
        return 0
    return gfp.rank(np.vstack(rows), p)


def _intertwiner_dim(mats, d: int, p: int, symmetric: bool) -> int:
    """dim of {F : F M_v^T = M_v F for all v}, optionally F symmetric."""
    eye = np.eye(d, dtype=np.int64)
    if not symmetric:
        blocks = [(np.kron(m, eye) - np.kron(eye, m)) % p for m in mats]
        mat = np.vstack(blocks)
        return d * d - gfp.rank(mat, p)
    idx = _sym_pair_index(d)
    cols = []
    for (i, j), _ in sorted(idx.items(), key=lambda kv: kv[1]):
        basis = np.zeros((d, d), dtype=np.int64)
        basis[i, j] = 1
        basis[j, i] = 1
        col = np.concatenate([((gfp.matmul(m, basis, p) - gfp.matmul(basis, m.T, p)) % p).ravel()
                              for m in mats])
        cols.append(col)
    mat = np.stack(cols, axis=1)
    return len(idx) - gfp.rank(mat, p)


def bicanonical_degree(I: PolyIdeal, verify: bool = False) -> BicanonicalReport:
    """Degree of Sym^2_R omega_R plus the two Hom dimensions.

    With verify the Sym^2 relations are regenerated with r running over
    every standard monomial of positive degree instead of just the three
    variables; the ranks must agree.
    """
    qd = poly3.quotient_data(I)
    p = qd.ring.p
    if p == 2:
        raise CharTwoError("bicanonical computations need characteristic != 2")
    d = qd.colength
    mats = qd.mult_matrices
    nsym = d * (d + 1) // 2
    rel_rank = _sym2_relation_rank(mats, d, p)
    if verify:
        cache: dict = {}
        all_mats = [poly3.evaluate_at_matrices(qd.ring.monomial(e), qd, cache)
                    for e in qd.standard_monomials if sum(e) > 0]
        full_rank = _sym2_relation_rank(all_mats, d, p)
        assert full_rank == rel_rank, "algebra generators missed Sym^2 relations"
    return BicanonicalReport(
        colength=d,
        sym2_omega_deg=nsym - rel_rank,
        homsym_dim=_intertwiner_dim(mats, d, p, symmetric=True),
        hom_full_dim=_intertwiner_dim(mats, d, p, symmetric=False),
    )
