"""Tangent dimension dim Hom_S(I, S/I) by syzygies and exact linear algebra.

For a zero-dimensional ideal I with generators g_1, ..., g_r, a
homomorphism I -> S/I is an r-tuple (h_1, ..., h_r) of classes killing
every syzygy of the generators: sum_j s_j h_j = 0 in S/I.  Expressing
each h_j in the standard monomial basis and each syzygy coefficient as a
multiplication matrix turns Hom into the kernel of a block matrix over
F_p, whose dimension equals the tangent dimension of the point [S/I] of
the Hilbert scheme.

Syzygies come from the recorded S-pair reductions of a Groebner basis;
these generate the whole syzygy module.  Hom_S(I, -) does not depend on
the chosen generating set, which the second code path (syzygies lifted
to the originally given generators) makes checkable.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from . import gfp, poly3
from .mono3 import MonomialIdeal3
from .poly3 import (DEGREVLEX, MonomialOrder, Poly, PolyIdeal, PolyRing,
                    _lcm_exp, _quotient_exp, reduce_full)


@dataclass
class SyzygySet:
    """Syzygies of a fixed generator list: each row s has sum s_j g_j = 0."""

    generators_used: tuple[Poly, ...]
    syzygies: tuple[tuple[Poly, ...], ...]

    def validate(self) -> None:
        ring = self.generators_used[0].ring
        for s in self.syzygies:
            acc = ring.zero()
            for coeff, g in zip(s, self.generators_used):
                acc = acc + coeff * g
            assert acc.is_zero, "syzygy fails to annihilate the generators"


def schreyer_syzygies(basis: Sequence[Poly], order: MonomialOrder = DEGREVLEX) -> SyzygySet:
    """Syzygies of a Groebner basis from its S-pair reductions.

    For each pair i < j the reduction of the S-polynomial to zero yields
    m_ij e_i - m_ji e_j - sum q_k e_k; these generate the syzygy module.
    """
    basis = tuple(basis)
    if not basis:
        return SyzygySet(generators_used=(), syzygies=())
    ring = basis[0].ring
    lts = [g.leading(order)[0] for g in basis]
    rows = []
    for j in range(len(basis)):
        for i in range(j):
            l = _lcm_exp(lts[i], lts[j])
            mi = _quotient_exp(l, lts[i])
            mj = _quotient_exp(l, lts[j])
            s_poly = basis[i].mul_monomial(mi) - basis[j].mul_monomial(mj)
            rem, quots = reduce_full(s_poly, basis, order, track=True)
            assert rem.is_zero, "input basis is not a Groebner basis"
            row = [-q for q in quots]
            row[i] = row[i] + ring.monomial(mi)
            row[j] = row[j] - ring.monomial(mj)
            rows.append(tuple(row))
    return SyzygySet(generators_used=basis, syzygies=tuple(rows))


def syzygies(I: PolyIdeal, order: MonomialOrder = DEGREVLEX) -> SyzygySet:
    """Syzygies of the reduced Groebner basis of I."""
    return schreyer_syzygies(poly3.groebner(I, order), order)


# ---------------------------------------------------------------------------
# syzygies of an arbitrary generating set, via tracked Buchberger
# ---------------------------------------------------------------------------

def _tracked_groebner(gens: Sequence[Poly], order: MonomialOrder):
    """Reduced Groebner basis G with rows T such that G = T . gens."""
    ring = gens[0].ring
    r = len(gens)

    def unit_row(j: int, scale: int):
        row = [ring.zero()] * r
        row[j] = ring.constant(scale)
        return row

    basis, rows = [], []
    for j, g in enumerate(gens):
        if g.is_zero:
            continue
        c = gfp.inv_mod(g.leading(order)[1], ring.p)
        basis.append(g.scale(c))
        rows.append(unit_row(j, c))

    def combine(row_i, row_j, mi, mj):
        return [a.mul_monomial(mi) - b.mul_monomial(mj) for a, b in zip(row_i, row_j)]

    lts = [g.leading(order)[0] for g in basis]
    pairs = [(i, j) for j in range(len(basis)) for i in range(j)]
    while pairs:
        pairs.sort(key=lambda ij: (order.key(_lcm_exp(lts[ij[0]], lts[ij[1]])), ij))
        i, j = pairs.pop(0)
        l = _lcm_exp(lts[i], lts[j])
        if l == tuple(a + b for a, b in zip(lts[i], lts[j])):
            continue
        mi, mj = _quotient_exp(l, lts[i]), _quotient_exp(l, lts[j])
        s = basis[i].mul_monomial(mi) - basis[j].mul_monomial(mj)
        rem, quots = reduce_full(s, basis, order, track=True)
        if rem.is_zero:
            continue
        row = combine(rows[i], rows[j], mi, mj)
        for k, q in enumerate(quots):
            if not q.is_zero:
                row = [a - q * b for a, b in zip(row, rows[k])]
        c = gfp.inv_mod(rem.leading(order)[1], ring.p)
        basis.append(rem.scale(c))
        rows.append([a.scale(c) for a in row])
        lts.append(basis[-1].leading(order)[0])
        new = len(basis) - 1
        pairs.extend((k, new) for k in range(new))

    # minimalize
    keep = []
    for i, lt in enumerate(lts):
        if not any(j != i and poly3._divides(lts[j], lt) and (lts[j] != lt or j < i)
                   for j in range(len(basis))):
            keep.append(i)
    basis = [basis[i] for i in keep]
    rows = [rows[i] for i in keep]
    # tail-reduce with tracking
    changed = True
    while changed:
        changed = False
        for i in range(len(basis)):
            others = basis[:i] + basis[i + 1:]
            other_rows = rows[:i] + rows[i + 1:]
            if not others:
                continue
            rem, quots = reduce_full(basis[i], others, order, track=True)
            if rem.is_zero:
                basis.pop(i)
                rows.pop(i)
                changed = True
                break
            row = rows[i]
            for k, q in enumerate(quots):
                if not q.is_zero:
                    row = [a - q * b for a, b in zip(row, other_rows[k])]
            c = gfp.inv_mod(rem.leading(order)[1], ring.p)
            rem = rem.scale(c)
            row = [a.scale(c) for a in row]
            if rem != basis[i]:
                changed = True
            basis[i], rows[i] = rem, row
    by_lt = sorted(range(len(basis)), key=lambda i: order.key(basis[i].leading(order)[0]))
    return [basis[i] for i in by_lt], [rows[i] for i in by_lt]


def generator_syzygies(I: PolyIdeal, order: MonomialOrder = DEGREVLEX) -> SyzygySet:
    """Syzygies of the generators of I exactly as given.

    Writes the Groebner basis as G = T . F and each given generator as
    F = U . G; the syzygies of F are then the Schreyer syzygies of G
    pushed through T together with the rows of Id - U T.
    """
    gens = tuple(I.gens)
    ring = I.ring
    basis, T = _tracked_groebner(gens, order)
    schreyer = schreyer_syzygies(basis, order)
    rows = []
    for s in schreyer.syzygies:
        rows.append(tuple(sum((s[i] * T[i][j] for i in range(len(basis))), ring.zero())
                          for j in range(len(gens))))
    for j, f in enumerate(gens):
        rem, quots = reduce_full(f, basis, order, track=True)
        assert rem.is_zero
        row = [ring.zero()] * len(gens)
        row[j] = ring.one()
        for k, q in enumerate(quots):
            if not q.is_zero:
                row = [a - q * b for a, b in zip(row, T[k])]
        if any(not a.is_zero for a in row):
            rows.append(tuple(row))
    return SyzygySet(generators_used=gens, syzygies=tuple(rows))


# ---------------------------------------------------------------------------
# Hom dimension
# ---------------------------------------------------------------------------

def _hom_dim_from_syzygies(syz: SyzygySet, qd: poly3.QuotientData) -> int:
    gens = syz.generators_used
    r, d, p = len(gens), qd.colength, qd.ring.p
    if r == 0:
        return 0
    cache: dict = {}
    blocks = []
    for s in syz.syzygies:
        row = np.zeros((d, r * d), dtype=np.int64)
        for j, coeff in enumerate(s):
            if coeff.is_zero:
                continue
            row[:, j * d:(j + 1) * d] = poly3.evaluate_at_matrices(coeff, qd, cache)
        blocks.append(row)
    if not blocks:
        return r * d
    mat = np.vstack(blocks)
    return r * d - gfp.rank(mat, p)


def hom_dim(I: PolyIdeal, order: MonomialOrder = DEGREVLEX,
            use_given_generators: bool = False) -> int:
    """dim_k Hom_S(I, S/I) = dim of the tangent space at [S/I].

    Raises NotZeroDimensionalError unless S/I is finite.  With
    use_given_generators the computation runs on I.gens instead of the
    Groebner basis; the result is the same.
    """
    qd = poly3.quotient_data(I, order)
    syz = generator_syzygies(I, order) if use_given_generators else syzygies(I, order)
    return _hom_dim_from_syzygies(syz, qd)


def tangent_excess(I: PolyIdeal, order: MonomialOrder = DEGREVLEX) -> tuple[int, int, int]:
    """(colength d, dim T, excess dim T - 3d)."""
    qd = poly3.quotient_data(I, order)
    t = _hom_dim_from_syzygies(syzygies(I, order), qd)
    return qd.colength, t, t - 3 * qd.colength


# ---------------------------------------------------------------------------
# graded (per-weight) dimensions for monomial ideals
# ---------------------------------------------------------------------------

def mono_ideal(ring: PolyRing, ideal: MonomialIdeal3) -> PolyIdeal:
    return poly3.from_exponent_gens(ring, ideal.mingens)


def hom_dim_weight(ideal: MonomialIdeal3, a: tuple[int, int, int], p: int) -> int:
    """dim of the degree-a graded piece of Hom_S(I, S/I), for monomial I.

    A graded hom of weight a is determined by scalars c_j at the
    generators g_j with g_j + a in the staircase; each pairwise syzygy
    whose lcm stays outside I after the shift forces c_i = c_j.  This
    route is independent of the bounded-component count.
    """
    gens = ideal.mingens
    unknowns = [j for j, g in enumerate(gens)
                if (g[0] + a[0], g[1] + a[1], g[2] + a[2]) in ideal.staircase]
    if not unknowns:
        return 0
    col = {j: k for k, j in enumerate(unknowns)}
    rows = []
    for j in range(len(gens)):
        for i in range(j):
            l = _lcm_exp(gens[i], gens[j])
            shifted = (l[0] + a[0], l[1] + a[1], l[2] + a[2])
            if shifted not in ideal.staircase:
                continue  # both sides die in S/I, no condition
            row = [0] * len(unknowns)
            if i in col:
                row[col[i]] += 1
            if j in col:
                row[col[j]] -= 1
            if any(row):
                rows.append(row)
    if not rows:
        return len(unknowns)
    mat = gfp.as_matrix(rows, p)
    return len(unknowns) - gfp.rank(mat, p)


def mono_hom_dim(ideal: MonomialIdeal3, p: int,
                 by_weight: bool = False,
                 weights: Optional[Sequence[tuple[int, int, int]]] = None):
    """Tangent dimension of a monomial ideal via the graded linear route.

    Returns the total, or (total, {weight: dim}) when by_weight is set.
    """
    from .tancomb import weight_candidates

    if weights is None:
        weights = sorted(weight_candidates(ideal))
    detail = {}
    total = 0
    for a in weights:
        n = hom_dim_weight(ideal, a, p)
        if n:
            detail[a] = n
            total += n
    return (total, detail) if by_weight else total
