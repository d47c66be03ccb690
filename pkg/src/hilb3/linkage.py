"""Links of zero-dimensional ideals by length-3 regular sequences.

For a regular sequence alpha contained in I, the link is (alpha : I).
Valid links satisfy the double-link identity I = (alpha : (alpha : I))
and colength additivity d_source + d_target = d_alpha, and they preserve
the tangent excess dim T - 3d; a chain verifier asserts all three.  A
parity report flags ideals with dim T != d (mod 2), which cannot lie in
the linkage class of any homogeneous ideal (in particular are not
licci).

A small catalog provides the explicit link families connecting the
singular tangent-minimal monomial ideals (tripods I^tri(a,b,c) and the
strongly stable J(a,b,c)) to the square of the maximal ideal.  The
catalog targets are the computed colon ideals; see the family builders
for the exact sequences.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Sequence

from . import poly3, tanlin
from .errors import (ExcessMismatchError, InputError, NotContainedError,
                     NotRegularError, NotZeroDimensionalError)
from .poly3 import Poly, PolyIdeal, PolyRing


@dataclass(frozen=True)
class RegularSequence:
    """Three polynomials cutting out a finite scheme (hence regular)."""

    alpha: tuple[Poly, Poly, Poly]

    def as_ideal(self) -> PolyIdeal:
        return poly3.ideal(self.alpha[0].ring, self.alpha)


@dataclass
class LinkStep:
    source: PolyIdeal
    alpha: RegularSequence
    target: PolyIdeal
    colengths: tuple[int, int, int]  # (d_source, d_alpha, d_target)


def regular_sequence(polys: Sequence[Poly]) -> RegularSequence:
    if len(polys) != 3:
        raise InputError("a linking sequence must have exactly three entries")
    return RegularSequence(alpha=tuple(polys))


def link(I: PolyIdeal, alpha: RegularSequence) -> LinkStep:
    """The link (alpha : I), validated.

    Checks alpha is contained in I and cuts out a finite scheme, then
    verifies colength additivity and the double-link identity.
    """
    for f in alpha.alpha:
        if not poly3.contains(I, f):
            raise NotContainedError(f"{poly3.poly_str(f)} does not lie in the ideal")
    A = alpha.as_ideal()
    try:
        d_alpha = poly3.quotient_data(A).colength
    except NotZeroDimensionalError as exc:
        raise NotRegularError(f"the sequence does not cut out a finite scheme: {exc}") from exc
    d_source = poly3.quotient_data(I).colength
    target = poly3.colon(A, I)
    d_target = poly3.quotient_data(target).colength
    # both are theorems for valid links; a failure means a broken engine
    assert d_source + d_target == d_alpha, \
        f"colength additivity fails: {d_source} + {d_target} != {d_alpha}"
    assert poly3.equal_ideals(poly3.colon(A, target), I), \
        "double-link identity fails"
    return LinkStep(source=I, alpha=alpha, target=target,
                    colengths=(d_source, d_alpha, d_target))


@dataclass
class ChainReport:
    steps: list[LinkStep]
    excesses: list[tuple[int, int]]  # (excess at source, excess at target)
    canonical_degrees: list[int]     # dim (alpha : I)/(alpha) per step

    @property
    def excess(self) -> int | None:
        return self.excesses[0][0] if self.excesses else None


def verify_link_chain(chain: Sequence[tuple[PolyIdeal, RegularSequence]]) -> ChainReport:
    """Validate every step and assert the tangent excess is constant.

    Consecutive steps must satisfy target_i = source_{i+1}.  The tangent
    excess dim T - 3d is computed at both ends of every step; a mismatch
    is a hard failure.  The canonical-module degree dim (alpha:I)/(alpha)
    is recorded per step (it equals the source colength).
    """
    steps: list[LinkStep] = []
    excesses: list[tuple[int, int]] = []
    degrees: list[int] = []
    prev_target: PolyIdeal | None = None
    for I, alpha in chain:
        if prev_target is not None and not poly3.equal_ideals(prev_target, I):
            raise InputError("chain steps do not compose: target != next source")
        step = link(I, alpha)
        d_src, t_src, e_src = tanlin.tangent_excess(step.source)
        d_tgt, t_tgt, e_tgt = tanlin.tangent_excess(step.target)
        if e_src != e_tgt:
            raise ExcessMismatchError(
                f"excess {e_src} at source vs {e_tgt} at target "
                f"(d={d_src}->{d_tgt}, T={t_src}->{t_tgt})")
        steps.append(step)
        excesses.append((e_src, e_tgt))
        degrees.append(step.colengths[1] - step.colengths[2])
        prev_target = step.target
    return ChainReport(steps=steps, excesses=excesses, canonical_degrees=degrees)


@dataclass
class ParityReport:
    colength: int
    tangent_dim: int
    obstructed: bool
    verdict: str


def parity_report(I: PolyIdeal) -> ParityReport:
    """Flag dim T != d (mod 2): no homogeneous linkage class, not licci."""
    d, t, _ = tanlin.tangent_excess(I)
    obstructed = (t - d) % 2 != 0
    if obstructed:
        verdict = ("dim T and the colength differ mod 2: the ideal is not in "
                   "the linkage class of any homogeneous ideal; in particular "
                   "it is not licci")
    else:
        verdict = "no parity obstruction"
    return ParityReport(colength=d, tangent_dim=t, obstructed=obstructed,
                        verdict=verdict)


# ---------------------------------------------------------------------------
# catalog: explicit families linking tangent-minimal singular ideals to m^2
# ---------------------------------------------------------------------------

def tripod(ring: PolyRing, a: int, b: int, c: int) -> PolyIdeal:
    """I^tri(a,b,c) = (x^a, y^b, z^c, xy, xz, yz), a, b, c >= 2."""
    return poly3.parse_ideal(f"x^{a}, y^{b}, z^{c}, x*y, x*z, y*z", ring)


def j_ideal(ring: PolyRing, a: int, b: int, c: int) -> PolyIdeal:
    """J(a,b,c) = (x^2, xy, y^2, xz^a, yz^b, z^(c+1)), 1 <= a <= b <= c."""
    return poly3.parse_ideal(f"x^2, x*y, y^2, x*z^{a}, y*z^{b}, z^{c+1}", ring)


def maximal_square(ring: PolyRing) -> PolyIdeal:
    return poly3.parse_ideal("x^2, x*y, x*z, y^2, y*z, z^2", ring)


def family_tripod22_to_m2(ring: PolyRing, c: int):
    """(xz, xy+yz, x^2+y^2+z^c) links I^tri(2,2,c) to m^2."""
    alpha = regular_sequence(
        poly3.parse_ideal(f"x*z, x*y + y*z, x^2 + y^2 + z^{c}", ring).gens)
    return tripod(ring, 2, 2, c), alpha, maximal_square(ring)


def family_tripod_to_tripod22(ring: PolyRing, a: int, b: int, c: int):
    """(xy, xz+yz, x^a+y^b+z^c) links I^tri(a,b,c) to I^tri(2,2,c)."""
    alpha = regular_sequence(
        poly3.parse_ideal(f"x*y, x*z + y*z, x^{a} + y^{b} + z^{c}", ring).gens)
    return tripod(ring, a, b, c), alpha, tripod(ring, 2, 2, c)


def family_j1_to_tripod(ring: PolyRing, b: int, c: int):
    """(xz, y^2, z^(c+1)+x^2) links J(1,b,c) to I^tri(2,2,c-b+2)."""
    alpha = regular_sequence(
        poly3.parse_ideal(f"x*z, y^2, z^{c + 1} + x^2", ring).gens)
    return j_ideal(ring, 1, b, c), alpha, tripod(ring, 2, 2, c - b + 2)


def family_jabb_to_j1(ring: PolyRing, a: int, b: int):
    """(x^2, y^2, x^2+z^(b+1)) links J(a,b,b) to J(1, b-a+1, b)."""
    alpha = regular_sequence(
        poly3.parse_ideal(f"x^2, y^2, x^2 + z^{b + 1}", ring).gens)
    return j_ideal(ring, a, b, b), alpha, j_ideal(ring, 1, b - a + 1, b)


def borel_p3_instance(ring: PolyRing):
    """(xy, xz+y^3, x^2+z^3) links (x^2,xy,xz,y^3,(yz)^2,z^3) to I^tri(2,2,3)."""
    src = poly3.parse_ideal("x^2, x*y, x*z, y^3, y^2*z^2, z^3", ring)
    alpha = regular_sequence(
        poly3.parse_ideal("x*y, x*z + y^3, x^2 + z^3", ring).gens)
    return src, alpha, tripod(ring, 2, 2, 3)


# ---------------------------------------------------------------------------
# JSON chain input: [{"ideal": "...", "alpha": ["...", "...", "..."]}]
# ---------------------------------------------------------------------------

def parse_chain_json(text: str, ring: PolyRing) -> list[tuple[PolyIdeal, RegularSequence]]:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"bad JSON: {exc}") from exc
    if not isinstance(data, list):
        raise InputError("chain file must hold a JSON list of steps")
    chain = []
    for entry in data:
        if not isinstance(entry, dict) or "ideal" not in entry or "alpha" not in entry:
            raise InputError("each step needs 'ideal' and 'alpha' fields")
        alpha = entry["alpha"]
        if not isinstance(alpha, list) or len(alpha) != 3:
            raise InputError("'alpha' must list exactly three polynomials")
        I = poly3.parse_ideal(str(entry["ideal"]), ring)
        seq = regular_sequence(tuple(poly3.parse_poly(str(s), ring) for s in alpha))
        chain.append((I, seq))
    return chain
