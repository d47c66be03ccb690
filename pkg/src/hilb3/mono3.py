"""Zero-dimensional monomial ideals of k[x,y,z] as staircase combinatorics.

A monomial x^a y^b z^c is identified with its exponent vector (a, b, c).
A finite-colength monomial ideal I is stored by its minimal generators
together with its staircase: the (finite, downward closed) set of exponent
vectors outside I.  The socle of S/I is spanned by the maximal staircase
elements.

Colength-d ideals are in bijection with plane partitions of d: the entry
pi[i][j] is the number of k with (i, j, k) in the staircase.  MacMahon's
product formula  prod_{i>=1} (1 - q^i)^{-i}  generates their counts and
serves as an enumeration oracle.
"""
from __future__ import annotations

import itertools
import json
import re
from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import InputError, NotZeroDimensionalError, UnitIdealError

ExponentVec = tuple[int, int, int]

ORIGIN: ExponentVec = (0, 0, 0)
UNIT_VECS: tuple[ExponentVec, ...] = ((1, 0, 0), (0, 1, 0), (0, 0, 1))
VAR_NAMES = ("x", "y", "z")


def ev_add(a: ExponentVec, b: ExponentVec) -> ExponentVec:
    return (a[0] + b[0], a[1] + b[1], a[2] + b[2])


def ev_sub(a: ExponentVec, b: ExponentVec) -> tuple[int, int, int]:
    """Componentwise difference; may be negative (a signed triple)."""
    return (a[0] - b[0], a[1] - b[1], a[2] - b[2])


def ev_leq(a: ExponentVec, b: ExponentVec) -> bool:
    """Divisibility order: a <= b componentwise."""
    return a[0] <= b[0] and a[1] <= b[1] and a[2] <= b[2]


def ev_degree(a: ExponentVec) -> int:
    return a[0] + a[1] + a[2]


def monomial_str(a: ExponentVec) -> str:
    """Render (1,0,2) as "x*z^2"; the zero vector renders as "1"."""
    parts = []
    for name, e in zip(VAR_NAMES, a):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts) if parts else "1"


@dataclass(frozen=True)
class MonomialIdeal3:
    """A monomial ideal of k[x,y,z] of finite colength.

    mingens    minimal (pairwise incomparable) generators, sorted
    staircase  exponent vectors outside the ideal
    colength   |staircase| = dim_k S/I
    """

    mingens: tuple[ExponentVec, ...]
    staircase: frozenset[ExponentVec]
    colength: int

    def __contains__(self, v: ExponentVec) -> bool:
        """Monomial membership; v must lie in N^3."""
        return min(v) >= 0 and v not in self.staircase

    def contains_signed(self, v: tuple[int, int, int]) -> bool:
        """Membership test that tolerates negative entries (always False)."""
        return v[0] >= 0 and v[1] >= 0 and v[2] >= 0 and v not in self.staircase

    @property
    def is_unit(self) -> bool:
        return self.colength == 0

    def __repr__(self) -> str:
        if self.is_unit:
            return "MonomialIdeal3(1)"
        gens = ", ".join(monomial_str(g) for g in self.mingens)
        return f"MonomialIdeal3({gens})"


#: Distinguished unit-ideal value, legal as a colon result only.
UNIT_IDEAL = MonomialIdeal3(mingens=(ORIGIN,), staircase=frozenset(), colength=0)


def _minimalize(gens: Iterable[ExponentVec]) -> list[ExponentVec]:
    gens = sorted(set(gens))
    return [g for g in gens
            if not any(h != g and ev_leq(h, g) for h in gens)]


def _mingens_from_staircase(staircase: frozenset[ExponentVec]) -> tuple[ExponentVec, ...]:
    """Minimal monomials outside a downward-closed finite set."""
    gens = []
    if not staircase:
        return (ORIGIN,)
    bounds = [max(v[i] for v in staircase) + 1 for i in range(3)]
    for v in itertools.product(range(bounds[0] + 1), range(bounds[1] + 1), range(bounds[2] + 1)):
        if v in staircase:
            continue
        if all(v[i] == 0 or (v[0] - (i == 0), v[1] - (i == 1), v[2] - (i == 2)) in staircase
               for i in range(3)):
            gens.append(v)
    return tuple(sorted(gens))


def _from_staircase(staircase: frozenset[ExponentVec]) -> MonomialIdeal3:
    return MonomialIdeal3(mingens=_mingens_from_staircase(staircase),
                          staircase=staircase, colength=len(staircase))


def from_generators(gens: Iterable[ExponentVec]) -> MonomialIdeal3:
    """Build the ideal, minimalizing generators and computing the staircase.

    Raises UnitIdealError if 1 is among the generators and
    NotZeroDimensionalError if some coordinate axis never enters the ideal.
    """
    gens = [tuple(int(e) for e in g) for g in gens]
    if not gens:
        raise InputError("empty generator list")
    if any(min(g) < 0 for g in gens):
        raise InputError(f"negative exponent in {gens}")
    if ORIGIN in gens:
        raise UnitIdealError("1 is a generator")
    gens = _minimalize(gens)
    bounds = [None, None, None]
    for g in gens:
        for i in range(3):
            if all(g[j] == 0 for j in range(3) if j != i):
                if bounds[i] is None or g[i] < bounds[i]:
                    bounds[i] = g[i]
    missing = [VAR_NAMES[i] for i in range(3) if bounds[i] is None]
    if missing:
        raise NotZeroDimensionalError(
            f"no pure power of {', '.join(missing)} among the generators")
    staircase = frozenset(
        v for v in itertools.product(range(bounds[0]), range(bounds[1]), range(bounds[2]))
        if not any(ev_leq(g, v) for g in gens))
    return MonomialIdeal3(mingens=tuple(sorted(gens)), staircase=staircase,
                          colength=len(staircase))


def socle(ideal: MonomialIdeal3) -> tuple[ExponentVec, ...]:
    """Maximal staircase elements; their number is the Gorenstein type."""
    st = ideal.staircase
    return tuple(sorted(v for v in st
                        if all(ev_add(v, e) not in st for e in UNIT_VECS)))


def colon_by_monomial(ideal: MonomialIdeal3, f: ExponentVec) -> MonomialIdeal3:
    """(I : f); its staircase is the staircase of I translated by -f.

    Returns the distinguished UNIT_IDEAL value when f lies in I.
    """
    st = frozenset(ev_sub(v, f) for v in ideal.staircase if ev_leq(f, v))
    if not st:
        return UNIT_IDEAL
    return _from_staircase(st)


def add_monomial(ideal: MonomialIdeal3, f: ExponentVec) -> MonomialIdeal3:
    """I + (f) as a monomial ideal (truncates the staircase under f)."""
    st = frozenset(v for v in ideal.staircase if not ev_leq(f, v))
    if not st:
        return UNIT_IDEAL
    return _from_staircase(st)


def is_strongly_stable(ideal: MonomialIdeal3) -> bool:
    """True iff (x_i/x_j) m stays in I for every generator m, x_j | m, i < j.

    The variable order is x > y > z.
    """
    for m in ideal.mingens:
        for j in range(3):
            if m[j] == 0:
                continue
            for i in range(j):
                shifted = list(m)
                shifted[j] -= 1
                shifted[i] += 1
                if tuple(shifted) in ideal.staircase:
                    return False
    return True


def hilbert_function(ideal: MonomialIdeal3) -> tuple[int, ...]:
    """Counts of staircase monomials by total degree, trailing zeros trimmed."""
    if ideal.is_unit:
        return ()
    top = max(ev_degree(v) for v in ideal.staircase)
    h = [0] * (top + 1)
    for v in ideal.staircase:
        h[ev_degree(v)] += 1
    return tuple(h)


def macmahon_series(n: int) -> list[int]:
    """Coefficients of q^0..q^n of prod_{i>=1} (1-q^i)^(-i)."""
    if n < 0:
        raise InputError("series order must be >= 0")
    c = [1] + [0] * n
    for i in range(1, n + 1):
        for _ in range(i):
            for k in range(i, n + 1):
                c[k] += c[k - i]
    return c


def _partitions_bounded(total: int, bound: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    """Nonincreasing positive tuples summing to `total`, pointwise <= bound."""
    def rec(remaining: int, maxpart: int, j: int) -> Iterator[tuple[int, ...]]:
        if remaining == 0:
            yield ()
            return
        if j >= len(bound):
            return
        for v in range(min(maxpart, bound[j], remaining), 0, -1):
            for rest in rec(remaining - v, v, j + 1):
                yield (v,) + rest
    yield from rec(total, total, 0)


def plane_partitions(d: int) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Plane partitions of d as tuples of rows, largest row readings first.

    Rows are nonincreasing, and each row is pointwise bounded by the one
    above it, so entries are nonincreasing along rows and columns.
    """
    def rec(remaining: int, bound: tuple[int, ...]) -> Iterator[tuple]:
        if remaining == 0:
            yield ()
            return
        for k in range(min(remaining, sum(bound)), 0, -1):
            for row in _partitions_bounded(k, bound):
                for rest in rec(remaining - k, row):
                    yield (row,) + rest
    yield from rec(d, tuple([d] * d))


def ideal_from_plane_partition(pp: tuple[tuple[int, ...], ...]) -> MonomialIdeal3:
    staircase = frozenset((i, j, k)
                          for i, row in enumerate(pp)
                          for j, h in enumerate(row)
                          for k in range(h))
    return _from_staircase(staircase)


def enumerate_ideals(d: int) -> Iterator[MonomialIdeal3]:
    """All colength-d monomial ideals, one per plane partition of d."""
    if d < 1:
        raise InputError("colength must be >= 1")
    for pp in plane_partitions(d):
        yield ideal_from_plane_partition(pp)


def enumerate_planar_ideals(d: int) -> Iterator[MonomialIdeal3]:
    """Colength-d monomial ideals of k[x,y], embedded with z as a generator.

    One per ordinary partition of d: the staircase lies in the z = 0
    plane, so every ideal contains z.
    """
    if d < 1:
        raise InputError("colength must be >= 1")
    for row in _partitions_bounded(d, tuple([d] * d)):
        staircase = frozenset((i, j, 0) for i, h in enumerate(row) for j in range(h))
        yield _from_staircase(staircase)


# ---------------------------------------------------------------------------
# text / JSON input formats
# ---------------------------------------------------------------------------

_MONO_TOKEN = re.compile(r"\s*(?:([xyz])(?:\s*\^\s*(\d+))?|(\*)|(1))\s*")


def parse_monomial(text: str) -> ExponentVec:
    """Parse a single monomial like "x^2", "x*y", "xy" or "1"."""
    exps = [0, 0, 0]
    pos = 0
    seen = False
    while pos < len(text):
        m = _MONO_TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise InputError(f"bad monomial {text!r} at position {pos}")
        var, power, _star, one = m.group(1), m.group(2), m.group(3), m.group(4)
        if var:
            exps[VAR_NAMES.index(var)] += int(power) if power else 1
            seen = True
        elif one:
            seen = True
        pos = m.end()
    if not seen:
        raise InputError(f"empty monomial in {text!r}")
    return tuple(exps)


def parse_monomial_ideal(text: str) -> MonomialIdeal3:
    """Parse "x^2, x*y, x*z, y^2, y*z, z^3" into an ideal."""
    parts = [p for p in text.split(",") if p.strip()]
    if not parts:
        raise InputError("no generators given")
    return from_generators(parse_monomial(p) for p in parts)


def parse_exponent_json(text: str) -> MonomialIdeal3:
    """Parse the JSON exponent-triple form [[2,0,0],[1,1,0],...]."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"bad JSON: {exc}") from exc
    if (not isinstance(data, list) or not data
            or not all(isinstance(g, list) and len(g) == 3
                       and all(isinstance(e, int) and e >= 0 for e in g) for g in data)):
        raise InputError("expected a nonempty list of 3 nonnegative integers each")
    return from_generators(tuple(g) for g in data)
