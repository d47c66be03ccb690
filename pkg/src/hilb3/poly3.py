"""Sparse polynomials over F_p in x, y, z and Buchberger Groebner bases.

Everything an ideal-theoretic computation downstream needs lives here:
monomial orders (degrevlex, lex, and a block order with an auxiliary
elimination variable t), reduced Groebner bases, normal forms, ideal
sum/product/intersection/colon, and quotient-ring data (standard
monomial basis plus the three commuting multiplication matrices) for
zero-dimensional ideals.

Coefficients are integers in [0, p) for a fixed prime p carried by the
ring.  Buchberger runs with the coprime and chain criteria and a normal
(smallest-lcm-first) selection strategy; reduced bases are unique for a
fixed order, so ideal equality is Groebner-basis equality.
"""
from __future__ import annotations

import heapq
import re
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

import numpy as np

from .errors import InputError, NotZeroDimensionalError
from .gfp import inv_mod

Exponent = tuple[int, ...]


# ---------------------------------------------------------------------------
# monomial orders
# ---------------------------------------------------------------------------

class MonomialOrder:
    """A monomial order given by a sort key; larger key = larger monomial."""

    def __init__(self, name: str, key):
        self.name = name
        self.key = key

    def __repr__(self):
        return f"MonomialOrder({self.name})"


def _degrevlex_key(e: Exponent):
    return (sum(e), tuple(-e[i] for i in range(len(e) - 1, -1, -1)))


def _lex_key(e: Exponent):
    return e


def _elim_last_key(e: Exponent):
    # block order: the last variable dominates, degrevlex on the rest
    return (e[-1], _degrevlex_key(e[:-1]))


DEGREVLEX = MonomialOrder("degrevlex", _degrevlex_key)
LEX = MonomialOrder("lex", _lex_key)
ELIM_LAST = MonomialOrder("elim-last", _elim_last_key)


# ---------------------------------------------------------------------------
# rings and polynomials
# ---------------------------------------------------------------------------

class PolyRing:
    """F_p[names]; equality is by prime and variable names."""

    def __init__(self, p: int, names: Sequence[str] = ("x", "y", "z")):
        self.p = int(p)
        self.names = tuple(names)
        self.nvars = len(self.names)

    def __eq__(self, other):
        return isinstance(other, PolyRing) and (self.p, self.names) == (other.p, other.names)

    def __hash__(self):
        return hash((self.p, self.names))

    def __repr__(self):
        return f"PolyRing(p={self.p}, vars={','.join(self.names)})"

    def poly(self, terms: dict[Exponent, int]) -> "Poly":
        p = self.p
        clean = {}
        for e, c in terms.items():
            c %= p
            if c:
                clean[tuple(e)] = c
        return Poly(self, clean)

    def zero(self) -> "Poly":
        return Poly(self, {})

    def one(self) -> "Poly":
        return Poly(self, {(0,) * self.nvars: 1})

    def constant(self, c: int) -> "Poly":
        return self.poly({(0,) * self.nvars: c})

    def var(self, i: int) -> "Poly":
        e = [0] * self.nvars
        e[i] = 1
        return Poly(self, {tuple(e): 1})

    def monomial(self, e: Exponent, c: int = 1) -> "Poly":
        return self.poly({tuple(e): c})

    def with_elim_var(self) -> "PolyRing":
        return PolyRing(self.p, self.names + ("t",))


class Poly:
    """Immutable sparse polynomial: exponent tuple -> coefficient in (0, p)."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: PolyRing, terms: dict[Exponent, int]):
        self.ring = ring
        self.terms = terms

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        return (isinstance(other, Poly) and self.ring == other.ring
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.ring, frozenset(self.terms.items())))

    def __add__(self, other: "Poly") -> "Poly":
        p = self.ring.p
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = (out.get(e, 0) + c) % p
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return Poly(self.ring, out)

    def __neg__(self) -> "Poly":
        p = self.ring.p
        return Poly(self.ring, {e: p - c for e, c in self.terms.items()})

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other: "Poly") -> "Poly":
        p = self.ring.p
        out: dict[Exponent, int] = {}
        small, big = (self.terms, other.terms)
        if len(small) > len(big):
            small, big = big, small
        for e1, c1 in small.items():
            for e2, c2 in big.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                v = (out.get(e, 0) + c1 * c2) % p
                if v:
                    out[e] = v
                else:
                    out.pop(e, None)
        return Poly(self.ring, out)

    def scale(self, c: int) -> "Poly":
        c %= self.ring.p
        if c == 0:
            return self.ring.zero()
        p = self.ring.p
        return Poly(self.ring, {e: co * c % p for e, co in self.terms.items()})

    def mul_monomial(self, e: Exponent, c: int = 1) -> "Poly":
        p = self.ring.p
        c %= p
        return Poly(self.ring, {tuple(a + b for a, b in zip(e, te)): tc * c % p
                                for te, tc in self.terms.items()})

    def leading(self, order: MonomialOrder) -> tuple[Exponent, int]:
        e = max(self.terms, key=order.key)
        return e, self.terms[e]

    def monic(self, order: MonomialOrder) -> "Poly":
        _, c = self.leading(order)
        return self.scale(inv_mod(c, self.ring.p)) if c != 1 else self

    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def __repr__(self):
        return f"Poly({poly_str(self)})"


def poly_str(f: Poly, names: Optional[Sequence[str]] = None) -> str:
    """Deterministic human-readable form, degrevlex-descending terms."""
    if f.is_zero:
        return "0"
    names = names or f.ring.names
    p = f.ring.p
    parts = []
    for e in sorted(f.terms, key=_degrevlex_key, reverse=True):
        c = f.terms[e]
        sign = "+"
        if c > p // 2:  # print balanced representatives for readability
            sign, c = "-", p - c
        factors = []
        for n, k in zip(names, e):
            if k == 1:
                factors.append(n)
            elif k > 1:
                factors.append(f"{n}^{k}")
        body = "*".join(factors)
        if not body:
            body = str(c)
        elif c != 1:
            body = f"{c}*{body}"
        parts.append((sign, body))
    out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


# ---------------------------------------------------------------------------
# parsing:  "x^2 - y*z",  "z^3 + 2*x",  "-3"
# ---------------------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z]+)|(\^)|(\*)|(\+)|(-))")


def parse_poly(text: str, ring: PolyRing, names: Optional[Sequence[str]] = None) -> Poly:
    """Parse integer-coefficient polynomials in the given variable names."""
    names = tuple(names or ring.names)
    if len(names) != ring.nvars:
        raise InputError("variable name list does not match the ring")
    pos, n = 0, len(text)
    terms: dict[Exponent, int] = {}
    sign = 1
    cur_coeff: Optional[int] = None
    cur_exp: Optional[list[int]] = None
    prev = "start"  # start | sign | star | factor

    def flush():
        nonlocal sign, cur_coeff, cur_exp
        c = sign * (1 if cur_coeff is None else cur_coeff)
        e = tuple(cur_exp) if cur_exp is not None else (0,) * ring.nvars
        terms[e] = (terms.get(e, 0) + c) % ring.p
        sign, cur_coeff, cur_exp = 1, None, None

    while pos < n:
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            if text[pos:].strip():
                raise InputError(f"bad character in {text!r} at position {pos}")
            break
        pos = m.end()
        num, var, caret, star, plus, minus = m.groups()
        if plus or minus:
            if prev == "star":
                raise InputError(f"sign after '*' in {text!r}")
            if prev == "factor":
                flush()
            if minus:
                sign = -sign
            prev = "sign"
        elif star:
            if prev != "factor":
                raise InputError(f"misplaced '*' in {text!r}")
            prev = "star"
        elif num:
            if prev == "factor":
                raise InputError(f"missing '*' before {num!r} in {text!r}")
            cur_coeff = int(num) if cur_coeff is None else cur_coeff * int(num)
            prev = "factor"
        elif var:
            # a run like "xy" is implicit multiplication of single letters
            letters = [var] if var in names else list(var)
            if any(ch not in names for ch in letters):
                raise InputError(f"unknown variable {var!r} in {text!r}")
            if cur_exp is None:
                cur_exp = [0] * ring.nvars
            power = 1  # a trailing ^k applies to the last letter of the run
            m2 = _TOKEN.match(text, pos)
            if m2 and m2.group(3):  # caret
                pos = m2.end()
                m3 = _TOKEN.match(text, pos)
                if not m3 or not m3.group(1):
                    raise InputError(f"missing exponent in {text!r}")
                power = int(m3.group(1))
                pos = m3.end()
            for ch in letters[:-1]:
                cur_exp[names.index(ch)] += 1
            cur_exp[names.index(letters[-1])] += power
            prev = "factor"
        elif caret:
            raise InputError(f"misplaced '^' in {text!r}")
    if prev != "factor":
        raise InputError(f"incomplete polynomial in {text!r}")
    flush()
    return ring.poly(terms)


# ---------------------------------------------------------------------------
# division, S-polynomials, Buchberger
# ---------------------------------------------------------------------------

def _divides(a: Exponent, b: Exponent) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _quotient_exp(a: Exponent, b: Exponent) -> Exponent:
    return tuple(x - y for x, y in zip(a, b))


def _lcm_exp(a: Exponent, b: Exponent) -> Exponent:
    return tuple(max(x, y) for x, y in zip(a, b))


def reduce_full(f: Poly, basis: Sequence[Poly], order: MonomialOrder,
                track: bool = False):
    """Full division of f by the (monic) basis.

    Returns (remainder, quotients) where quotients[i] is a Poly with
    f = sum quotients[i] * basis[i] + remainder; quotients is None unless
    track is set.  No remainder term is divisible by any basis leading
    term.
    """
    ring = f.ring
    p = ring.p
    lts = [g.leading(order)[0] for g in basis]
    work = dict(f.terms)
    remainder: dict[Exponent, int] = {}
    quotients = [dict() for _ in basis] if track else None
    key = order.key
    while work:
        e = max(work, key=key)
        c = work.pop(e)
        for i, lt in enumerate(lts):
            if _divides(lt, e):
                q = _quotient_exp(e, lt)
                if track:
                    quotients[i][q] = (quotients[i].get(q, 0) + c) % p
                for te, tc in basis[i].terms.items():
                    if te == lt:
                        continue
                    we = tuple(a + b for a, b in zip(q, te))
                    v = (work.get(we, 0) - c * tc) % p
                    if v:
                        work[we] = v
                    else:
                        work.pop(we, None)
                break
        else:
            remainder[e] = c
    rem = Poly(ring, remainder)
    if track:
        return rem, [ring.poly(q) for q in quotients]
    return rem, None


def _s_poly(f: Poly, g: Poly, order: MonomialOrder) -> Poly:
    """S-polynomial of two monic polynomials."""
    lf = f.leading(order)[0]
    lg = g.leading(order)[0]
    l = _lcm_exp(lf, lg)
    return f.mul_monomial(_quotient_exp(l, lf)) - g.mul_monomial(_quotient_exp(l, lg))


def buchberger(gens: Sequence[Poly], order: MonomialOrder) -> list[Poly]:
    """A (non-reduced) Groebner basis, deterministic.

    Pairs are processed smallest lcm first; the coprime criterion and the
    chain criterion prune reductions.
    """
    basis = [g.monic(order) for g in gens if not g.is_zero]
    if not basis:
        return []
    lts = [g.leading(order)[0] for g in basis]
    pending: set[tuple[int, int]] = set()
    heap: list = []

    def push(i: int, j: int):
        l = _lcm_exp(lts[i], lts[j])
        heapq.heappush(heap, (order.key(l), i, j))
        pending.add((i, j))

    for j in range(len(basis)):
        for i in range(j):
            push(i, j)

    while heap:
        _, i, j = heapq.heappop(heap)
        if (i, j) not in pending:
            continue
        pending.discard((i, j))
        l = _lcm_exp(lts[i], lts[j])
        if l == tuple(a + b for a, b in zip(lts[i], lts[j])):
            continue  # coprime leading terms
        skip = False
        for k in range(len(basis)):
            if k in (i, j):
                continue
            if _divides(lts[k], l) \
                    and (min(i, k), max(i, k)) not in pending \
                    and (min(j, k), max(j, k)) not in pending:
                skip = True
                break
        if skip:
            continue
        rem, _ = reduce_full(_s_poly(basis[i], basis[j], order), basis, order)
        if rem.is_zero:
            continue
        rem = rem.monic(order)
        basis.append(rem)
        lts.append(rem.leading(order)[0])
        new = len(basis) - 1
        for k in range(new):
            push(k, new)
    return basis


def reduce_basis(basis: Sequence[Poly], order: MonomialOrder) -> tuple[Poly, ...]:
    """The reduced Groebner basis: minimal, interreduced, monic, sorted."""
    basis = [g.monic(order) for g in basis if not g.is_zero]
    # minimalize: drop any element whose leading term another one divides
    lts = [g.leading(order)[0] for g in basis]
    keep = []
    for i, lt in enumerate(lts):
        if not any(j != i and _divides(lts[j], lt) and (lts[j] != lt or j < i)
                   for j in range(len(basis))):
            keep.append(basis[i])
    # tail-reduce each against the others until stable
    changed = True
    while changed:
        changed = False
        for i in range(len(keep)):
            others = keep[:i] + keep[i + 1:]
            if not others:
                continue
            rem, _ = reduce_full(keep[i], others, order)
            if rem.is_zero:
                keep.pop(i)
                changed = True
                break
            rem = rem.monic(order)
            if rem != keep[i]:
                keep[i] = rem
                changed = True
    return tuple(sorted(keep, key=lambda g: order.key(g.leading(order)[0])))


# ---------------------------------------------------------------------------
# ideals
# ---------------------------------------------------------------------------

@dataclass
class PolyIdeal:
    """A finitely generated ideal with cached reduced Groebner bases."""

    ring: PolyRing
    gens: tuple[Poly, ...]
    _gb: dict[str, tuple[Poly, ...]] = field(default_factory=dict, repr=False)

    def __eq__(self, other):
        if not isinstance(other, PolyIdeal) or self.ring != other.ring:
            return NotImplemented
        return equal_ideals(self, other)

    def __repr__(self):
        return "PolyIdeal(" + ", ".join(poly_str(g) for g in self.gens) + ")"


def ideal(ring: PolyRing, gens: Iterable[Poly]) -> PolyIdeal:
    gens = tuple(g for g in gens if not g.is_zero)
    return PolyIdeal(ring=ring, gens=gens)


def parse_ideal(text: str, ring: PolyRing, names: Optional[Sequence[str]] = None) -> PolyIdeal:
    """Comma-separated polynomial list."""
    parts = [s for s in text.split(",") if s.strip()]
    if not parts:
        raise InputError("no generators given")
    return ideal(ring, (parse_poly(s, ring, names) for s in parts))


def from_exponent_gens(ring: PolyRing, gens: Iterable[Exponent]) -> PolyIdeal:
    """Monomial ideal given by exponent vectors (bridge from mono3)."""
    return ideal(ring, (ring.monomial(tuple(g) + (0,) * (ring.nvars - len(g)))
                        for g in gens))


def groebner(I: PolyIdeal, order: MonomialOrder = DEGREVLEX) -> tuple[Poly, ...]:
    """Reduced Groebner basis, cached per order."""
    cached = I._gb.get(order.name)
    if cached is None:
        cached = reduce_basis(buchberger(I.gens, order), order)
        I._gb[order.name] = cached
    return cached


def normal_form(f: Poly, I: PolyIdeal, order: MonomialOrder = DEGREVLEX) -> Poly:
    rem, _ = reduce_full(f, groebner(I, order), order)
    return rem


def contains(I: PolyIdeal, f: Poly) -> bool:
    return normal_form(f, I).is_zero


def equal_ideals(I: PolyIdeal, J: PolyIdeal) -> bool:
    return groebner(I) == groebner(J)


def is_unit_ideal(I: PolyIdeal) -> bool:
    gb = groebner(I)
    return len(gb) == 1 and gb[0] == I.ring.one()


def ideal_sum(I: PolyIdeal, J: PolyIdeal) -> PolyIdeal:
    return ideal(I.ring, I.gens + J.gens)


def multiply_by_poly(I: PolyIdeal, f: Poly) -> PolyIdeal:
    return ideal(I.ring, tuple(g * f for g in I.gens))


# ---------------------------------------------------------------------------
# intersection and colon via the elimination variable
# ---------------------------------------------------------------------------

def _lift(f: Poly, ring4: PolyRing) -> Poly:
    return Poly(ring4, {e + (0,): c for e, c in f.terms.items()})


def _project(f: Poly, ring: PolyRing) -> Poly:
    return Poly(ring, {e[:-1]: c for e, c in f.terms.items()})


def intersect(I: PolyIdeal, J: PolyIdeal) -> PolyIdeal:
    """I cap J = (t I + (1-t) J) cap k[x,y,z], eliminating t."""
    ring = I.ring
    ring4 = ring.with_elim_var()
    t = ring4.var(ring4.nvars - 1)
    one_minus_t = ring4.one() - t
    gens4 = [t * _lift(f, ring4) for f in I.gens]
    gens4 += [one_minus_t * _lift(g, ring4) for g in J.gens]
    gb = reduce_basis(buchberger(gens4, ELIM_LAST), ELIM_LAST)
    kept = [_project(g, ring) for g in gb if all(e[-1] == 0 for e in g.terms)]
    return ideal(ring, kept)


def divide_exact(f: Poly, g: Poly, order: MonomialOrder = DEGREVLEX) -> Poly:
    """f / g for f in the principal ideal (g)."""
    rem, quots = reduce_full(f, [g.monic(order)], order, track=True)
    if not rem.is_zero:
        raise InputError("polynomial is not divisible")
    lc = g.leading(order)[1]
    return quots[0].scale(inv_mod(lc, f.ring.p))


def colon_by_poly(I: PolyIdeal, f: Poly) -> PolyIdeal:
    """(I : f) = (I cap (f)) / f."""
    if f.is_zero:
        raise InputError("colon by zero")
    meet = intersect(I, ideal(I.ring, (f,)))
    return ideal(I.ring, tuple(divide_exact(g, f) for g in meet.gens))


def colon(I: PolyIdeal, J) -> PolyIdeal:
    """(I : J) for J an ideal or a single polynomial."""
    if isinstance(J, Poly):
        return colon_by_poly(I, J)
    result: Optional[PolyIdeal] = None
    for f in J.gens:
        step = colon_by_poly(I, f)
        result = step if result is None else intersect(result, step)
    if result is None:  # J = (0); (I : 0) = (1)
        return ideal(I.ring, (I.ring.one(),))
    return result


# ---------------------------------------------------------------------------
# quotient-ring data
# ---------------------------------------------------------------------------

@dataclass
class QuotientData:
    """Finite quotient S/I: standard monomials and multiplication matrices.

    standard_monomials are sorted ascending in the order used (the first
    one is 1).  mult_matrices[v] is the matrix of multiplication by the
    v-th variable: column j holds the coordinates of NF(x_v * m_j).
    """

    ring: PolyRing
    order: MonomialOrder
    groebner_basis: tuple[Poly, ...]
    standard_monomials: tuple[Exponent, ...]
    colength: int
    mult_matrices: tuple[np.ndarray, ...]
    index: dict[Exponent, int]

    def coords(self, f: Poly) -> np.ndarray:
        """Coordinates of NF(f) in the standard monomial basis."""
        nf, _ = reduce_full(f, self.groebner_basis, self.order)
        vec = np.zeros(self.colength, dtype=np.int64)
        for e, c in nf.terms.items():
            vec[self.index[e]] = c
        return vec


def standard_monomials(gb: Sequence[Poly], order: MonomialOrder) -> list[Exponent]:
    """Monomials not divisible by any leading term; raises if infinite."""
    ring = gb[0].ring if gb else None
    if not gb:
        raise NotZeroDimensionalError("the zero ideal is not zero-dimensional")
    n = ring.nvars
    lts = [g.leading(order)[0] for g in gb]
    for i in range(n):
        if not any(all(lt[j] == 0 for j in range(n) if j != i) for lt in lts):
            raise NotZeroDimensionalError(
                f"no pure power of {ring.names[i]} among the leading terms")
    found: set[Exponent] = set()
    origin = (0,) * n
    if not any(_divides(lt, origin) for lt in lts):
        found.add(origin)
    frontier = [origin] if found else []
    while frontier:
        m = frontier.pop()
        for i in range(n):
            w = list(m)
            w[i] += 1
            w = tuple(w)
            if w in found or any(_divides(lt, w) for lt in lts):
                continue
            found.add(w)
            frontier.append(w)
    return sorted(found, key=order.key)


def quotient_data(I: PolyIdeal, order: MonomialOrder = DEGREVLEX) -> QuotientData:
    gb = groebner(I, order)
    if not gb:
        raise NotZeroDimensionalError("the zero ideal is not zero-dimensional")
    basis = standard_monomials(gb, order)
    d = len(basis)
    index = {m: i for i, m in enumerate(basis)}
    ring = I.ring
    mats = []
    for v in range(ring.nvars):
        mat = np.zeros((d, d), dtype=np.int64)
        for j, m in enumerate(basis):
            shifted = list(m)
            shifted[v] += 1
            shifted = tuple(shifted)
            if shifted in index:
                mat[index[shifted], j] = 1
                continue
            nf, _ = reduce_full(ring.monomial(shifted), gb, order)
            for e, c in nf.terms.items():
                mat[index[e], j] = c
        mats.append(mat)
    return QuotientData(ring=ring, order=order, groebner_basis=gb,
                        standard_monomials=tuple(basis),
                        colength=d, mult_matrices=tuple(mats), index=index)


def quotient_hilbert_function(qd: QuotientData) -> tuple[int, ...]:
    """Standard monomials counted by total degree (the Hilbert function
    of S/I whenever I is homogeneous)."""
    if qd.colength == 0:
        return ()
    top = max(sum(m) for m in qd.standard_monomials)
    h = [0] * (top + 1)
    for m in qd.standard_monomials:
        h[sum(m)] += 1
    return tuple(h)


def evaluate_at_matrices(f: Poly, qd: QuotientData,
                         cache: Optional[dict[Exponent, np.ndarray]] = None) -> np.ndarray:
    """Matrix of multiplication by f on S/I, via the variable matrices."""
    from .gfp import matmul

    p = qd.ring.p
    d = qd.colength
    if cache is None:
        cache = {}
    origin = (0,) * qd.ring.nvars
    if origin not in cache:
        cache[origin] = np.eye(d, dtype=np.int64)

    def mono_matrix(e: Exponent) -> np.ndarray:
        if e in cache:
            return cache[e]
        i = next(i for i in range(len(e)) if e[i] > 0)
        prev = list(e)
        prev[i] -= 1
        m = matmul(qd.mult_matrices[i], mono_matrix(tuple(prev)), p)
        cache[e] = m
        return m

    out = np.zeros((d, d), dtype=np.int64)
    for e, c in f.terms.items():
        out = (out + c * mono_matrix(e)) % p
    return out
