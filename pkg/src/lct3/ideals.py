"""Homogeneous-ideal calculus: Groebner bases, membership, sum, product,
power, intersection, quotient, saturation, elimination, equality.

The Buchberger core works on integer-coefficient "primitive" polynomials
(dict exponent -> int, content 1, positive leading coefficient) so that
reductions stay in exact integer arithmetic; results are converted back to
monic Fraction polynomials.  Pair selection is by ascending lcm degree with
the product criterion and the chain criterion (justified only by pairs
treated strictly earlier, so discards are well-founded).
"""

from __future__ import annotations

import heapq
import math
from fractions import Fraction
from functools import reduce as _fold

from .polynomials import (
    GREVLEX,
    MonomialOrder,
    Poly,
    elimination_order,
)

IntPoly = dict  # exponent tuple -> int coefficient


# ---------------------------------------------------------------------------
# integer polynomial helpers


def _content(p: IntPoly) -> int:
    g = 0
    for c in p.values():
        g = math.gcd(g, c)
        if g == 1:
            return 1
    return g


def _normalize(p: IntPoly, keyf) -> IntPoly:
    """Divide by the content and make the leading coefficient positive."""
    if not p:
        return {}
    g = _content(p)
    if p[max(p, key=keyf)] < 0:
        g = -g
    if g == 1:
        return p
    return {e: c // g for e, c in p.items()}


def _int_from_poly(p: Poly, keyf) -> IntPoly:
    if p.is_zero():
        return {}
    den = 1
    for c in p.terms.values():
        den = den * c.denominator // math.gcd(den, c.denominator)
    out = {e: int(c * den) for e, c in p.terms.items()}
    return _normalize(out, keyf)


def _poly_from_int(p: IntPoly, nvars: int, keyf) -> Poly:
    """Monic Fraction polynomial from a primitive integer polynomial."""
    lc = p[max(p, key=keyf)]
    return Poly({e: Fraction(c, lc) for e, c in p.items()}, nvars)


def _divides(a, b) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _nf(p: IntPoly, basis, keyf) -> IntPoly:
    """Full normal form of p modulo basis = [(lead_exp, poly), ...].

    The result is only defined up to a positive rational scalar, which is
    all that membership tests and basis reduction need; it is returned
    primitive with positive leading coefficient.
    """
    work = dict(p)
    rem: IntPoly = {}
    while work:
        lt = max(work, key=keyf)
        lc = work[lt]
        hit = None
        for blt, b in basis:
            if _divides(blt, lt):
                hit = (blt, b)
                break
        if hit is None:
            rem[lt] = lc
            del work[lt]
            continue
        blt, b = hit
        bc = b[blt]
        g = math.gcd(lc, bc)
        mp = abs(bc) // g
        mb = (lc // g) * (1 if bc > 0 else -1)
        if mp != 1:
            for e in work:
                work[e] *= mp
            for e in rem:
                rem[e] *= mp
        shift = tuple(a - c for a, c in zip(lt, blt))
        for e, c in b.items():
            f = tuple(a + s for a, s in zip(e, shift))
            v = work.get(f, 0) - mb * c
            if v:
                work[f] = v
            else:
                work.pop(f, None)
        if mp != 1 and (work or rem):
            g = 0
            for c in work.values():
                g = math.gcd(g, c)
            for c in rem.values():
                g = math.gcd(g, c)
            if g > 1:
                for e in work:
                    work[e] //= g
                for e in rem:
                    rem[e] //= g
    return _normalize(rem, keyf)


def _spoly(f: IntPoly, ltf, g: IntPoly, ltg) -> IntPoly:
    lcm = tuple(max(a, b) for a, b in zip(ltf, ltg))
    cf, cg = f[ltf], g[ltg]
    h = math.gcd(cf, cg)
    mf, mg = cg // h, cf // h
    out: IntPoly = {}
    sf = tuple(l - a for l, a in zip(lcm, ltf))
    for e, c in f.items():
        out[tuple(a + s for a, s in zip(e, sf))] = mf * c
    sg = tuple(l - a for l, a in zip(lcm, ltg))
    for e, c in g.items():
        k = tuple(a + s for a, s in zip(e, sg))
        v = out.get(k, 0) - mg * c
        if v:
            out[k] = v
        else:
            out.pop(k, None)
    return out


def _buchberger(gens, keyf):
    """Reduced Groebner basis (list of primitive IntPoly, descending leads)."""
    G: list = []
    lts: list = []
    for g in gens:
        r = _nf(g, list(zip(lts, G)), keyf)
        if r:
            G.append(r)
            lts.append(max(r, key=keyf))

    heap: list = []

    def push_pairs(j):
        for i in range(j):
            lcm = tuple(max(a, b) for a, b in zip(lts[i], lts[j]))
            heapq.heappush(heap, (sum(lcm), keyf(lcm), i, j))

    for j in range(len(G)):
        push_pairs(j)

    treated = set()
    while heap:
        _, _, i, j = heapq.heappop(heap)
        treated.add((i, j))
        lti, ltj = lts[i], lts[j]
        lcm = tuple(max(a, b) for a, b in zip(lti, ltj))
        if all(a + b == l for a, b, l in zip(lti, ltj, lcm)):
            continue  # coprime leading terms
        skipped = False
        for k in range(len(G)):
            if k == i or k == j or not _divides(lts[k], lcm):
                continue
            if (min(i, k), max(i, k)) in treated and (min(j, k), max(j, k)) in treated:
                skipped = True
                break
        if skipped:
            continue
        r = _nf(_spoly(G[i], lti, G[j], ltj), list(zip(lts, G)), keyf)
        if r:
            G.append(r)
            lts.append(max(r, key=keyf))
            push_pairs(len(G) - 1)

    return _autoreduce(G, keyf)


def _autoreduce(G, keyf):
    order_idx = sorted(range(len(G)), key=lambda i: keyf(max(G[i], key=keyf)))
    kept: list = []
    kept_lts: list = []
    for i in order_idx:
        lt = max(G[i], key=keyf)
        if any(_divides(l, lt) for l in kept_lts):
            continue
        kept.append(G[i])
        kept_lts.append(lt)
    changed = True
    while changed:
        changed = False
        for idx in range(len(kept)):
            others = [(kept_lts[k], kept[k]) for k in range(len(kept)) if k != idx]
            r = _nf(kept[idx], others, keyf)
            if r != kept[idx]:
                kept[idx] = r
                changed = True
    pairs = sorted(zip(kept_lts, kept), key=lambda t: keyf(t[0]), reverse=True)
    return [p for _, p in pairs]


# ---------------------------------------------------------------------------
# public Ideal type


class Ideal:
    """An ideal given by generators, with a cached reduced Groebner basis.

    The reduced basis is unique for (ideal, order), so two ideals under the
    same order are equal iff their reduced bases coincide.
    """

    __slots__ = ("generators", "order", "nvars", "_gb", "_gbint")

    def __init__(self, generators, nvars=None, order: MonomialOrder = GREVLEX):
        gens = []
        for g in generators:
            if not isinstance(g, Poly):
                raise TypeError("generators must be Poly")
            if g.is_zero():
                continue
            if g not in gens:
                gens.append(g)
        if nvars is None:
            if not gens:
                raise ValueError("nvars required for the zero ideal")
            nvars = gens[0].nvars
        if any(g.nvars != nvars for g in gens):
            raise ValueError("generators live in different rings")
        object.__setattr__(self, "generators", tuple(gens))
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "nvars", nvars)
        object.__setattr__(self, "_gb", None)
        object.__setattr__(self, "_gbint", None)

    def __setattr__(self, *a):
        raise AttributeError("Ideal is immutable")

    @classmethod
    def _seeded(cls, gb_polys, nvars, order=GREVLEX):
        """Construct with an already-reduced basis (monic, sorted descending)."""
        ideal = cls(gb_polys, nvars=nvars, order=order)
        object.__setattr__(ideal, "_gb", tuple(gb_polys))
        return ideal

    # -- Groebner machinery --------------------------------------------------

    def groebner(self):
        """The reduced, monic, auto-reduced basis (deterministic, cached)."""
        if self._gb is None:
            keyf = self.order.key
            if self.generators and all(len(g.terms) == 1 for g in self.generators):
                gb = self._monomial_basis(keyf)
            else:
                ints = [_int_from_poly(g, keyf) for g in self.generators]
                gb = tuple(
                    _poly_from_int(p, self.nvars, keyf)
                    for p in _buchberger(ints, keyf)
                )
            object.__setattr__(self, "_gb", gb)
        return self._gb

    def _monomial_basis(self, keyf):
        exps = sorted({g.leading_monomial(self.order) for g in self.generators})
        minimal = [
            e for e in exps if not any(m != e and _divides(m, e) for m in exps)
        ]
        minimal.sort(key=keyf, reverse=True)
        return tuple(Poly.monomial(e, 1) for e in minimal)

    def _int_basis(self):
        if self._gbint is None:
            keyf = self.order.key
            basis = []
            for g in self.groebner():
                ip = _int_from_poly(g, keyf)
                basis.append((max(ip, key=keyf), ip))
            object.__setattr__(self, "_gbint", basis)
        return self._gbint

    # -- predicates -----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.groebner()

    def is_unit(self) -> bool:
        gb = self.groebner()
        return len(gb) == 1 and gb[0].is_constant()

    def contains(self, p: Poly) -> bool:
        if p.nvars != self.nvars:
            raise ValueError("polynomial lives in a different ring")
        if p.is_zero():
            return True
        if self.is_unit():
            return True
        keyf = self.order.key
        return not _nf(_int_from_poly(p, keyf), self._int_basis(), keyf)

    def contains_ideal(self, other: "Ideal") -> bool:
        return all(self.contains(g) for g in other.groebner())

    def leading_exponents(self):
        return tuple(g.leading_monomial(self.order) for g in self.groebner())

    def __repr__(self):
        gens = ", ".join(str(g) for g in self.groebner()) or "0"
        return f"Ideal({gens})"


# ---------------------------------------------------------------------------
# constructors


def zero_ideal(nvars: int = 3) -> Ideal:
    return Ideal([], nvars=nvars)


def unit_ideal(nvars: int = 3) -> Ideal:
    return Ideal([Poly.constant(1, nvars)], nvars=nvars)


def maximal_ideal() -> Ideal:
    """The irrelevant maximal ideal (x, y, z) of the origin."""
    return Ideal([Poly.variable(i, 3) for i in range(3)], nvars=3)


# ---------------------------------------------------------------------------
# ideal calculus


def ideal_sum(*ideals: Ideal) -> Ideal:
    if not ideals:
        raise ValueError("empty sum")
    nvars, order = ideals[0].nvars, ideals[0].order
    gens = [g for I in ideals for g in I.generators]
    return Ideal(gens, nvars=nvars, order=order)


def ideal_product(I: Ideal, J: Ideal) -> Ideal:
    gens = [f * g for f in I.generators for g in J.generators]
    return Ideal(gens, nvars=I.nvars, order=I.order)


def ideal_power(I: Ideal, k: int) -> Ideal:
    if k < 0:
        raise ValueError("negative ideal power")
    if k == 0:
        return unit_ideal(I.nvars)
    out = I
    for _ in range(k - 1):
        out = ideal_product(out, I)
    return out


def ideal_intersect(I: Ideal, J: Ideal) -> Ideal:
    """Intersection via a single auxiliary variable: eliminate t from
    t*I + (1-t)*J."""
    if I.nvars != J.nvars:
        raise ValueError("ideals live in different rings")
    n = I.nvars
    if I.is_zero() or J.is_zero():
        return zero_ideal(n)
    if I.is_unit():
        return J
    if J.is_unit():
        return I
    if ideal_equal(I, J):
        return I
    t = Poly.variable(0, n + 1)
    one = Poly.constant(1, n + 1)
    gens = [t * f.insert_var(0) for f in I.groebner()]
    gens += [(one - t) * g.insert_var(0) for g in J.groebner()]
    lifted = Ideal(gens, nvars=n + 1, order=elimination_order(1))
    kept = [
        g.drop_var(0)
        for g in lifted.groebner()
        if all(e[0] == 0 for e in g.terms)
    ]
    # the t-free part of the reduced elimination basis is the reduced
    # grevlex basis of the intersection, so seed the cache
    return Ideal._seeded(kept, nvars=n, order=GREVLEX)


def ideal_quotient(I: Ideal, J: Ideal) -> Ideal:
    """The colon ideal (I : J), computed generator by generator."""
    if J.is_zero():
        return unit_ideal(I.nvars)
    if I.is_zero() or J.is_unit():
        return I
    parts = []
    for g in J.groebner():
        K = ideal_intersect(I, Ideal([g], nvars=I.nvars, order=I.order))
        quot = []
        for h in K.groebner():
            q = h.exact_div(g)
            if q is None:
                raise ArithmeticError("quotient division failed; engine bug")
            quot.append(q)
        parts.append(Ideal(quot, nvars=I.nvars, order=I.order))
    return _fold(ideal_intersect, parts)


def saturate(I: Ideal, J: Ideal, max_iterations: int = 50) -> Ideal:
    """The saturation (I : J^infinity) by iterated quotients."""
    current = I
    for _ in range(max_iterations):
        nxt = ideal_quotient(current, J)
        if ideal_equal(nxt, current):
            return current
        current = nxt
    raise RuntimeError("saturation did not stabilize; engine bug")


def eliminate(I: Ideal, var: int) -> Ideal:
    """The elimination ideal I ∩ k[other variables], inside the same ring."""
    n = I.nvars
    if not 0 <= var < n:
        raise ValueError("variable index out of range")
    if I.is_zero():
        return I
    perm = (var,) + tuple(i for i in range(n) if i != var)
    inverse = tuple(perm.index(i) for i in range(n))
    moved = Ideal(
        [g.permute(perm) for g in I.generators],
        nvars=n,
        order=elimination_order(1),
    )
    kept = [
        g.permute(inverse)
        for g in moved.groebner()
        if all(e[0] == 0 for e in g.terms)
    ]
    return Ideal._seeded(kept, nvars=n, order=GREVLEX)


def ideal_equal(I: Ideal, J: Ideal) -> bool:
    """Equality via identical reduced Groebner bases (same order required)."""
    if I.order != J.order:
        raise ValueError("ideal equality requires a common monomial order")
    if I.nvars != J.nvars:
        return False
    return I.groebner() == J.groebner()
