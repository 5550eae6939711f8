"""Multiplier ideals of line arrangements, assembled in closed form from the
classification: powers of the maximal ideal, curve-form corrections, and the
Skoda recursion above exponent 3.  Also the log canonical threshold, the
jumping-number scan, and an independent valuation-based membership test."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .envelopes import Classification, classify
from .ideals import (
    Ideal,
    ideal_equal,
    ideal_intersect,
    ideal_product,
    ideal_sum,
    unit_ideal,
)
from .points import PointSet, ideal_of_points, symbolic_power
from .polynomials import Poly, monomials_of_degree

LAMBDA_CAP = Fraction(10)


def as_lambda(value) -> Fraction:
    """Validate an exponent: an exact non-negative rational (never a float)."""
    if isinstance(value, float):
        raise TypeError("multiplier-ideal exponents must be exact rationals")
    lam = Fraction(value)
    if lam < 0:
        raise ValueError("multiplier-ideal exponents must be non-negative")
    return lam


@dataclass(frozen=True)
class MultiplierIdealResult:
    lam: Fraction
    ideal: Ideal
    branch: str  # which formula clause produced the ideal


@dataclass(frozen=True)
class JumpTable:
    jumps: tuple  # of (Fraction, Ideal), strictly shrinking
    lct: Fraction  # first jump, or None when none occurred below the cut-off


def power_of_m(k: int) -> Ideal:
    """m^k for k >= 1; the unit ideal for k <= 0 (the reading under which
    the closed formulas return (1) below the log canonical threshold)."""
    if k <= 0:
        return unit_ideal(3)
    gens = [Poly.monomial(e, 1) for e in monomials_of_degree(k)]
    return Ideal._seeded(gens, nvars=3)


def _require_supported(c: Classification):
    if not c.is_supported():
        raise ValueError(f"unsupported arrangement: {c.reason}")


def lct(c: Classification) -> Fraction:
    """Closed-form log canonical threshold."""
    _require_supported(c)
    if c.kind in ("A", "C"):
        return min(Fraction(3, c.d), Fraction(2))
    return min(Fraction(3, c.d), Fraction(3 + c.e - c.d, c.e), Fraction(2))


def multiplier_ideal(c: Classification, Z: PointSet, lam) -> MultiplierIdealResult:
    """Assemble the multiplier ideal at exponent lam.

    The closed formulas cover lam < 3; larger exponents use the Skoda
    recursion J(lam) = I * J(lam - 1), capped at lam = 10.
    """
    _require_supported(c)
    lam = as_lambda(lam)
    if lam > LAMBDA_CAP:
        raise ValueError(f"exponent {lam} exceeds the supported cap {LAMBDA_CAP}")
    if lam >= 3:
        inner = multiplier_ideal(c, Z, lam - 1)
        ideal = ideal_product(ideal_of_points(Z), inner.ideal)
        return MultiplierIdealResult(lam, ideal, "skoda-recursion")
    d = c.d
    if c.kind == "A":
        md = power_of_m(math.floor(lam * d) - 2)
        if lam < 2:
            return MultiplierIdealResult(lam, md, "A[0,2)")
        ideal = ideal_intersect(md, ideal_of_points(Z))
        return MultiplierIdealResult(lam, ideal, "A[2,3)")
    if c.kind == "B":
        e, F = c.e, c.curve_form
        if lam < 1:
            return MultiplierIdealResult(
                lam, power_of_m(math.floor(lam * d) - 2), "B[0,1)"
            )
        curve = Ideal([F], nvars=3)
        if lam < 2:
            ideal = ideal_sum(
                power_of_m(math.floor(lam * e) - (2 + e - d)),
                ideal_product(power_of_m(math.floor(lam * d) - (2 + d)), curve),
            )
            return MultiplierIdealResult(lam, ideal, "B[1,2)")
        curve2 = Ideal([F * F], nvars=3)
        inner = ideal_sum(
            power_of_m(math.floor(lam * e) - (2 + e - d)),
            ideal_product(power_of_m(math.floor(lam * e) - (2 + 2 * e - d)), curve),
            ideal_product(power_of_m(math.floor(lam * d) - (2 + 2 * d)), curve2),
        )
        ideal = ideal_intersect(inner, ideal_of_points(Z))
        return MultiplierIdealResult(lam, ideal, "B[2,3)")
    # case C
    e = c.e
    if lam < 2:
        return MultiplierIdealResult(
            lam, power_of_m(math.floor(lam * d) - 2), "C[0,2)"
        )
    inner = ideal_sum(
        ideal_intersect(power_of_m(math.floor(lam * d) - 2), c.w_ideal),
        power_of_m(math.floor(lam * e) - 2 * (1 + e - d)),
    )
    ideal = ideal_intersect(inner, ideal_of_points(Z))
    return MultiplierIdealResult(lam, ideal, "C[2,3)")


def jump_candidates(c: Classification, lam_max) -> list:
    """Exponents where any floor term (or the Skoda shift of one) can move:
    multiples of 1/d and 1/e plus the integers, within (0, lam_max]."""
    _require_supported(c)
    lam_max = as_lambda(lam_max)
    denominators = {c.d, 1}
    if c.e is not None:
        denominators.add(c.e)
    out = set()
    for q in denominators:
        k = 1
        while Fraction(k, q) <= lam_max:
            out.add(Fraction(k, q))
            k += 1
    return sorted(out)


def jumping_numbers(c: Classification, Z: PointSet, lam_max) -> JumpTable:
    """Scan the candidate exponents; record those where the multiplier ideal
    strictly shrinks relative to just below."""
    lam_max = as_lambda(lam_max)
    if lam_max > LAMBDA_CAP:
        raise ValueError(f"cut-off {lam_max} exceeds the supported cap {LAMBDA_CAP}")
    jumps = []
    previous = Fraction(0)
    for cand in jump_candidates(c, lam_max):
        midpoint = (previous + cand) / 2
        before = multiplier_ideal(c, Z, midpoint).ideal
        at = multiplier_ideal(c, Z, cand).ideal
        if not ideal_equal(at, before):
            if not before.contains_ideal(at):
                raise RuntimeError("multiplier ideal grew across a candidate; bug")
            jumps.append((cand, at))
        previous = cand
    return JumpTable(tuple(jumps), jumps[0][0] if jumps else None)


def membership_by_valuation(
    c: Classification, Z: PointSet, G: Poly, lam
) -> bool:
    """Decide membership of a homogeneous form in the multiplier ideal from
    the orders of vanishing along the exceptional divisors, independently of
    the assembled generators.

    Case A: deg G must reach floor(lam*d) - 2.  Case B: write G = H * F^a
    with the curve form F dividing G exactly a times; then
    deg H + (d+j)*a must reach floor(lam*(d+j)) - (2+j) for 0 <= j <= e-d.
    Both cases additionally require membership in the (floor(lam)-1)-th
    symbolic power.
    """
    lam = as_lambda(lam)
    if lam >= 3:
        raise ValueError("valuation test only covers exponents below 3")
    if G.is_zero() or not G.is_homogeneous():
        raise ValueError("expected a nonzero homogeneous form")
    _require_supported(c)
    if c.kind == "C":
        raise ValueError("no valuation oracle for Case C")
    k = math.floor(lam) - 1
    if k > 0 and not symbolic_power(Z, k).contains(G):
        return False
    if c.kind == "A":
        return G.total_degree() >= math.floor(lam * c.d) - 2
    d, e, F = c.d, c.e, c.curve_form
    H, a = G, 0
    while True:
        q = H.exact_div(F)
        if q is None:
            break
        H, a = q, a + 1
    degH = H.total_degree()
    return all(
        degH + (d + j) * a >= math.floor(lam * (d + j)) - (2 + j)
        for j in range(e - d + 1)
    )


def classify_and_multiplier_ideal(Z: PointSet, lam) -> MultiplierIdealResult:
    return multiplier_ideal(classify(Z), Z, lam)
