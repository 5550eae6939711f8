"""Zero-dimensional analysis of saturated homogeneous ideals: projective
degree via Hilbert-function stabilization, reducedness via Seidenberg
radicals on the three standard affine charts."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .ideals import Ideal, ideal_equal, ideal_sum, eliminate, _divides
from .polynomials import Poly, monomials_of_degree


@dataclass(frozen=True)
class ZeroDimReport:
    is_zero_dimensional: bool
    degree: int  # length of the projective scheme; 0 when not zero-dimensional
    is_reduced: bool


def hilbert_function(I: Ideal, t: int) -> int:
    """dim of the degree-t piece of S/I, by counting standard monomials."""
    lts = I.leading_exponents()
    return sum(
        1
        for e in monomials_of_degree(t, I.nvars)
        if not any(_divides(l, e) for l in lts)
    )


def zero_dim_report(I: Ideal) -> ZeroDimReport:
    """Analyze a saturated homogeneous ideal in three variables.

    For a saturated ideal the Hilbert function of S/I is non-decreasing and,
    once two consecutive values agree, constant; a zero-dimensional scheme is
    exactly one with an eventually constant Hilbert function, whose constant
    is the degree.
    """
    if I.nvars != 3:
        raise ValueError("expected an ideal in the homogeneous coordinate ring")
    if I.is_unit():
        raise ValueError("the unit ideal defines the empty scheme")
    if I.is_zero():
        return ZeroDimReport(False, 0, False)
    bound = sum(sum(e) for e in I.leading_exponents()) + 2
    prev = None
    for t in range(bound + 1):
        h = hilbert_function(I, t)
        if prev is not None and h == prev:
            return ZeroDimReport(True, h, _charts_reduced(I))
        prev = h
    return ZeroDimReport(False, 0, False)


def _charts_reduced(I: Ideal) -> bool:
    for chart in range(3):
        J = Ideal([g.set_var_one(chart) for g in I.groebner()], nvars=2)
        if J.is_unit():
            continue  # no points in this chart
        if not ideal_equal(radical_zero_dim(J), J):
            return False
    return True


def radical_zero_dim(I: Ideal) -> Ideal:
    """Radical of a zero-dimensional affine ideal (Seidenberg, char 0):
    adjoin the squarefree part of the minimal univariate polynomial of
    each variable."""
    extra = []
    for v in range(I.nvars):
        m = _min_univariate(I, v)
        if m is None:
            raise ValueError(
                f"no univariate polynomial in variable {v}: ideal is not zero-dimensional"
            )
        extra.append(_squarefree_univariate(m, v, I.nvars))
    return ideal_sum(I, Ideal(extra, nvars=I.nvars, order=I.order))


def _min_univariate(I: Ideal, v: int):
    """Lowest-degree element of I ∩ k[x_v], or None."""
    J = I
    for other in range(I.nvars):
        if other != v:
            J = eliminate(J, other)
    candidates = [g for g in J.groebner() if not g.is_zero()]
    if not candidates:
        return None
    return min(candidates, key=lambda g: g.total_degree())


def _coeff_list(p: Poly, v: int) -> list:
    out = [Fraction(0)] * (p.total_degree() + 1)
    for e, c in p.terms.items():
        out[e[v]] += c
    return out


def _uni_divmod(a: list, b: list):
    a = list(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    while len(a) >= len(b) and any(a):
        while a and a[-1] == 0:
            a.pop()
        if len(a) < len(b):
            break
        k = len(a) - len(b)
        f = a[-1] / b[-1]
        q[k] = f
        for i, c in enumerate(b):
            a[i + k] -= f * c
    while a and a[-1] == 0:
        a.pop()
    return q, a


def _uni_gcd(a: list, b: list) -> list:
    while any(b):
        _, r = _uni_divmod(a, b)
        a, b = b, r
    lead = a[-1]
    return [c / lead for c in a]


def _squarefree_univariate(p: Poly, v: int, nvars: int) -> Poly:
    coeffs = _coeff_list(p, v)
    deriv = [c * k for k, c in enumerate(coeffs)][1:]
    if not any(deriv):  # constant polynomial
        return p
    g = _uni_gcd(coeffs, deriv)
    sqf, rem = _uni_divmod(coeffs, g)
    if any(rem):
        raise ArithmeticError("squarefree division failed; engine bug")
    terms = {}
    for k, c in enumerate(sqf):
        if c:
            e = [0] * nvars
            e[v] = k
            terms[tuple(e)] = c
    lead = sqf[-1]
    return Poly({e: c / lead for e, c in terms.items()}, nvars)
