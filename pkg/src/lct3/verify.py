"""Batch cross-verification: the chart-decomposition ideal identity, the
monomial (Newton polyhedron) oracle, the valuation membership oracle, and
structural monotonicity / containment checks, collected into one report."""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import reduce

from .envelopes import classify
from .ideals import (
    Ideal,
    ideal_equal,
    ideal_intersect,
    ideal_power,
    ideal_product,
    ideal_sum,
)
from .multiplier import (
    as_lambda,
    membership_by_valuation,
    multiplier_ideal,
)
from .newton import monomial_mi
from .points import PointSet, ideal_of_points
from .polynomials import Poly, monomials_of_degree

ORACLE_DEGREE_BOUND = 8
ORACLE_POWER_BOUND = 3


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    details: str = ""


@dataclass(frozen=True)
class CrossCheckReport:
    entries: tuple  # of CheckResult
    ok: bool


def verify_chart_identity(J_list, a_list) -> bool:
    """Check the chart-decomposition identity: for ideals J_1..J_p in the
    first two variables and exponents a_1 < ... < a_p of the third variable,

        z^a1*J_1 + ... + z^ap*J_p
          = z^a1 * ( (J_1 + (z^(a2-a1))) ∩ (J_1+J_2 + (z^(a3-a1))) ∩ ...
                     ∩ (J_1+...+J_(p-1) + (z^(ap-a1))) ∩ (J_1+...+J_p) ).
    """
    p = len(J_list)
    if p == 0 or len(a_list) != p:
        raise ValueError("need as many exponents as ideals, at least one")
    if list(a_list) != sorted(set(a_list)) or any(a < 0 for a in a_list):
        raise ValueError("exponents must be strictly increasing and non-negative")
    for J in J_list:
        if any(e[2] != 0 for g in J.generators for e in g.terms):
            raise ValueError("the input ideals must not involve the third variable")

    def zpow(k: int) -> Poly:
        return Poly.monomial((0, 0, k), 1)

    lhs = ideal_sum(
        *[
            Ideal([zpow(a) * g for g in J.generators], nvars=3)
            for J, a in zip(J_list, a_list)
        ]
    )
    partial_sums = []
    acc = []
    for J in J_list:
        acc = acc + list(J.generators)
        partial_sums.append(list(acc))
    factors = []
    for k in range(p - 1):
        factors.append(
            Ideal(partial_sums[k] + [zpow(a_list[k + 1] - a_list[0])], nvars=3)
        )
    factors.append(Ideal(partial_sums[-1], nvars=3))
    rhs_core = reduce(ideal_intersect, factors)
    rhs = ideal_product(Ideal([zpow(a_list[0])], nvars=3), rhs_core)
    return ideal_equal(lhs, rhs)


def _is_monomial_ideal(I: Ideal) -> bool:
    return all(len(g.terms) == 1 for g in I.groebner())


def _oracle_inputs(c, bound=ORACLE_DEGREE_BOUND, max_power=ORACLE_POWER_BOUND):
    """Homogeneous test forms: all monomials up to the degree bound, times
    powers of the curve form in case B."""
    monos = [
        Poly.monomial(e, 1)
        for t in range(bound + 1)
        for e in monomials_of_degree(t)
    ]
    if c.kind != "B":
        return monos
    out = []
    for a in range(max_power + 1):
        Fa = c.curve_form**a
        fdeg = a * c.d
        if fdeg > bound:
            break
        out.extend(m * Fa for m in monos if m.total_degree() + fdeg <= bound)
    return out


def cross_check(Z: PointSet, lam_grid) -> CrossCheckReport:
    """Run every oracle that applies to the arrangement over the exponent
    grid; failures are report entries, never exceptions."""
    grid = sorted(as_lambda(l) for l in lam_grid)
    c = classify(Z)
    if not c.is_supported():
        entry = CheckResult("classification", False, f"unsupported: {c.reason}")
        return CrossCheckReport((entry,), False)

    entries = []
    IZ = ideal_of_points(Z)
    assembled = {lam: multiplier_ideal(c, Z, lam).ideal for lam in grid}

    if _is_monomial_ideal(IZ):
        gens = [g for g in IZ.groebner()]
        bad = [
            str(lam)
            for lam in grid
            if not ideal_equal(assembled[lam], monomial_mi(gens, lam))
        ]
        entries.append(
            CheckResult(
                "monomial-oracle",
                not bad,
                "agrees on the whole grid" if not bad else f"disagrees at {bad}",
            )
        )

    if c.kind in ("A", "B"):
        forms = _oracle_inputs(c)
        witness = None
        for lam in grid:
            if lam >= 3:
                continue
            J = assembled[lam]
            for G in forms:
                if membership_by_valuation(c, Z, G, lam) != J.contains(G):
                    witness = f"lambda={lam}, form={G}"
                    break
            if witness:
                break
        entries.append(
            CheckResult(
                "valuation-oracle",
                witness is None,
                witness or "agrees on all test forms",
            )
        )

    bad = []
    for small, large in zip(grid, grid[1:]):
        if not assembled[small].contains_ideal(assembled[large]):
            bad.append(f"{small} -> {large}")
    entries.append(
        CheckResult(
            "monotonicity",
            not bad,
            "ideals shrink along the grid" if not bad else f"violated at {bad}",
        )
    )

    bad = []
    for lam in grid:
        if lam == 0:
            continue
        if not assembled[lam].contains_ideal(ideal_power(IZ, math.ceil(lam))):
            bad.append(str(lam))
    entries.append(
        CheckResult(
            "power-containment",
            not bad,
            "I^ceil(lambda) inside J everywhere" if not bad else f"fails at {bad}",
        )
    )

    return CrossCheckReport(tuple(entries), all(e.passed for e in entries))
