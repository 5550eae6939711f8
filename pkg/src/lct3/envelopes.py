"""Degree envelopes of a planar point set, geometric generating degrees,
minimal-generator degrees, and the case classification driving the
multiplier-ideal formulas."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .ideals import (
    Ideal,
    ideal_equal,
    ideal_quotient,
    maximal_ideal,
    saturate,
    zero_ideal,
)
from .linalg import RatMatrix
from .points import PointSet, graded_piece, ideal_of_points
from .polynomials import Poly, monomials_of_degree
from .zerodim import zero_dim_report

ALL_OF_PLANE = "all-of-plane"
CURVE = "curve"
FINITE_SCHEME = "finite-scheme"
EQUALS_Z = "equals-Z"
MIXED = "mixed-dimension"


@dataclass(frozen=True)
class EnvelopeEntry:
    degree: int
    ideal: Ideal  # saturated ideal of the d-envelope
    descriptor: str


@dataclass(frozen=True)
class EnvelopeReport:
    entries: tuple  # of EnvelopeEntry, consecutive degrees, ending at Z itself
    ggds: tuple  # geometric generating degrees, sorted
    generator_degrees: tuple  # degrees of minimal generators, sorted


@dataclass(frozen=True)
class Classification:
    """One of the supported cases (A: one generating degree; B: two, with a
    smooth intermediate curve; C: two, with a reduced finite intermediate
    scheme) or Unsupported with a reason."""

    kind: str  # "A" | "B" | "C" | "unsupported"
    d: int = None
    e: int = None
    curve_form: Poly = None  # case B: the form cutting the intermediate curve
    w_ideal: Ideal = None  # case C: saturated ideal of the residual points
    zd_ideal: Ideal = None  # case C: saturated ideal of the intermediate envelope
    reason: str = None  # unsupported only
    report: EnvelopeReport = None

    def is_supported(self) -> bool:
        return self.kind in ("A", "B", "C")


def envelope(Z: PointSet, d: int) -> Ideal:
    """Saturated ideal of the d-envelope: the subscheme cut out by the
    degree-d forms through Z.  The zero ideal when no such forms exist."""
    basis = graded_piece(Z, d).basis
    if not basis:
        return zero_ideal(3)
    return saturate(Ideal(basis, nvars=3), maximal_ideal())


def _descriptor(env: Ideal, IZ: Ideal) -> str:
    if env.is_zero():
        return ALL_OF_PLANE
    if ideal_equal(env, IZ):
        return EQUALS_Z
    gb = env.groebner()
    if len(gb) == 1:
        return CURVE
    if zero_dim_report(env).is_zero_dimensional:
        return FINITE_SCHEME
    return MIXED


@lru_cache(maxsize=None)
def envelope_report(Z: PointSet) -> EnvelopeReport:
    """Scan the envelope chain from the first degree with a curve through Z
    until it stabilizes at Z itself, recording where it strictly shrinks."""
    IZ = ideal_of_points(Z)
    limit = len(Z) + 2
    d = 1
    while d <= limit and not graded_piece(Z, d).basis:
        d += 1
    entries = []
    ggds = []
    previous = zero_ideal(3)
    while d <= limit:
        env = envelope(Z, d)
        if not ideal_equal(env, previous):
            ggds.append(d)
        entries.append(EnvelopeEntry(d, env, _descriptor(env, IZ)))
        if ideal_equal(env, IZ):
            return EnvelopeReport(
                tuple(entries), tuple(ggds), tuple(generator_degrees(Z))
            )
        previous = env
        d += 1
    raise RuntimeError(
        f"envelope chain did not stabilize by degree {limit}; engine bug"
    )


def geometric_generating_degrees(Z: PointSet):
    return list(envelope_report(Z).ggds)


def generator_degrees(Z: PointSet):
    """Degrees in which the saturated ideal needs minimal generators: d is
    one exactly when the degree-d forms through Z exceed the span of
    (linear forms) * (degree d-1 forms through Z), decided by exact rank."""
    n = len(Z)
    # last degree where the Hilbert function of the points still moves
    t = 1
    while (t + 1) * (t + 2) // 2 - len(graded_piece(Z, t).basis) < n:
        t += 1
    out = []
    prev_basis = ()
    for d in range(1, t + 2):
        basis = graded_piece(Z, d).basis
        grown = _shifted_rank(prev_basis, d)
        if len(basis) > grown:
            out.append(d)
        prev_basis = basis
    return out


def _shifted_rank(basis, d: int) -> int:
    """Rank of {x*f, y*f, z*f : f in basis} inside the degree-d monomials."""
    if not basis:
        return 0
    monos = monomials_of_degree(d)
    index = {e: i for i, e in enumerate(monos)}
    rows = []
    for f in basis:
        for v in range(3):
            row = [0] * len(monos)
            for e, c in f.terms.items():
                shifted = list(e)
                shifted[v] += 1
                row[index[tuple(shifted)]] = c
            rows.append(row)
    return RatMatrix(rows).rank()


def is_smooth_plane_curve(F: Poly) -> bool:
    """Is the plane curve {F = 0} smooth?  Checked by saturating the ideal
    of F and its partials: smooth iff nothing survives but the irrelevant
    locus."""
    if F.is_zero() or not F.is_homogeneous() or F.total_degree() < 1:
        raise ValueError("expected a nonzero homogeneous form of positive degree")
    J = Ideal([F, F.diff(0), F.diff(1), F.diff(2)], nvars=3)
    return saturate(J, maximal_ideal()).is_unit()


@lru_cache(maxsize=None)
def classify(Z: PointSet) -> Classification:
    """Sort an arrangement into case A, B, or C; everything else is reported
    as unsupported with a human-readable reason."""
    report = envelope_report(Z)
    ggds = report.ggds
    if len(ggds) == 1:
        return Classification(kind="A", d=ggds[0], report=report)
    if len(ggds) > 2:
        return Classification(
            kind="unsupported",
            reason=f"{len(ggds)} geometric generating degrees",
            report=report,
        )
    d, e = ggds
    intermediate = next(en for en in report.entries if en.degree == d)
    env = intermediate.ideal
    if intermediate.descriptor == CURVE:
        form = env.groebner()[0]
        if form.total_degree() != d:
            raise RuntimeError("principal envelope of unexpected degree; engine bug")
        if is_smooth_plane_curve(form):
            return Classification(kind="B", d=d, e=e, curve_form=form, report=report)
        return Classification(
            kind="unsupported",
            reason="intermediate envelope is a singular curve",
            report=report,
        )
    if intermediate.descriptor == FINITE_SCHEME:
        if not zero_dim_report(env).is_reduced:
            return Classification(
                kind="unsupported",
                reason="intermediate envelope is a non-reduced finite scheme",
                report=report,
            )
        IZ = ideal_of_points(Z)
        W = saturate(ideal_quotient(env, IZ), maximal_ideal())
        return Classification(
            kind="C", d=d, e=e, w_ideal=W, zd_ideal=env, report=report
        )
    return Classification(
        kind="unsupported",
        reason="intermediate envelope has components of different dimensions",
        report=report,
    )
