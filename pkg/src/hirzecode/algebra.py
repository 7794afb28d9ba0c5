"""Monomial order, projection onto representatives, and the distance bound.

The total order on exponent vectors compares (d1+d2, d2, c2, c1)
lexicographically.  Projection rewrites any monomial as a combination of
representatives with the same evaluations; in the special regime one corner
monomial needs a three-term image, and the corresponding four-term kernel
polynomial vanishes at every rational point.  The minimum distance of the
code is bounded below by counting, inside an enlarged bidegree, the
representatives divisible by each representative monomial, and taking the
minimum of those counts.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Tuple

from .errors import NotARepresentative, SpecialRegimeRequired, ZeroPolynomial
from .gf import FieldSpec
from .lattice import LatticePoint, reduce, representatives, special_regime
from .surface import Bidegree, CoxPolynomial, ExponentVector, monomial_from_lattice


def order_key(ev: ExponentVector):
    """Sort key realizing the monomial order (compare left to right)."""
    return (ev.d1 + ev.d2, ev.d2, ev.c2, ev.c1)


def compare(a: ExponentVector, b: ExponentVector) -> int:
    """-1, 0 or +1 as a is below, equal to or above b in the monomial order."""
    ka, kb = order_key(a), order_key(b)
    return (ka > kb) - (ka < kb)


def leading_monomial(poly: CoxPolynomial) -> ExponentVector:
    """Greatest exponent vector appearing in the polynomial."""
    if poly.is_zero():
        raise ZeroPolynomial("zero polynomial has no leading monomial")
    return max(poly.terms, key=order_key)


def _edge_decomposition(bideg: Bidegree, field: FieldSpec) -> Tuple[int, int]:
    """Write the right-edge column delta/eta as k*(q-1) + r with 1 <= r <= q-1."""
    edge = bideg.delta // bideg.eta
    r = (edge - 1) % (field.q - 1) + 1
    return (edge - r) // (field.q - 1), r


def project(bideg: Bidegree, field: FieldSpec, ev: ExponentVector) -> CoxPolynomial:
    """Image of one monomial under the projection onto representative span.

    Ordinarily a single monomial: the one at the reduced lattice point.  In
    the special regime the corner (delta/eta, 0) maps to a three-term
    combination with the same evaluation at every rational point.
    """
    if monomial_from_lattice(bideg, ev.d2, ev.c2) != ev:
        raise ValueError(f"{ev} does not have bidegree ({bideg.dT}, {bideg.dX})")
    u = LatticePoint(ev.d2, ev.c2)
    if special_regime(bideg, field) and u == LatticePoint(bideg.delta // bideg.eta, 0):
        k, r = _edge_decomposition(bideg, field)
        mono = lambda pt: CoxPolynomial.monomial(
            bideg.eta, monomial_from_lattice(bideg, pt[0], pt[1]), field
        )
        return (
            mono((r, 0))
            + mono((r, bideg.eta * k * (field.q - 1)))
            - mono((r, field.q - 1))
        )
    v = reduce(bideg, field, u)
    return CoxPolynomial.monomial(
        bideg.eta, monomial_from_lattice(bideg, v.d2, v.c2), field
    )


def project_poly(poly: CoxPolynomial) -> CoxPolynomial:
    """Termwise projection, collecting coefficients."""
    out = CoxPolynomial(poly.bidegree, poly.field, {})
    for ev, coef in poly.terms.items():
        out = out + project(poly.bidegree, poly.field, ev).scale(coef)
    return out


def special_kernel_element(bideg: Bidegree, field: FieldSpec) -> CoxPolynomial:
    """The four-term polynomial vanishing at every rational point.

    Exists exactly in the special regime; it is corner minus its three-term
    projection, and witnesses that the kernel is not spanned by differences
    of monomials there.
    """
    if not special_regime(bideg, field):
        raise SpecialRegimeRequired(
            f"(eta, dT, dX, q) = ({bideg.eta}, {bideg.dT}, {bideg.dX}, {field.q})"
        )
    edge = bideg.delta // bideg.eta
    corner = CoxPolynomial.monomial(
        bideg.eta, monomial_from_lattice(bideg, edge, 0), field
    )
    return corner - project(bideg, field, monomial_from_lattice(bideg, edge, 0))


def enlarged_bidegree(bideg: Bidegree, field: FieldSpec) -> Bidegree:
    """The bidegree (q + delta, q + dX) used for divisibility counting."""
    return Bidegree(bideg.eta, field.q + bideg.delta, field.q + bideg.dX)


def _count_multiples(bideg, field, rep: LatticePoint, big_evs) -> int:
    m = monomial_from_lattice(bideg, rep.d2, rep.c2)
    return sum(1 for n in big_evs if m.divides(n))


def _enlarged_monomials(bideg: Bidegree, field: FieldSpec):
    big = enlarged_bidegree(bideg, field)
    _, reduced = representatives(big, field)
    return [monomial_from_lattice(big, pt.d2, pt.c2) for pt in reduced]


def divisibility_count(bideg: Bidegree, field: FieldSpec, rep: LatticePoint) -> int:
    """Number of enlarged-bidegree representatives divisible by rep's monomial.

    Computed by direct enumeration over the enlarged representative set;
    always >= 1.
    """
    _, reduced = representatives(bideg, field)
    if rep not in reduced:
        raise NotARepresentative(f"{(rep.d2, rep.c2)} not in the reduced set")
    return _count_multiples(bideg, field, rep, _enlarged_monomials(bideg, field))


def _column_minimum(bideg: Bidegree, field: FieldSpec) -> Tuple[int, int]:
    """Minimize the per-column count over the columns present in the reduced set.

    For a column a the smallest count is attained on the top edge, where it
    equals max(q - a + [a == dX], 1) * max(q - delta + eta*a + 1, 1).
    """
    q = field.q
    delta = bideg.delta
    if bideg.dT >= 0:
        cols = sorted(set(range(min(q, bideg.dX + 1))) | {bideg.dX})
    else:
        cols = range(min(q - 1, delta // bideg.eta) + 1)
    best = None
    for a in cols:
        value = max(q - a + (1 if a == bideg.dX else 0), 1) * max(
            q - delta + bideg.eta * a + 1, 1
        )
        if best is None or value < best[0]:
            best = (value, a)
    return best


@dataclass(frozen=True)
class DistanceBoundReport:
    """Distance lower bound by divisibility counting, plus the column form.

    epsilon_t/epsilon_x fix the enlarged bidegree (q + delta, q + dX) that
    makes the bound tight.  bound is the minimum count, attained at argmin;
    column_bound repeats the minimization column by column and must agree
    whenever eta != 1.
    """

    epsilon_t: int
    epsilon_x: int
    per_representative_counts: Dict[LatticePoint, int]
    bound: int
    argmin: LatticePoint
    column_bound: int
    column_argmin: int


def distance_bound(bideg: Bidegree, field: FieldSpec) -> DistanceBoundReport:
    """Lower bound for the minimum distance (tight for eta != 1)."""
    bideg.require_nonempty()
    big = enlarged_bidegree(bideg, field)
    big_evs = _enlarged_monomials(bideg, field)
    _, reduced = representatives(bideg, field)
    counts = {}
    bound, argmin = None, None
    for rep in reduced:
        c = _count_multiples(bideg, field, rep, big_evs)
        counts[rep] = c
        if bound is None or c < bound:
            bound, argmin = c, rep
    col_bound, col_argmin = _column_minimum(bideg, field)
    if bideg.eta != 1 and col_bound != bound:
        raise AssertionError(
            f"count minimum {bound} != column minimum {col_bound} "
            f"for (eta, dT, dX, q) = ({bideg.eta}, {bideg.dT}, {bideg.dX}, {field.q})"
        )
    return DistanceBoundReport(
        big.dT, big.dX, counts, bound, argmin, col_bound, col_argmin
    )
