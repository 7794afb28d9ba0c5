"""The surface side of the construction: bigraded monomials and rational points.

Monomials live in the four-variable ring k[T1, T2, X1, X2] graded by pairs
(dT, dX) via dT = c1 + c2 - eta*d1 and dX = d1 + d2, where (c1, c2, d1, d2)
are the exponents of (T1, T2, X1, X2).  Rational points are represented in
one of four canonical coordinate forms, one per orbit of the torus action,
so that evaluating a homogeneous polynomial at a point is well defined.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import EmptyGradedPiece, MixedFields, OutsidePolygon
from .gf import FieldElement, FieldSpec, reduce_exponent


@dataclass(frozen=True)
class Bidegree:
    """Degree pair (dT, dX) on the surface with parameter eta; delta = dT + eta*dX."""

    eta: int
    dT: int
    dX: int

    def __post_init__(self):
        if self.eta < 0:
            raise ValueError(f"eta must be >= 0, got {self.eta}")

    @property
    def delta(self) -> int:
        return self.dT + self.eta * self.dX

    def require_nonempty(self):
        """The graded piece is nonzero exactly when dX >= 0 and delta >= 0."""
        if self.dX < 0 or self.delta < 0:
            raise EmptyGradedPiece(f"no monomials of bidegree ({self.dT}, {self.dX})")

    @property
    def right_edge(self) -> Fraction:
        """Largest d2-coordinate of the monomial polygon (exact rational)."""
        if self.eta == 0:
            return Fraction(self.dX)
        return min(Fraction(self.dX), Fraction(self.delta, self.eta))


@dataclass(frozen=True)
class ExponentVector:
    """Exponents (c1, c2, d1, d2) of a monomial T1^c1 T2^c2 X1^d1 X2^d2."""

    c1: int
    c2: int
    d1: int
    d2: int

    def __post_init__(self):
        if min(self.c1, self.c2, self.d1, self.d2) < 0:
            raise ValueError(f"negative exponent in {self}")

    def bidegree(self, eta: int) -> Bidegree:
        return Bidegree(eta, self.c1 + self.c2 - eta * self.d1, self.d1 + self.d2)

    def as_tuple(self):
        """Serialized form: the 4-tuple of exponents."""
        return (self.c1, self.c2, self.d1, self.d2)

    def divides(self, other: "ExponentVector") -> bool:
        return (
            self.c1 <= other.c1
            and self.c2 <= other.c2
            and self.d1 <= other.d1
            and self.d2 <= other.d2
        )

    def __str__(self):
        names = ("T1", "T2", "X1", "X2")
        exps = (self.c1, self.c2, self.d1, self.d2)
        parts = [n if e == 1 else f"{n}^{e}" for n, e in zip(names, exps) if e]
        return "*".join(parts) if parts else "1"


_FORMS = ("torus", "t1_zero", "x1_zero", "both_zero")


@dataclass(frozen=True)
class SurfacePoint:
    """Rational point in canonical coordinates (t1, t2, x1, x2).

    Exactly one of the four forms: (1,a,1,b), (0,1,1,b), (1,a,0,1), (0,1,0,1).
    """

    t1: FieldElement
    t2: FieldElement
    x1: FieldElement
    x2: FieldElement

    def __post_init__(self):
        if self.form is None:
            raise ValueError(f"{self.coords} is not in canonical form")

    @property
    def coords(self):
        return (self.t1, self.t2, self.x1, self.x2)

    def index_tuple(self):
        """Serialized form: the 4-tuple of canonical element indices."""
        return tuple(c.index for c in self.coords)

    @property
    def form(self):
        t1, t2, x1, x2 = self.coords
        one = t1.spec.one
        if t1 == one and x1 == one:
            return "torus"
        if t1 == one and (x1.index, x2.index) == (0, 1):
            return "x1_zero"
        if (t1.index, t2.index) == (0, 1) and x1 == one:
            return "t1_zero"
        if (t1.index, t2.index) == (0, 1) and (x1.index, x2.index) == (0, 1):
            return "both_zero"
        return None

    @staticmethod
    def torus(a: FieldElement, b: FieldElement) -> "SurfacePoint":
        one = a.spec.one
        return SurfacePoint(one, a, one, b)

    @staticmethod
    def t1_zero(b: FieldElement) -> "SurfacePoint":
        spec = b.spec
        return SurfacePoint(spec.zero, spec.one, spec.one, b)

    @staticmethod
    def x1_zero(a: FieldElement) -> "SurfacePoint":
        spec = a.spec
        return SurfacePoint(spec.one, a, spec.zero, spec.one)

    @staticmethod
    def both_zero(spec: FieldSpec) -> "SurfacePoint":
        return SurfacePoint(spec.zero, spec.one, spec.zero, spec.one)

    def __str__(self):
        return "(" + ",".join(str(c) for c in self.coords) + ")"


def rational_points(field: FieldSpec):
    """All (q+1)^2 rational points in the canonical column order.

    First the q^2 torus points (1,a,1,b) sorted by (index(a), index(b)),
    then (0,1,1,b) by index(b), then (1,a,0,1) by index(a), then (0,1,0,1).
    The list does not depend on eta.
    """
    elems = [field.element(i) for i in range(field.q)]
    pts = [SurfacePoint.torus(a, b) for a in elems for b in elems]
    pts += [SurfacePoint.t1_zero(b) for b in elems]
    pts += [SurfacePoint.x1_zero(a) for a in elems]
    pts.append(SurfacePoint.both_zero(field))
    return pts


def monomial_from_lattice(bideg: Bidegree, d2: int, c2: int) -> ExponentVector:
    """The monomial of the given bidegree whose (X2, T2) exponents are (d2, c2)."""
    c1 = bideg.delta - bideg.eta * d2 - c2
    d1 = bideg.dX - d2
    if d2 < 0 or c2 < 0 or c1 < 0 or d1 < 0:
        raise OutsidePolygon(
            f"(d2, c2) = ({d2}, {c2}) outside the polygon of ({bideg.dT}, {bideg.dX})"
        )
    return ExponentVector(c1, c2, d1, d2)


def monomial_basis(bideg: Bidegree):
    """All monomials of the bidegree, ordered by ascending (d2, c2)."""
    from .lattice import polygon_points

    return [monomial_from_lattice(bideg, pt.d2, pt.c2) for pt in polygon_points(bideg)]


class CoxPolynomial:
    """Homogeneous polynomial: a bidegree plus a map exponent vector -> coefficient.

    Zero coefficients are dropped on construction, so `terms` only holds the
    support.  Addition and subtraction require equal bidegrees; products add
    bidegrees componentwise.
    """

    def __init__(self, bidegree: Bidegree, field: FieldSpec, terms=None):
        self.bidegree = bidegree
        self.field = field
        clean = {}
        for ev, coef in (terms or {}).items():
            if coef.spec != field:
                raise MixedFields("coefficient from a different field")
            if ev.bidegree(bidegree.eta) != bidegree:
                raise ValueError(f"term {ev} is not homogeneous of bidegree {bidegree}")
            if coef.index != 0:
                clean[ev] = coef
        self.terms = clean

    @staticmethod
    def monomial(eta: int, ev: ExponentVector, field: FieldSpec, coef=None) -> "CoxPolynomial":
        coef = field.one if coef is None else coef
        return CoxPolynomial(ev.bidegree(eta), field, {ev: coef})

    def _check(self, other: "CoxPolynomial"):
        if self.field != other.field:
            raise MixedFields("polynomials over different fields")

    def __add__(self, other: "CoxPolynomial") -> "CoxPolynomial":
        self._check(other)
        if self.bidegree != other.bidegree:
            raise ValueError("cannot add polynomials of different bidegrees")
        terms = dict(self.terms)
        for ev, coef in other.terms.items():
            terms[ev] = terms[ev] + coef if ev in terms else coef
        return CoxPolynomial(self.bidegree, self.field, terms)

    def __neg__(self) -> "CoxPolynomial":
        return CoxPolynomial(
            self.bidegree, self.field, {ev: -c for ev, c in self.terms.items()}
        )

    def __sub__(self, other: "CoxPolynomial") -> "CoxPolynomial":
        return self + (-other)

    def __mul__(self, other: "CoxPolynomial") -> "CoxPolynomial":
        self._check(other)
        bideg = Bidegree(
            self.bidegree.eta,
            self.bidegree.dT + other.bidegree.dT,
            self.bidegree.dX + other.bidegree.dX,
        )
        terms = {}
        for ev1, c1 in self.terms.items():
            for ev2, c2 in other.terms.items():
                ev = ExponentVector(
                    ev1.c1 + ev2.c1, ev1.c2 + ev2.c2, ev1.d1 + ev2.d1, ev1.d2 + ev2.d2
                )
                coef = c1 * c2
                terms[ev] = terms[ev] + coef if ev in terms else coef
        return CoxPolynomial(bideg, self.field, terms)

    def scale(self, coef: FieldElement) -> "CoxPolynomial":
        return CoxPolynomial(
            self.bidegree, self.field, {ev: c * coef for ev, c in self.terms.items()}
        )

    def is_zero(self) -> bool:
        return not self.terms

    def __str__(self):
        if not self.terms:
            return "0"
        bits = []
        for ev in sorted(self.terms, key=lambda e: (e.d2, e.c2)):
            c = self.terms[ev]
            head = "" if c == self.field.one else f"({c})*"
            bits.append(f"{head}{ev}")
        return " + ".join(bits)


def _point_index_arrays(points):
    """Split a point list into four numpy index arrays (t1, t2, x1, x2)."""
    return tuple(
        np.array([p.coords[i].index for p in points], dtype=np.int16) for i in range(4)
    )


def _pow_column(field: FieldSpec, idx: np.ndarray, e: int) -> np.ndarray:
    r = reduce_exponent(e, field.q)
    return field.tables.pow[idx, r]


def evaluate_vector(poly: CoxPolynomial, points) -> np.ndarray:
    """Element indices of poly evaluated at every point, as one numpy row."""
    field = poly.field
    t = field.tables
    t1, t2, x1, x2 = _point_index_arrays(points)
    acc = np.zeros(len(points), dtype=np.int16)
    for ev, coef in poly.terms.items():
        val = t.mul[
            t.mul[_pow_column(field, t1, ev.c1), _pow_column(field, t2, ev.c2)],
            t.mul[_pow_column(field, x1, ev.d1), _pow_column(field, x2, ev.d2)],
        ]
        acc = t.add[acc, t.mul[coef.index][val]]
    return acc


def evaluate(poly: CoxPolynomial, point: SurfacePoint) -> FieldElement:
    """Evaluate at one point in canonical coordinates (0**0 counts as 1)."""
    if point.t1.spec != poly.field:
        raise MixedFields("point and polynomial over different fields")
    total = poly.field.zero
    for ev, coef in poly.terms.items():
        val = (
            point.t1**ev.c1 * point.t2**ev.c2 * point.x1**ev.d1 * point.x2**ev.d2
        )
        total = total + coef * val
    return total


def evaluation_matrix(evs, points, field: FieldSpec) -> np.ndarray:
    """Matrix of element indices: one row per exponent vector, one column per point."""
    t = field.tables
    t1, t2, x1, x2 = _point_index_arrays(points)
    mat = np.empty((len(evs), len(points)), dtype=np.int16)
    for i, ev in enumerate(evs):
        mat[i] = t.mul[
            t.mul[_pow_column(field, t1, ev.c1), _pow_column(field, t2, ev.c2)],
            t.mul[_pow_column(field, x1, ev.d1), _pow_column(field, x2, ev.d2)],
        ]
    return mat
