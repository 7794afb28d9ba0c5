"""Polygon combinatorics behind the code dimension.

Monomials of one bidegree correspond to lattice points (d2, c2) of a convex
polygon.  Two monomials evaluate identically at every rational point exactly
when their exponents agree in zero pattern and modulo q-1 slotwise; this
module enumerates the polygon, decides that equivalence, reduces a point to
its distinguished representative, and builds the representative sets whose
size is the code dimension.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .errors import EmptyGradedPiece, EtaOneUnsupported, OutsidePolygon
from .gf import FieldSpec
from .surface import Bidegree, monomial_from_lattice


@dataclass(frozen=True, order=True)
class LatticePoint:
    """Polygon coordinates: d2 = X2-exponent (column), c2 = T2-exponent (row)."""

    d2: int
    c2: int


def _right_edge_int(bideg: Bidegree) -> Optional[int]:
    """The polygon's right-edge column when it is integral, else None."""
    a = bideg.right_edge
    return int(a) if a.denominator == 1 else None


def _require_inside(bideg: Bidegree, pt: LatticePoint):
    # delegates the four sign checks to the exponent construction
    try:
        monomial_from_lattice(bideg, pt.d2, pt.c2)
    except OutsidePolygon:
        raise OutsidePolygon(
            f"{(pt.d2, pt.c2)} not in the polygon of ({bideg.dT}, {bideg.dX})"
        ) from None


def polygon_points(bideg: Bidegree):
    """All lattice points (d2, c2) of the polygon, ordered lex by (d2, c2)."""
    bideg.require_nonempty()
    top = math.floor(bideg.right_edge)
    pts = []
    for a in range(top + 1):
        for b in range(bideg.delta - bideg.eta * a + 1):
            pts.append(LatticePoint(a, b))
    return pts


def special_regime(bideg: Bidegree, field: FieldSpec) -> bool:
    """True when the kernel needs a four-term adjustment on top of monomial
    differences: eta >= 2, dT < 0, eta | dT and q <= delta/eta."""
    return (
        bideg.eta >= 2
        and bideg.dT < 0
        and bideg.dT % bideg.eta == 0
        and field.q * bideg.eta <= bideg.delta
    )


def equivalent(bideg: Bidegree, field: FieldSpec, u: LatticePoint, v: LatticePoint) -> bool:
    """Whether the two monomials take the same value at every rational point.

    Checked combinatorially: each exponent slot must have the same zero
    pattern and be congruent modulo q-1 (vacuous for q = 2).
    """
    eu = monomial_from_lattice(bideg, u.d2, u.c2)
    ev = monomial_from_lattice(bideg, v.d2, v.c2)
    step = field.q - 1
    for a, b in (
        (eu.c1, ev.c1),
        (eu.c2, ev.c2),
        (eu.d1, ev.d1),
        (eu.d2, ev.d2),
    ):
        if (a == 0) != (b == 0):
            return False
        if (a - b) % step != 0:
            return False
    return True


def reduce(bideg: Bidegree, field: FieldSpec, u: LatticePoint) -> LatticePoint:
    """Map a polygon point to the distinguished representative of its class.

    Columns 0 and the integral right edge are kept; other columns are folded
    modulo q-1 into [1, q-1].  Rows 0 and the slanted top edge are kept (the
    top edge follows the column), other rows fold the same way.  Idempotent.
    """
    _require_inside(bideg, u)
    q = field.q
    edge = _right_edge_int(bideg)
    if u.d2 == 0 or u.d2 == edge:
        d2 = u.d2
    else:
        d2 = (u.d2 - 1) % (q - 1) + 1
    if u.c2 == 0:
        c2 = 0
    elif u.c2 == bideg.delta - bideg.eta * u.d2:
        c2 = bideg.delta - bideg.eta * d2
    else:
        c2 = (u.c2 - 1) % (q - 1) + 1
    return LatticePoint(d2, c2)


def representatives(bideg: Bidegree, field: FieldSpec):
    """The representative sets (full, reduced), both ordered lex by (d2, c2).

    The full set holds one point per equivalence class.  The reduced set
    drops the right-edge corner (delta/eta, 0) exactly in the special
    regime, and its size is the code dimension.
    """
    bideg.require_nonempty()
    q = field.q
    edge = _right_edge_int(bideg)
    top = math.floor(bideg.right_edge)
    cols = list(range(min(top, q - 1) + 1))
    if edge is not None and edge > min(top, q - 1):
        cols.append(edge)
    full = []
    for a in cols:
        height = bideg.delta - bideg.eta * a
        betas = list(range(min(height, q))) + [height]
        for b in betas:
            full.append(LatticePoint(a, b))
    if special_regime(bideg, field):
        star = LatticePoint(bideg.delta // bideg.eta, 0)
        reduced = [pt for pt in full if pt != star]
    else:
        reduced = list(full)
    return full, reduced


@dataclass(frozen=True)
class PolygonSummary:
    """Shape quantities of the polygon relative to the field size q.

    A            exact right-edge column (rational, never floored here)
    floor_A      its floor
    special_regime   the four-condition kernel-adjustment flag
    m            last column before folding kicks in: min(floor_A, q-1)
    s            column where the height crosses q: (delta - q)/eta, exact
    s_tilde      s clamped to [-1, m] and floored
    h            extra right-edge points surviving for dT >= 0, q <= dX

    The last four are None for eta = 0, where the counting is a plain
    rectangle and needs none of them.
    """

    A: Fraction
    floor_A: int
    special_regime: bool
    m: Optional[int] = None
    s: Optional[Fraction] = None
    s_tilde: Optional[int] = None
    h: Optional[int] = None


def polygon_summary(bideg: Bidegree, field: FieldSpec) -> PolygonSummary:
    bideg.require_nonempty()
    if bideg.eta == 1:
        raise EtaOneUnsupported("closed-form polygon quantities require eta != 1")
    a = bideg.right_edge
    flag = special_regime(bideg, field)
    if bideg.eta == 0:
        return PolygonSummary(a, math.floor(a), flag)
    q = field.q
    m = min(math.floor(a), q - 1)
    s = Fraction(bideg.delta - q, bideg.eta)
    if s < 0:
        s_tilde = -1
    elif s > m:
        s_tilde = m
    else:
        s_tilde = math.floor(s)
    h = min(bideg.dT, q) + 1 if (bideg.dT >= 0 and q <= bideg.dX) else 0
    return PolygonSummary(a, math.floor(a), flag, m, s, s_tilde, h)
