"""The polarity, the Ree-Tits ovoid and the Moufang-set root groups.

The ovoid is handled in three coordinate systems: 5-coordinate hexagon
points, compact triples (a, a', a''), and normalized projective 7-tuples.
Root groups are available at the point at infinity (triple multiplication),
at (0,0,0) (explicit 7x7 matrices acting on row vectors), and at arbitrary
base points via conjugation with a deterministic transporter word.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Literal

from .field import FieldDomainError, FieldElement, FieldParams
from .hexagon import (HexElement, IncidenceUsageError, ProjPoint,
                      infinity_line, infinity_point, line, point)
from .linalg import Matrix, mat_inv, vec_mat


class OvoidConsistencyError(RuntimeError):
    """A matrix action left the ovoid; must never fire on valid data."""


@dataclass(frozen=True)
class OvoidPoint:
    """Point of the ovoid: the point at infinity or a compact triple."""

    triple: tuple[FieldElement, FieldElement, FieldElement] | None

    @staticmethod
    def infinity() -> "OvoidPoint":
        return OvoidPoint(None)

    @staticmethod
    def of(a: FieldElement, ap: FieldElement, app: FieldElement) -> "OvoidPoint":
        return OvoidPoint((a, ap, app))

    @property
    def is_infinity(self) -> bool:
        return self.triple is None

    def sort_key(self):
        if self.triple is None:
            return (0,)
        a, ap, app = self.triple
        return (1, a.coeffs, ap.coeffs, app.coeffs)

    def __repr__(self) -> str:
        if self.triple is None:
            return "(inf)"
        return "(" + ",".join(c.digits() for c in self.triple) + ")"


# --------------------------------------------------------------------------
# polarity and absolute points

def polarity(el: HexElement) -> HexElement:
    """The polarity: theta on K-type entries, theta inverse on K'-type ones.

    Displayed for 5-coordinate elements; on shorter tuples the same
    alternating pattern is applied (validated against incidence at q=3).
    """
    i = el.arity
    out = []
    for j, c in enumerate(el.coords):
        k_type = (i - 1 - j) % 2 == 0
        if el.kind == "line":
            k_type = not k_type
        out.append(c.theta() if k_type else c.theta_inv())
    return HexElement("line" if el.kind == "point" else "point", tuple(out))


def is_absolute(p: HexElement) -> bool:
    """True iff the point is incident with its polar line.

    The point at infinity always is; a point of arity 1..4 never is, since
    its polar line has the same arity and equal arities below 5 are never
    incident.  For 5-coordinate points the closed-form conditions are used.
    """
    if p.kind != "point":
        raise IncidenceUsageError("is_absolute expects a point")
    if p.arity == 0:
        return True
    if p.arity != 5:
        return False
    a, l, ap, lp, app = p.coords
    a3 = a * a * a
    ta = a.theta()
    return (l == app.theta() - a3 * ta
            and lp == a3 * ta * ta + ap.theta() + ta * app.theta())


# --------------------------------------------------------------------------
# coordinate dictionaries

def compact_to_hex(c: OvoidPoint, params: FieldParams) -> HexElement:
    """Compact triple -> 5-coordinate absolute point (infinity -> infinity)."""
    if c.is_infinity:
        return infinity_point()
    c1, c2, c3 = c.triple
    a, app = c1, c2
    ap = c3 + c1 * c2
    a3 = a * a * a
    ta = a.theta()
    l = app.theta() - a3 * ta
    lp = a3 * ta * ta + ap.theta() + ta * app.theta()
    return point(a, l, ap, lp, app)


def hex_to_compact(p: HexElement) -> OvoidPoint:
    """Inverse dictionary on absolute points."""
    if p.arity == 0:
        return OvoidPoint.infinity()
    a, _, ap, _, app = p.coords
    return OvoidPoint.of(a, app, ap - a * app)


def f1(a: FieldElement, ap: FieldElement, app: FieldElement) -> FieldElement:
    ta, tap, tapp = a.theta(), ap.theta(), app.theta()
    a2 = a * a
    return (-(a2 * a2 * ta * ta) - a * tapp + a * ta * tap + app * app
            + ap * tap - ap * a2 * a * ta - a2 * ap * ap)


def f2(a: FieldElement, ap: FieldElement, app: FieldElement) -> FieldElement:
    return -(a * a * a * a.theta()) + ap.theta() - a * app + a * a * ap


def f3(a: FieldElement, ap: FieldElement, app: FieldElement) -> FieldElement:
    ta = a.theta()
    return (-(a * a * a * ta * ta) - app.theta() + ta * ap.theta()
            + ap * app + a * ap * ap)


def compact_to_proj(c: OvoidPoint, params: FieldParams) -> ProjPoint:
    """Compact triple -> normalized projective 7-tuple of the ovoid."""
    zero, one = params.zero, params.one
    if c.is_infinity:
        return ProjPoint((one, zero, zero, zero, zero, zero, zero))
    a, ap, app = c.triple
    return ProjPoint((f1(a, ap, app), -ap, -a, -app, one,
                      f2(a, ap, app), f3(a, ap, app)))


def proj_to_compact(pp: ProjPoint, params: FieldParams) -> OvoidPoint | None:
    """Invert the ovoid parametrization; None if the point is not on it."""
    coords = pp.coords
    zero, one = params.zero, params.one
    if coords == (one, zero, zero, zero, zero, zero, zero):
        return OvoidPoint.infinity()
    c4 = coords[4]
    if not c4:
        return None
    scale = c4.inverse()
    coords = tuple(scale * c for c in coords)
    a, ap, app = -coords[2], -coords[1], -coords[3]
    if (coords[0] == f1(a, ap, app) and coords[5] == f2(a, ap, app)
            and coords[6] == f3(a, ap, app)):
        return OvoidPoint.of(a, ap, app)
    return None


def ovoid(params: FieldParams) -> list[OvoidPoint]:
    """All q^3 + 1 ovoid points; infinity first, then triples in lex order."""
    pts = [OvoidPoint.infinity()]
    for a, ap, app in itertools.product(params.elements(), params.elements(),
                                        params.elements()):
        pts.append(OvoidPoint.of(a, ap, app))
    return pts


# --------------------------------------------------------------------------
# the root group at infinity

FieldTriple = tuple[FieldElement, FieldElement, FieldElement]


def u_infty_mul(t1: FieldTriple, t2: FieldTriple) -> FieldTriple:
    """Root-group multiplication at infinity (also its action on triples)."""
    x, x1, x2 = t1
    y, y1, y2 = t2
    return (x + y,
            x1 + y1 + x * y.theta(),
            x2 + y2 + x * y1 - x1 * y - x * y * y.theta())


def u_infty_inv(t: FieldTriple) -> FieldTriple:
    x, x1, x2 = t
    return (-x, -x1 + x * x.theta(), -x2)


def u_infty_apply(g: FieldTriple, p: OvoidPoint) -> OvoidPoint:
    if p.is_infinity:
        return p
    return OvoidPoint(u_infty_mul(p.triple, g))


# --------------------------------------------------------------------------
# the root group at (0,0,0): explicit matrices on projective row vectors

def u_zero_matrix(x: FieldElement, xp: FieldElement,
                  xpp: FieldElement) -> Matrix:
    """The displayed 7x7 matrix of u^{(0,0,0)}_{(x,x',x'')}."""
    params = x.params
    zero, one = params.zero, params.one
    tx, txp, txpp = x.theta(), xp.theta(), xpp.theta()
    x2 = x * x
    p_ = x2 * x * tx - txp - x * xpp - x2 * xp
    # The x'x'' term is required for the family to be multiplicatively closed
    # and to preserve the ovoid; it is the unique weight-(3+2*theta) monomial
    # in x', x'' alone, and is pinned down by products of elements with
    # x' = 0 or x'' = 0 (which need no such cross term).
    q_ = (txpp + tx * txp - x * xp * xp - x2 * tx * xp - x * tx * xpp
          - x2 * x * tx * tx + xp * xpp)
    r_ = xpp - x * xp + x2 * tx
    s_ = xp * xp - x * tx * xp - tx * xpp
    return [
        [one, f2(x, xp, xpp), f3(x, xp, xpp), xpp, f1(x, xp, xpp), -xp, -x],
        [zero, one, -tx, zero, xp - x * tx, zero, zero],
        [zero, zero, one, zero, x, zero, zero],
        [zero, -x, xp, one, -xpp, zero, zero],
        [zero, zero, zero, zero, one, zero, zero],
        [zero, x2, -xpp - x * xp, x, p_, one, zero],
        [zero, r_, s_, -xp + x * tx, q_, tx, one],
    ]


def u_zero_params_of_matrix(m: Matrix) -> FieldTriple:
    """Read the (x, x', x'') parameters back off a u_zero matrix."""
    return (-m[3][1], m[3][2], -m[3][4])


def u_zero_inv_params(t: FieldTriple) -> FieldTriple:
    """Parameters of the inverse u_zero element, via matrix inversion."""
    params = t[0].params
    inv = mat_inv(u_zero_matrix(*t), params)
    back = u_zero_params_of_matrix(inv)
    if u_zero_matrix(*back) != inv:
        raise OvoidConsistencyError("u_zero inverse left the matrix group")
    return back


def u_zero_apply(g: FieldTriple, p: OvoidPoint,
                 params: FieldParams) -> OvoidPoint:
    """Action of a u_zero element on the ovoid, through the embedding."""
    proj = compact_to_proj(p, params)
    image = ProjPoint(vec_mat(list(proj.coords), u_zero_matrix(*g), params))
    out = proj_to_compact(image, params)
    if out is None:
        raise OvoidConsistencyError(
            f"u_zero image of {p!r} is off the ovoid: {image!r}")
    return out


# --------------------------------------------------------------------------
# root-group elements and subgroups

Base = Literal["infinity", "zero"]
Which = Literal["full", "derived", "center"]


@dataclass(frozen=True)
class RootGroupElt:
    """Element of the root group at infinity or at (0,0,0)."""

    base: Base
    params: FieldTriple

    def apply(self, p: OvoidPoint, field: FieldParams) -> OvoidPoint:
        if self.base == "infinity":
            return u_infty_apply(self.params, p)
        return u_zero_apply(self.params, p, field)

    def inverse(self) -> "RootGroupElt":
        if self.base == "infinity":
            return RootGroupElt("infinity", u_infty_inv(self.params))
        return RootGroupElt("zero", u_zero_inv_params(self.params))


def subgroup_elements(base: Base, which: Which,
                      params: FieldParams) -> list[RootGroupElt]:
    """The q^3 / q^2 / q parameter triples of the full, derived and central
    subgroups; for |K|=3 'derived' means the order-3-generated subgroup."""
    zero = params.zero
    elems = list(params.elements())
    if which == "full":
        triples = [(a, b, c) for a in elems for b in elems for c in elems]
    elif which == "derived":
        triples = [(zero, b, c) for b in elems for c in elems]
    elif which == "center":
        triples = [(zero, zero, c) for c in elems]
    else:
        raise ValueError(f"unknown subgroup selector {which!r}")
    return [RootGroupElt(base, t) for t in triples]


# --------------------------------------------------------------------------
# transporters and root groups at arbitrary base points

class Transporter:
    """Deterministic word in u_zero and u_infty elements with a fixed target.

    apply() maps the point at infinity to the target; apply_inv() undoes it.
    """

    def __init__(self, steps: list[RootGroupElt], field: FieldParams):
        self.steps = steps
        self.field = field
        self._inv_steps = [s.inverse() for s in reversed(steps)]

    def apply(self, p: OvoidPoint) -> OvoidPoint:
        for s in self.steps:
            p = s.apply(p, self.field)
        return p

    def apply_inv(self, p: OvoidPoint) -> OvoidPoint:
        for s in self._inv_steps:
            p = s.apply(p, self.field)
        return p


def transporter_to(target: OvoidPoint, params: FieldParams) -> Transporter:
    """Canonical word moving the point at infinity onto the target."""
    if target.is_infinity:
        return Transporter([], params)
    zero, one = params.zero, params.one
    g0 = RootGroupElt("zero", (zero, zero, one))
    y = g0.apply(OvoidPoint.infinity(), params)
    h1 = RootGroupElt("infinity", u_infty_inv(y.triple))
    steps = [g0, h1]
    origin = (zero, zero, zero)
    if target.triple != origin:
        steps.append(RootGroupElt("infinity", target.triple))
    return Transporter(steps, params)


def root_subgroup_orbit(gnarl: OvoidPoint, through: OvoidPoint,
                        which: Which, params: FieldParams) -> set[OvoidPoint]:
    """Orbit of `through` under the chosen subgroup of the root group at
    `gnarl`, realized by conjugation with the canonical transporter."""
    if gnarl == through:
        raise ValueError("orbit base point must differ from the gnarl")
    subgroup = subgroup_elements("infinity", which, params)
    if gnarl.is_infinity:
        return {g.apply(through, params) for g in subgroup}
    t = transporter_to(gnarl, params)
    seed = t.apply_inv(through)
    return {t.apply(g.apply(seed, params)) for g in subgroup}


# --------------------------------------------------------------------------
# known collineations

@dataclass(frozen=True)
class KnownCollineation:
    """(x,y,z) -> (l x^s, l^(1+theta) y^s, l^(2+theta) z^s), fixing infinity;
    s is the sigma_power-th power of the Frobenius x -> x^3."""

    scale: FieldElement
    sigma_power: int

    def __post_init__(self):
        if not self.scale:
            raise FieldDomainError("collineation scale must be nonzero")

    def _sigma(self, x: FieldElement) -> FieldElement:
        for _ in range(self.sigma_power % x.params.degree):
            x = x * x * x
        return x

    def apply(self, p: OvoidPoint) -> OvoidPoint:
        if p.is_infinity:
            return p
        x, y, z = p.triple
        l = self.scale
        tl = l.theta()
        return OvoidPoint.of(l * self._sigma(x),
                             l * tl * self._sigma(y),
                             l * l * tl * self._sigma(z))


def known_collineation(scale: FieldElement,
                       sigma_power: int = 0) -> KnownCollineation:
    return KnownCollineation(scale, sigma_power)
