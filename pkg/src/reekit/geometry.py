"""The Ree geometry G = (P, B), its truncations, and the derived structures.

Blocks are circles (center orbits plus gnarl, q+1 points) and spheres
(derived-subgroup orbits plus gnarl, q^2+1 points).  The derived geometry at
the point at infinity consists of vertical/ordinary lines and planes; on top
of it live parallelism, the Ree unital and the W_p sets.  Everything here is
constructive; the hexagon-side characterizations (circle_from_line,
sphere_from_point) act as independent oracles at q=3.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .field import FieldElement, FieldParams
from .hexagon import HexElement, hexagon_geometry, incident
from .ovoid import (OvoidPoint, compact_to_hex, hex_to_compact, is_absolute,
                    polarity, ovoid, root_subgroup_orbit, transporter_to,
                    u_infty_mul, FieldTriple)


class BlockDataError(RuntimeError):
    """A block fails its structural invariants (e.g. corrupted import)."""


@dataclass(frozen=True)
class Block:
    """A circle or sphere: gnarl plus canonically ordered point set."""

    kind: str  # 'circle' | 'sphere'
    gnarl: OvoidPoint
    points: frozenset[OvoidPoint]

    def __post_init__(self):
        if self.kind not in ("circle", "sphere"):
            raise BlockDataError(f"bad block kind {self.kind!r}")
        if self.gnarl not in self.points:
            raise BlockDataError("gnarl must belong to the block")

    def sorted_points(self) -> list[OvoidPoint]:
        return sorted(self.points, key=OvoidPoint.sort_key)

    def __repr__(self) -> str:
        pts = ",".join(repr(p) for p in self.sorted_points())
        return f"{self.kind}[gnarl={self.gnarl!r}]{{{pts}}}"


def circle(gnarl: OvoidPoint, through: OvoidPoint,
           params: FieldParams) -> Block:
    """Orbit of `through` under Z(U_gnarl), together with the gnarl."""
    if gnarl == through:
        raise ValueError("circle gnarl and through-point must differ")
    orbit = root_subgroup_orbit(gnarl, through, "center", params)
    return Block("circle", gnarl, frozenset(orbit | {gnarl}))


def sphere(gnarl: OvoidPoint, through: OvoidPoint,
           params: FieldParams) -> Block:
    """Orbit of `through` under U'_gnarl, together with the gnarl."""
    if gnarl == through:
        raise ValueError("sphere gnarl and through-point must differ")
    orbit = root_subgroup_orbit(gnarl, through, "derived", params)
    return Block("sphere", gnarl, frozenset(orbit | {gnarl}))


def all_circles(params: FieldParams) -> list[Block]:
    """All circles, deduplicated, in canonical order (q=3 sized workloads)."""
    return _all_blocks(circle, params)


def all_spheres(params: FieldParams) -> list[Block]:
    return _all_blocks(sphere, params)


def _all_blocks(factory, params: FieldParams) -> list[Block]:
    seen: dict[frozenset, Block] = {}
    pts = ovoid(params)
    for gnarl in pts:
        for through in pts:
            if through == gnarl:
                continue
            b = factory(gnarl, through, params)
            seen.setdefault(b.points, b)
    return sorted(seen.values(),
                  key=lambda b: (b.gnarl.sort_key(),
                                 [p.sort_key() for p in b.sorted_points()]))


# --------------------------------------------------------------------------
# gnarl recomputation (independent of the stored field)

def gnarl_of(b: Block, ctx: "ReeContext") -> OvoidPoint:
    """Recompute the gnarl from the point set alone: the unique x such that
    the rest of the block is a single Z(U_x)-orbit (circles) or U'_x-orbit
    (spheres).

    The alternative sphere recipe -- intersecting all contained circles --
    works only for |K| > 3: at q=3 a sphere contains circles that avoid its
    gnarl entirely (see the same-gnarl checks in the geometry suite), so the
    orbit criterion is used uniformly.
    """
    which = "center" if b.kind == "circle" else "derived"
    candidates = []
    for x in b.points:
        rest = b.points - {x}
        seed = next(iter(rest))
        if root_subgroup_orbit(x, seed, which, ctx.params) == rest:
            candidates.append(x)
    if len(candidates) != 1:
        raise BlockDataError(
            f"{b.kind} has {len(candidates)} gnarl candidates; data corrupted")
    return candidates[0]


# --------------------------------------------------------------------------
# hexagon-side characterizations (exhaustive oracles at q=3)

class ReeContext:
    """Caches the ovoid, block families and hexagon data for one field."""

    def __init__(self, params: FieldParams):
        self.params = params
        self.points = ovoid(params)
        self.point_index = {p: i for i, p in enumerate(self.points)}
        self._circles: list[Block] | None = None
        self._spheres: list[Block] | None = None
        self._hex = None
        self._absolute: dict | None = None

    @property
    def circles(self) -> list[Block]:
        if self._circles is None:
            self._circles = all_circles(self.params)
        return self._circles

    @property
    def spheres(self) -> list[Block]:
        if self._spheres is None:
            self._spheres = all_spheres(self.params)
        return self._spheres

    @property
    def hexagon(self):
        if self._hex is None:
            self._hex = hexagon_geometry(self.params)
        return self._hex

    @property
    def absolute(self) -> dict:
        """Hexagon images of the ovoid and the absolute lines."""
        if self._absolute is None:
            hexes = {p: compact_to_hex(p, self.params) for p in self.points}
            self._absolute = {
                "points": hexes,
                "point_set": set(hexes.values()),
                "lines": {polarity(h) for h in hexes.values()},
            }
        return self._absolute


@lru_cache(maxsize=2)
def ree_context(params: FieldParams) -> ReeContext:
    return ReeContext(params)


def circle_from_line(M: HexElement, ctx: ReeContext) -> Block | None:
    """The circle cut out by a non-absolute line through no absolute point."""
    hx = ctx.hexagon
    ab = ctx.absolute
    if M in ab["lines"]:
        return None
    dist = hx.bfs_distances(hx.vertex(M))
    pts = []
    gnarl = None
    for p in ctx.points:
        h = ab["points"][p]
        if dist[hx.vertex(h)] == 1:
            return None  # an absolute point lies on M
        if dist[hx.vertex(h)] == 3:
            pts.append(p)
        if dist[hx.vertex(polarity(h))] == 2:  # the absolute line meets M
            if gnarl is not None:
                raise BlockDataError(f"two gnarl candidates for {M!r}")
            gnarl = p
    if gnarl is None:
        raise BlockDataError(f"no gnarl for line {M!r}")
    return Block("circle", gnarl, frozenset(pts))


def sphere_from_point(p: HexElement, ctx: ReeContext) -> Block | None:
    """The sphere of absolute points not opposite p, for p on an absolute
    line but not absolute itself."""
    hx = ctx.hexagon
    ab = ctx.absolute
    if p in ab["point_set"]:
        return None
    if not any(incident(p, L) for L in ab["lines"] if abs(p.arity - L.arity) <= 1):
        return None
    dist = hx.bfs_distances(hx.vertex(p))
    pts = []
    gnarl = None
    for x in ctx.points:
        d = dist[hx.vertex(ab["points"][x])]
        if d < 6:
            pts.append(x)
        if d == 2:
            if gnarl is not None:
                raise BlockDataError(f"two gnarl candidates for {p!r}")
            gnarl = x
    if gnarl is None:
        raise BlockDataError(f"no gnarl for point {p!r}")
    return Block("sphere", gnarl, frozenset(pts))


# --------------------------------------------------------------------------
# the derived geometry at the point at infinity

@dataclass(frozen=True)
class DerivedObject:
    """Vertical/ordinary line or plane of the derived geometry."""

    variant: str  # 'vertical_line' | 'ordinary_line' |
    #               'vertical_plane' | 'ordinary_plane'
    label: tuple[FieldElement, ...]
    points: frozenset[OvoidPoint]

    def __repr__(self) -> str:
        inner = ",".join(c.digits() for c in self.label)
        return f"{self.variant}({inner})"


def vertical_line(a: FieldElement, ap: FieldElement,
                  params: FieldParams) -> DerivedObject:
    """L_{a,a'} = {(a, a', t)}."""
    pts = frozenset(OvoidPoint.of(a, ap, t) for t in params.elements())
    return DerivedObject("vertical_line", (a, ap), pts)


def ordinary_line(a: FieldElement, ap: FieldElement, app: FieldElement,
                  params: FieldParams) -> DerivedObject:
    """C_{(a,a',a'')} = {(a+x, a'+a^theta x, a''+(a'-a^(1+theta))x-x^(2+theta))}."""
    ta = a.theta()
    slope = ap - a * ta
    pts = frozenset(
        OvoidPoint.of(a + x, ap + ta * x, app + slope * x - x * x * x.theta())
        for x in params.elements())
    return DerivedObject("ordinary_line", (a, ap, app), pts)


def vertical_plane(a: FieldElement, params: FieldParams) -> DerivedObject:
    """P_a = {(a, t', t'')}."""
    pts = frozenset(OvoidPoint.of(a, tp, tpp)
                    for tp in params.elements() for tpp in params.elements())
    return DerivedObject("vertical_plane", (a,), pts)


def _base_ordinary_plane_points(params: FieldParams):
    """The fractional parametrization of S_{(0,0,0)}."""
    zero = params.zero
    pts = {OvoidPoint.of(zero, zero, zero)}
    for xp in params.elements():
        for xpp in params.elements():
            if not xp and not xpp:
                continue
            d = (xpp * xpp + xp * xp.theta()).inverse()
            pts.add(OvoidPoint.of((xpp.theta() - xp * xpp) * d,
                                  -(xp.theta()) * d, -xpp * d))
    return pts


def ordinary_plane(a: FieldElement, ap: FieldElement, app: FieldElement,
                   params: FieldParams) -> DerivedObject:
    """S_{(a,a',a'')}: the base fractional set translated by (a,a',a'')."""
    g = (a, ap, app)
    pts = frozenset(OvoidPoint(u_infty_mul(p.triple, g))
                    for p in _base_ordinary_plane_points(params))
    return DerivedObject("ordinary_plane", (a, ap, app), pts)


def are_parallel(c1: DerivedObject, c2: DerivedObject) -> bool:
    """Algebraic parallelism criterion for ordinary lines: equal gnarl first
    coordinates."""
    if c1.variant != "ordinary_line" or c2.variant != "ordinary_line":
        raise ValueError("are_parallel expects two ordinary lines")
    return c1.label[0] == c2.label[0]


def are_parallel_definitional(c1: DerivedObject, c2: DerivedObject) -> bool:
    """The definitional test: the vertical lines meeting c1 are exactly those
    meeting c2, or no vertical line meets both."""
    if c1.variant != "ordinary_line" or c2.variant != "ordinary_line":
        raise ValueError("expects two ordinary lines")
    shadows1 = {p.triple[:2] for p in c1.points}
    shadows2 = {p.triple[:2] for p in c2.points}
    return shadows1 == shadows2 or not (shadows1 & shadows2)


# --------------------------------------------------------------------------
# the Ree unital

def _affine_unital_points(a: FieldElement, c: FieldElement,
                          params: FieldParams) -> frozenset[OvoidPoint]:
    """The affine part of the base block through (inf) and (a, 0, c)."""
    return frozenset(OvoidPoint.of(a, t, c - a * t) for t in params.elements())


def unital_block(p: OvoidPoint, q: OvoidPoint,
                 params: FieldParams) -> frozenset[OvoidPoint]:
    """The unique Ree-unital block through two distinct points."""
    if p == q:
        raise ValueError("unital block needs two distinct points")
    if q.is_infinity:
        p, q = q, p
    if p.is_infinity:
        a, ap, app = q.triple
        # (a, a', a'') lies on the base block with parameter c = a'' + a a'
        return _affine_unital_points(a, app + a * ap, params) | {p}
    t = transporter_to(p, params)
    moved = t.apply_inv(q)
    base = unital_block(OvoidPoint.infinity(), moved, params)
    return frozenset(t.apply(x) for x in base)


def unital_blocks(params: FieldParams) -> list[frozenset[OvoidPoint]]:
    """All blocks of the Ree unital (63 at q=3), canonically ordered."""
    pts = ovoid(params)
    seen: set[frozenset[OvoidPoint]] = set()
    for i, p in enumerate(pts):
        for q in pts[i + 1:]:
            seen.add(unital_block(p, q, params))
    return sorted(seen, key=lambda b: sorted(x.sort_key() for x in b))


# --------------------------------------------------------------------------
# the W_p sets

def w_set(p: OvoidPoint, params: FieldParams) -> frozenset[OvoidPoint]:
    """W_p: the vertical plane through p meets the ordinary plane with
    gnarl p."""
    if p.is_infinity:
        raise ValueError("w_set is defined for affine points only")
    a, ap, app = p.triple
    vp = vertical_plane(a, params)
    op = ordinary_plane(a, ap, app, params)
    return vp.points & op.points
