"""Verification suites: deterministic batches of named checks per module.

Each check is exhaustive at q=3 and seeded-random at larger fields; a run
produces an order-stable list of CheckReport values regardless of the
REEKIT_THREADS setting.  Failing checks carry a minimal witness in export
syntax.
"""
from __future__ import annotations

import itertools
import os
import random
import time
import zlib
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable

from .field import FieldParams
from .hexagon import (HexElement, hexagon_geometry, incident, line, point,
                      point_in_line_span, to_projective)
from .geometry import (Block, DerivedObject, are_parallel,
                       are_parallel_definitional, circle, circle_from_line,
                       gnarl_of, ordinary_line, ordinary_plane, ree_context,
                       sphere_from_point, unital_blocks, vertical_line,
                       vertical_plane, w_set)
from .ovoid import (OvoidPoint, compact_to_hex, compact_to_proj,
                    hex_to_compact, is_absolute, known_collineation, ovoid,
                    polarity, u_infty_apply, u_infty_inv, u_infty_mul,
                    u_zero_apply, u_zero_matrix, u_zero_params_of_matrix)
from .linalg import mat_mul
from .symbolic import ThetaExponent, FormalPoly, run_identity_checks

SUITE_NAMES = ("field", "identities", "hexagon", "ovoid", "geometry")


@dataclass(frozen=True)
class CheckReport:
    name: str
    scope: str  # 'exhaustive' | 'symbolic' | 'sampled(seed=N,trials=M)'
    status: str  # 'pass' | 'fail'
    witness: str | None
    wall_time: float
    detail: str | None = None

    @property
    def ok(self) -> bool:
        return self.status == "pass"

    def line(self, show_time: bool = True) -> str:
        out = f"{self.name:<44} {'PASS' if self.ok else 'FAIL'} [{self.scope}]"
        if show_time:
            out += f" {self.wall_time:.2f}s"
        if self.detail:
            out += f" {self.detail}"
        if self.witness:
            out += f" witness: {self.witness}"
        return out

    def to_dict(self) -> dict:
        return {"name": self.name, "scope": self.scope, "status": self.status,
                "witness": self.witness, "wall_time": round(self.wall_time, 3),
                "detail": self.detail}


@dataclass(frozen=True)
class Check:
    name: str
    scope: str
    fn: Callable[[], tuple[str | None, str | None]]  # -> (witness, detail)


def _sampled(seed: int, trials: int) -> str:
    return f"sampled(seed={seed},trials={trials})"


def _rng(seed: int, name: str) -> random.Random:
    return random.Random(seed * (1 << 32) + zlib.crc32(name.encode()))


def _simple(fn: Callable[[], str | None]) -> Callable[[], tuple]:
    return lambda: (fn(), None)


# ==========================================================================
# field suite

def field_checks(params: FieldParams, seed: int, trials: int) -> list[Check]:
    elems = list(params.elements())
    exhaustive_pairs = params.q <= 27

    def theta_square():
        for x in elems:
            if x.theta().theta() != x * x * x:
                return f"x={x.digits()}"
        return None

    def theta_homomorphism():
        if exhaustive_pairs:
            pairs = itertools.product(elems, elems)
        else:
            rng = _rng(seed, "field.theta_homomorphism")
            pairs = ((params.random_element(rng), params.random_element(rng))
                     for _ in range(10 ** 4))
        for x, y in pairs:
            if (x + y).theta() != x.theta() + y.theta():
                return f"additivity x={x.digits()} y={y.digits()}"
            if (x * y).theta() != x.theta() * y.theta():
                return f"multiplicativity x={x.digits()} y={y.digits()}"
        return None

    def theta_inv_roundtrip():
        for x in elems:
            if x.theta().theta_inv() != x:
                return f"x={x.digits()}"
        return None

    def field_axioms():
        rng = _rng(seed, "field.axioms")
        for _ in range(trials):
            x, y, z = (params.random_element(rng) for _ in range(3))
            if (x + y) + z != x + (y + z):
                return f"add-assoc {x.digits()},{y.digits()},{z.digits()}"
            if (x * y) * z != x * (y * z):
                return f"mul-assoc {x.digits()},{y.digits()},{z.digits()}"
            if x * (y + z) != x * y + x * z:
                return f"distributivity {x.digits()},{y.digits()},{z.digits()}"
        return None

    pair_scope = ("exhaustive" if exhaustive_pairs
                  else _sampled(seed, 10 ** 4))
    return [
        Check("field.theta_square_is_cube", "exhaustive",
              _simple(theta_square)),
        Check("field.theta_homomorphism", pair_scope,
              _simple(theta_homomorphism)),
        Check("field.theta_inv_roundtrip", "exhaustive",
              _simple(theta_inv_roundtrip)),
        Check("field.axioms_random_triples", _sampled(seed, trials),
              _simple(field_axioms)),
    ]


# ==========================================================================
# identities suite (symbolic plus numeric re-verification)

def _numeric_identity_checkers():
    """env -> witness, one per symbolic identity; env maps x,x1,x2,y,... ."""
    def triple(env, p):
        return (env[p], env[p + "1"], env[p + "2"])

    def commutator(u, v):
        return u_infty_mul(u_infty_mul(u_infty_inv(u), u_infty_inv(v)),
                           u_infty_mul(u, v))

    def display(u, v):
        zero = u[0] - u[0]
        return (zero,
                u[0] * v[0].theta() - v[0] * u[0].theta(),
                u[1] * v[0] - u[0] * v[1] - u[0] * v[0] * v[0].theta()
                + v[0] * u[0] * u[0].theta())

    def theta_square(env):
        x = env["x"]
        return None if x.theta().theta() == x * x * x else "theta^2 != cube"

    def cube_add(env):
        x, y = env["x"], env["y"]
        return None if (x + y) ** 3 == x ** 3 + y ** 3 else "cube not additive"

    def inverse(env):
        u = triple(env, "x")
        zero = u[0] - u[0]
        got = u_infty_mul(u, u_infty_inv(u))
        return None if got == (zero, zero, zero) else "u * u^-1 != 1"

    def assoc(env):
        u, v, w = triple(env, "x"), triple(env, "y"), triple(env, "z")
        lhs = u_infty_mul(u_infty_mul(u, v), w)
        rhs = u_infty_mul(u, u_infty_mul(v, w))
        return None if lhs == rhs else "associativity broken"

    def comm_display(env):
        u, v = triple(env, "x"), triple(env, "y")
        return (None if commutator(u, v) == display(u, v)
                else "commutator != display")

    def comm_mod_center(env):
        u, v = triple(env, "x"), triple(env, "y")
        com, disp = commutator(u, v), display(u, v)
        correction = (u[0] + v[0]) * disp[1]
        ok = (com[0] == disp[0] and com[1] == disp[1]
              and disp[2] - com[2] == correction)
        return None if ok else "central correction mismatch"

    def derived(env):
        zero = env["x1"] - env["x1"]
        u = (zero, env["x1"], env["x2"])
        v = triple(env, "y")
        got = commutator(u, v)
        return (None if got == (zero, zero, env["x1"] * env["y"])
                else "derived commutator mismatch")

    def cube(env):
        g = triple(env, "x")
        got = u_infty_mul(u_infty_mul(g, g), g)
        a = env["x"]
        zero = a - a
        return (None if got == (zero, zero, -(a * a * a.theta()))
                else "cube formula mismatch")

    return {
        "theta_square_is_cube": (("x",), theta_square),
        "cube_additivity_char3": (("x", "y"), cube_add),
        "group_inverse": (("x", "x1", "x2"), inverse),
        "group_associativity": (tuple(p + s for p in "xyz"
                                      for s in ("", "1", "2")), assoc),
        "commutator_display": (tuple(p + s for p in "xy"
                                     for s in ("", "1", "2")), comm_display),
        "commutator_display_mod_center": (
            tuple(p + s for p in "xy" for s in ("", "1", "2")),
            comm_mod_center),
        "derived_vs_full_commutator": (("x1", "x2", "y", "y1", "y2"), derived),
        "cube_formula": (("x", "x1", "x2"), cube),
    }


def identities_checks(params: FieldParams, seed: int,
                      trials: int) -> list[Check]:
    checks = []

    def monoid_law():
        for m in range(11):
            for n in range(11):
                twice = ThetaExponent(m, n).theta().theta()
                if (twice.m, twice.n) != (3 * m, 3 * n):
                    return f"(m,n)=({m},{n})"
        return None

    def ring_endomorphism():
        rng = _rng(seed, "identities.ring_endomorphism")

        def random_poly():
            p = FormalPoly.zero()
            for _ in range(rng.randrange(1, 5)):
                mono = FormalPoly.const(rng.randrange(1, 3))
                for v in ("x", "y"):
                    m, n = rng.randrange(4), rng.randrange(4)
                    if (m, n) != (0, 0):
                        mono = mono * FormalPoly.var(v, m, n)
                p = p + mono
            return p

        for i in range(200):
            p, q = random_poly(), random_poly()
            if (p + q).theta() != p.theta() + q.theta():
                return f"additivity trial {i}"
            if (p * q).theta() != p.theta() * q.theta():
                return f"multiplicativity trial {i}"
        return None

    checks.append(Check("identities.exponent_monoid_law", "exhaustive",
                        _simple(monoid_law)))
    checks.append(Check("identities.apply_theta_ring_endomorphism",
                        _sampled(seed, 200), _simple(ring_endomorphism)))

    symbolic_results = {r.name: r for r in run_identity_checks()}
    for name, result in symbolic_results.items():
        def sym_fn(r=result):
            detail = f"(lhs {r.lhs_terms} terms, rhs {r.rhs_terms} terms)"
            return (None if r.ok else "canonical forms differ", detail)
        checks.append(Check(f"identities.symbolic.{name}", "symbolic", sym_fn))

    numeric = _numeric_identity_checkers()
    elems = list(params.elements())
    exhaustive = params.q == 3
    for name, (variables, checker) in numeric.items():
        def num_fn(variables=variables, checker=checker, name=name):
            if exhaustive and len(variables) <= 9:
                assignments = itertools.product(
                    *(elems for _ in variables))
            else:
                rng = _rng(seed, f"identities.numeric.{name}")
                assignments = ([params.random_element(rng)
                                for _ in variables]
                               for _ in range(trials))
            for values in assignments:
                env = dict(zip(variables, values))
                w = checker(env)
                if w is not None:
                    sub = ",".join(f"{v}={env[v].digits()}"
                                   for v in variables)
                    return f"{w} at {sub}"
            return None
        scope = ("exhaustive" if exhaustive and len(variables) <= 9
                 else _sampled(seed, trials))
        checks.append(Check(f"identities.numeric.{name}", scope,
                            _simple(num_fn)))
    return checks


# ==========================================================================
# hexagon suite

def _random_five_line(params: FieldParams, rng) -> HexElement:
    return line(*(params.random_element(rng) for _ in range(5)))

def _incident_point_on(L: HexElement, a, params: FieldParams) -> HexElement:
    """The unique 5-coordinate point on the 5-coordinate line L with first
    coordinate a (solved from the four psi equations)."""
    k, b, kp, bp, kpp = L.coords
    a3 = a * a * a
    app = b + a * k
    l = kpp - a3 * k
    ap = bp - a * a * k - a * app
    lp = kp - a3 * k * k + k * l
    return point(a, l, ap, lp, app)


def hexagon_checks(params: FieldParams, seed: int,
                   trials: int) -> list[Check]:
    checks = []
    if params.q == 3:
        def axioms():
            report = hexagon_geometry(params).check_axioms()
            detail = (f"(points={report['num_points']} girth={report['girth']}"
                      f" diameter={report['diameter']}"
                      f" degrees={report['degrees']})")
            witness = None if report["ok"] else "; ".join(report["witnesses"])
            return witness, detail

        def span_all_incident():
            hx = hexagon_geometry(params)
            for j, L in enumerate(hx.lines):
                for i in hx.adj[hx.n + j]:
                    p = hx.points[i]
                    if not point_in_line_span(p, L, params):
                        return f"P {p!r} not in span of L {L!r}"
            return None

        def psi_vs_span():
            hx = hexagon_geometry(params)
            five_pts = [p for p in hx.points if p.arity == 5]
            five_lns = [L for L in hx.lines if L.arity == 5]
            for p in five_pts:
                for L in five_lns:
                    if incident(p, L) != point_in_line_span(p, L, params):
                        return f"disagreement at P {p!r} / L {L!r}"
            return None

        checks += [
            Check("hexagon.axioms", "exhaustive", axioms),
            Check("hexagon.embedding_span_incident", "exhaustive",
                  _simple(span_all_incident)),
            Check("hexagon.psi_vs_span_five_coords", "exhaustive",
                  _simple(psi_vs_span)),
        ]
    else:
        def span_prefix_pairs():
            rng = _rng(seed, "hexagon.span_prefix")
            elems = list(params.elements())
            for _ in range(trials):
                n = rng.randrange(5)
                coords = tuple(rng.choice(elems) for _ in range(n + 1))
                if rng.randrange(2):
                    p = HexElement("point", coords)
                    L = HexElement("line", coords[:n])
                else:
                    p = HexElement("point", coords[:n])
                    L = HexElement("line", coords)
                if not incident(p, L):
                    return f"prefix pair not incident: {p!r} / {L!r}"
                if not point_in_line_span(p, L, params):
                    return f"P {p!r} not in span of L {L!r}"
            return None

        def span_psi_pairs():
            rng = _rng(seed, "hexagon.span_psi")
            for _ in range(trials):
                L = _random_five_line(params, rng)
                p = _incident_point_on(L, params.random_element(rng), params)
                if not incident(p, L):
                    return f"solved point not incident: {p!r} / {L!r}"
                if not point_in_line_span(p, L, params):
                    return f"P {p!r} not in span of L {L!r}"
            return None

        checks += [
            Check("hexagon.embedding_span_prefix_pairs",
                  _sampled(seed, trials), _simple(span_prefix_pairs)),
            Check("hexagon.embedding_span_psi_pairs",
                  _sampled(seed, trials), _simple(span_psi_pairs)),
        ]
    return checks


# ==========================================================================
# ovoid suite

def ovoid_checks(params: FieldParams, seed: int, trials: int) -> list[Check]:
    checks = []
    elems = list(params.elements())
    zero = params.zero
    origin = OvoidPoint.of(zero, zero, zero)
    pts = ovoid(params)
    affine = pts[1:]

    def random_point(rng) -> OvoidPoint:
        return OvoidPoint.of(*(params.random_element(rng) for _ in range(3)))

    if params.q == 3:
        def rho_involution():
            hx = hexagon_geometry(params)
            for el in hx.points + hx.lines:
                if polarity(polarity(el)) != el:
                    return f"rho^2 moves {el!r}"
            return None

        def rho_incidence():
            hx = hexagon_geometry(params)
            for j, L in enumerate(hx.lines):
                for i in hx.adj[hx.n + j]:
                    if not incident(polarity(L), polarity(hx.points[i])):
                        return f"rho breaks incidence {hx.points[i]!r}/{L!r}"
            return None

        def absolute_set():
            hx = hexagon_geometry(params)
            absolute = {p for p in hx.points if is_absolute(p)}
            image = {compact_to_hex(c, params) for c in pts}
            if absolute != image:
                return "absolute set != compact_to_hex image"
            if len(absolute) != params.q ** 3 + 1:
                return f"size {len(absolute)} != q^3+1"
            return None

        def ovoid_property():
            hx = hexagon_geometry(params)
            image = {compact_to_hex(c, params) for c in pts}
            vertices = {hx.vertex(p) for p in image}
            dists = {v: hx.bfs_distances(v) for v in vertices}
            for v in vertices:
                for w in vertices:
                    if v != w and dists[v][w] != 6:
                        return f"absolute pair at distance {dists[v][w]}"
            for i, p in enumerate(hx.points):
                if p in image:
                    continue
                near = sum(1 for v in vertices if dists[v][i] == 2)
                if near != 1:
                    return f"{p!r} collinear with {near} absolute points"
            return None

        checks += [
            Check("ovoid.rho_involution", "exhaustive",
                  _simple(rho_involution)),
            Check("ovoid.rho_incidence_preserving", "exhaustive",
                  _simple(rho_incidence)),
            Check("ovoid.absolute_set", "exhaustive", _simple(absolute_set)),
            Check("ovoid.ovoid_property", "exhaustive",
                  _simple(ovoid_property)),
        ]
    else:
        def rho_spot():
            rng = _rng(seed, "ovoid.rho_spot")
            for _ in range(trials):
                p = point(*(params.random_element(rng) for _ in range(5)))
                if polarity(polarity(p)) != p:
                    return f"rho^2 moves {p!r}"
                if is_absolute(p) != incident(p, polarity(p)):
                    return f"is_absolute disagrees with incidence at {p!r}"
                L = _random_five_line(params, rng)
                q = _incident_point_on(L, params.random_element(rng), params)
                if not incident(polarity(L), polarity(q)):
                    return f"rho breaks incidence {q!r}/{L!r}"
            return None

        def absolute_spot():
            rng = _rng(seed, "ovoid.absolute_spot")
            for _ in range(trials):
                c = random_point(rng)
                h = compact_to_hex(c, params)
                if not is_absolute(h):
                    return f"image of {c!r} not absolute"
                if hex_to_compact(h) != c:
                    return f"dictionary roundtrip fails at {c!r}"
            return None

        checks += [
            Check("ovoid.rho_spot_checks", _sampled(seed, trials),
                  _simple(rho_spot)),
            Check("ovoid.absolute_spot_checks", _sampled(seed, trials),
                  _simple(absolute_spot)),
        ]

    def dictionary_coherence():
        if params.q == 3:
            sample = pts
        else:
            rng = _rng(seed, "ovoid.dictionary")
            sample = [OvoidPoint.infinity()] + [random_point(rng)
                                                for _ in range(trials)]
        for c in sample:
            if compact_to_proj(c, params) != to_projective(
                    compact_to_hex(c, params), params):
                return f"coherence fails at {c!r}"
        return None

    checks.append(Check(
        "ovoid.dictionary_coherence",
        "exhaustive" if params.q == 3 else _sampled(seed, trials),
        _simple(dictionary_coherence)))

    def u_infty_group():
        if params.q == 3:
            triples = [(a, b, c) for a in elems for b in elems for c in elems]
            zt = (zero, zero, zero)
            for t in triples:
                if u_infty_mul(t, u_infty_inv(t)) != zt:
                    return f"inverse fails at {t}"
            for t1 in triples:
                images = {u_infty_mul(t1, t2) for t2 in triples}
                if len(images) != len(triples):
                    return f"translation by {t1} not bijective"
            rng = _rng(seed, "ovoid.u_infty")
            assoc_trials = ((rng.choice(triples), rng.choice(triples),
                             rng.choice(triples)) for _ in range(trials))
        else:
            rng = _rng(seed, "ovoid.u_infty")
            def rt():
                return tuple(params.random_element(rng) for _ in range(3))
            zt = (zero, zero, zero)
            for _ in range(trials):
                t = rt()
                if u_infty_mul(t, u_infty_inv(t)) != zt:
                    return f"inverse fails at {t}"
            assoc_trials = ((rt(), rt(), rt()) for _ in range(trials))
        for t1, t2, t3 in assoc_trials:
            if (u_infty_mul(u_infty_mul(t1, t2), t3)
                    != u_infty_mul(t1, u_infty_mul(t2, t3))):
                return f"associativity fails at {t1},{t2},{t3}"
        return None

    def u_infty_sharp():
        if params.q == 3:
            pairs = [(p, q) for p in affine for q in affine]
        else:
            rng = _rng(seed, "ovoid.u_infty_sharp")
            pairs = [(random_point(rng), random_point(rng))
                     for _ in range(trials)]
        for p, q in pairs:
            g = u_infty_mul(u_infty_inv(p.triple), q.triple)
            if u_infty_apply(g, p) != q:
                return f"no transitive element {p!r} -> {q!r}"
            if u_infty_apply(g, OvoidPoint.infinity()).triple is not None:
                return "infinity moved"
        return None

    def u_zero_closure():
        if params.q == 3:
            triples = [(a, b, c) for a in elems for b in elems for c in elems]
            pairs = itertools.product(triples, triples)
        else:
            rng = _rng(seed, "ovoid.u_zero_closure")
            def rt():
                return tuple(params.random_element(rng) for _ in range(3))
            pairs = ((rt(), rt()) for _ in range(trials))
        for t1, t2 in pairs:
            prod = mat_mul(u_zero_matrix(*t1), u_zero_matrix(*t2), params)
            back = u_zero_params_of_matrix(prod)
            if u_zero_matrix(*back) != prod:
                return f"product of {t1} and {t2} leaves the family"
        return None

    def u_zero_preserves():
        if params.q == 3:
            triples = [(a, b, c) for a in elems for b in elems for c in elems]
            cases = [(t, p) for t in triples for p in pts]
        else:
            rng = _rng(seed, "ovoid.u_zero_preserves")
            cases = [(tuple(params.random_element(rng) for _ in range(3)),
                      random_point(rng)) for _ in range(trials)]
        for t, p in cases:
            u_zero_apply(t, p, params)  # raises if the image leaves Omega
        return None

    def u_zero_sharp():
        if params.q == 3:
            triples = [(a, b, c) for a in elems for b in elems for c in elems]
        else:
            rng = _rng(seed, "ovoid.u_zero_sharp")
            triples = {tuple(params.random_element(rng) for _ in range(3))
                       for _ in range(min(trials, 200))}
        images = set()
        for t in triples:
            if u_zero_apply(t, origin, params) != origin:
                return f"{t} moves (0,0,0)"
            images.add(u_zero_apply(t, OvoidPoint.infinity(), params))
        if len(images) != len(triples):
            return "orbit of (inf) smaller than the group"
        if params.q == 3 and images != set(affine) - {origin} | {pts[0]}:
            return "orbit of (inf) != Omega minus (0,0,0)"
        return None

    def second_derived_center():
        center = {(zero, zero, c) for c in elems}
        commutators = set()
        derived = [(zero, b, c) for b in elems for c in elems]
        full = [(a, b, c) for a in elems for b in elems for c in elems]
        for u in derived:
            for v in full:
                com = u_infty_mul(
                    u_infty_mul(u_infty_inv(u), u_infty_inv(v)),
                    u_infty_mul(u, v))
                commutators.add(com)
        if commutators != center:
            return (f"[U', U] has {len(commutators)} elements, "
                    f"center has {len(center)}")
        return None

    scope = "exhaustive" if params.q == 3 else _sampled(seed, trials)
    checks += [
        Check("ovoid.u_infty_group_axioms", scope, _simple(u_infty_group)),
        Check("ovoid.u_infty_sharply_transitive", scope,
              _simple(u_infty_sharp)),
        Check("ovoid.u_zero_matrix_closure", scope, _simple(u_zero_closure)),
        Check("ovoid.u_zero_preserves_ovoid", scope,
              _simple(u_zero_preserves)),
        Check("ovoid.u_zero_sharply_transitive",
              "exhaustive" if params.q == 3 else _sampled(seed, 200),
              _simple(u_zero_sharp)),
    ]
    if params.q == 3:
        checks.append(Check("ovoid.second_derived_equals_center",
                            "exhaustive", _simple(second_derived_center)))
    return checks


# ==========================================================================
# geometry suite

_W_BASE_DIGITS = {("0", "0", "0"), ("0", "1", "0"), ("0", "2", "0"),
                  ("0", "1", "1"), ("0", "1", "2")}


class _AutCache:
    """Computes the three automorphism groups at most once per suite run."""

    def __init__(self, ctx):
        self.ctx = ctx
        self._groups: dict[str, object] = {}

    def group(self, structure: str):
        if structure not in self._groups:
            from .autgroup import automorphism_group
            self._groups[structure] = automorphism_group(structure, self.ctx)
        return self._groups[structure]


def _index_set(points, ctx) -> frozenset[int]:
    return frozenset(ctx.point_index[p] for p in points)


def geometry_checks(params: FieldParams, seed: int,
                    trials: int) -> list[Check]:
    if params.q == 3:
        return _geometry_checks_exhaustive(params, seed, trials)
    return _geometry_checks_sampled(params, seed, trials)


def _geometry_checks_exhaustive(params: FieldParams, seed: int,
                                trials: int) -> list[Check]:
    ctx = ree_context(params)
    elems = list(params.elements())
    zero = params.zero
    q = params.q
    aut = _AutCache(ctx)
    inf = OvoidPoint.infinity()
    origin = OvoidPoint.of(zero, zero, zero)

    def block_family(blocks, kind, expected_count, expected_size):
        if len(blocks) != expected_count:
            return f"{len(blocks)} {kind}s != {expected_count}"
        for b in blocks:
            if len(b.points) != expected_size:
                return f"{kind} of size {len(b.points)}: {b!r}"
            if gnarl_of(b, ctx) != b.gnarl:
                return f"gnarl mismatch for {b!r}"
        return None

    def circles_family():
        return block_family(ctx.circles, "circle", 252, q + 1)

    def spheres_family():
        return block_family(ctx.spheres, "sphere", 84, q * q + 1)

    def samegnarl_subcircles():
        for s in ctx.spheres:
            for c in ctx.circles:
                if c.points <= s.points and c.gnarl != s.gnarl:
                    return (f"circle with gnarl {c.gnarl!r} inside sphere "
                            f"with gnarl {s.gnarl!r}")
        return None

    def samegnarl_partition():
        for s in ctx.spheres:
            inside = [c for c in ctx.circles
                      if c.points <= s.points and c.gnarl == s.gnarl]
            if len(inside) != q:
                return f"{len(inside)} same-gnarl circles in {s!r}"
            rest = s.points - {s.gnarl}
            covered: set = set()
            for c in inside:
                body = c.points - {c.gnarl}
                if covered & body:
                    return f"overlapping circles inside {s!r}"
                covered |= body
            if covered != rest:
                return f"circles do not cover sphere minus gnarl in {s!r}"
        return None

    def parallel_gnarls():
        # circles through (inf) with affine gnarl are the ordinary lines;
        # those with gnarl (inf) are the vertical lines and stay out
        through_inf = [c for c in ctx.circles
                       if inf in c.points and not c.gnarl.is_infinity]
        by_first: dict = {}
        for c in through_inf:
            g = gnarl_of(c, ctx)
            by_first.setdefault(g.triple[0], set()).add(g)
        for a in elems:
            expected = set(vertical_plane(a, params).points)
            if by_first.get(a, set()) != expected:
                return f"parallel-class gnarls != P_{a.digits()}"
        return None

    def intersect():
        planes = [ordinary_plane(a, b, c, params)
                  for a in elems for b in elems for c in elems]
        for a in elems:
            vp = vertical_plane(a, params).points
            for op in planes:
                if not (vp & op.points):
                    return f"P_{a.digits()} misses {op!r}"
        return None

    def intersect2():
        base = ordinary_plane(zero, zero, zero, params).points
        for ap in elems:
            for app in elems:
                other = ordinary_plane(zero, ap, app, params).points
                if not (base & other):
                    return f"S_(0,0,0) misses S_(0,{ap.digits()},{app.digits()})"
        return None

    def w_base():
        got = {tuple(c.digits() for c in p.triple)
               for p in w_set(origin, params)}
        if got != _W_BASE_DIGITS:
            return f"W_(0,0,0) = {sorted(got)}"
        return None

    def w_intersections():
        # p ranges over W_(0,0,0) minus the gnarl itself: the overlap count
        # separates the affine unital block from the rest of the W-set
        w0 = w_set(origin, params)
        block = next(b for b in unital_blocks(params)
                     if origin in b and inf in b)
        affine_block = block - {inf}
        recovered = {origin}
        for p in w0 - {origin}:
            overlap = len(w0 & w_set(p, params))
            if p in affine_block and overlap <= 2:
                return f"|W_0 ^ W_{p!r}| = {overlap} on the block"
            if p not in affine_block and overlap != 2:
                return f"|W_0 ^ W_{p!r}| = {overlap} off the block"
            if overlap > 2:
                recovered.add(p)
        if recovered != affine_block:
            return "points with overlap > 2 do not recover the block"
        return None

    def parallelism():
        lines = [ordinary_line(a, b, c, params)
                 for a in elems for b in elems for c in elems]
        shadows = [{p.triple[:2] for p in ln.points} for ln in lines]
        for i, l1 in enumerate(lines):
            for j, l2 in enumerate(lines):
                algebraic = are_parallel(l1, l2)
                definitional = (shadows[i] == shadows[j]
                                or not (shadows[i] & shadows[j]))
                if algebraic != definitional:
                    return f"criteria disagree for {l1!r}, {l2!r}"
        return None

    def hexagon_circles():
        found = {}
        for L in ctx.hexagon.lines:
            b = circle_from_line(L, ctx)
            if b is not None:
                found.setdefault(b.points, b)
        algebraic = {b.points: b for b in ctx.circles}
        if set(found) != set(algebraic):
            return (f"{len(found)} hexagon circles vs "
                    f"{len(algebraic)} algebraic")
        for key, b in found.items():
            if b.gnarl != algebraic[key].gnarl:
                return f"gnarl mismatch at {b!r}"
        return None

    def hexagon_spheres():
        found = {}
        for p in ctx.hexagon.points:
            b = sphere_from_point(p, ctx)
            if b is not None:
                found.setdefault(b.points, b)
        algebraic = {b.points: b for b in ctx.spheres}
        if set(found) != set(algebraic):
            return (f"{len(found)} hexagon spheres vs "
                    f"{len(algebraic)} algebraic")
        for key, b in found.items():
            if b.gnarl != algebraic[key].gnarl:
                return f"gnarl mismatch at {b!r}"
        return None

    def unital_design():
        blocks = unital_blocks(params)
        n = q ** 3 + 1
        if len(blocks) != 63:
            return f"{len(blocks)} blocks != 63"
        if any(len(b) != q + 1 for b in blocks):
            return "block of wrong size"
        for i, p in enumerate(ctx.points):
            for r in ctx.points[i + 1:]:
                through = sum(1 for b in blocks if p in b and r in b)
                if through != 1:
                    return f"pair {p!r},{r!r} lies on {through} blocks"
        _ = n
        return None

    def aut_orders():
        g = aut.group("G")
        gc = aut.group("GC")
        gs = aut.group("GS")
        detail = (f"(|Aut(G)|={g.order} |Aut(G_C)|={gc.order} "
                  f"|Aut(G_S)|={gs.order})")
        if not (g.order == gc.order == gs.order == 1512):
            return "orders differ from 1512", detail
        if not (set(g.elements) == set(gc.elements) == set(gs.elements)):
            return "groups differ as permutation sets", detail
        return None, detail

    def aut_gnarls():
        gnarl_pairs = [(ctx.point_index[b.gnarl],
                        _index_set(b.points, ctx), b.kind)
                       for b in ctx.circles + ctx.spheres]
        by_points = {(pts, kind): g for g, pts, kind in gnarl_pairs}
        for perm in aut.group("G").elements:
            for g, pts, kind in gnarl_pairs:
                image = frozenset(perm[i] for i in pts)
                key = (image, kind)
                if key not in by_points:
                    return f"block kind {kind} not preserved by {perm}"
                if by_points[key] != perm[g]:
                    return f"gnarl not preserved by {perm}"
        return None

    def aut_types():
        vert_lines = {_index_set(vertical_line(a, b, params).points, ctx)
                      for a in elems for b in elems}
        ord_lines = {_index_set(ordinary_line(a, b, c, params).points, ctx)
                     for a in elems for b in elems for c in elems}
        vert_planes = {_index_set(vertical_plane(a, params).points, ctx)
                       for a in elems}
        ord_planes = {_index_set(ordinary_plane(a, b, c, params).points, ctx)
                      for a in elems for b in elems for c in elems}
        fixing = [perm for perm in aut.group("G").elements if perm[0] == 0]
        for perm in fixing:
            for family, label in ((vert_lines, "vertical lines"),
                                  (ord_lines, "ordinary lines"),
                                  (vert_planes, "vertical planes"),
                                  (ord_planes, "ordinary planes")):
                for s in family:
                    if frozenset(perm[i] for i in s) not in family:
                        return f"{label} not preserved by {perm}"
        return None

    def aut_stabilizer():
        s = next(b for b in ctx.spheres
                 if b.gnarl == inf and origin in b.points)
        inner_blocks = [_index_set(b, ctx) for b in unital_blocks(params)
                        if inf in b and b <= s.points]
        if not inner_blocks:
            return "no unital blocks through (inf) inside the sphere"
        stab = {perm for perm in aut.group("GS").elements
                if perm[0] == 0
                and all(frozenset(perm[i] for i in blk) == blk
                        for blk in inner_blocks)}
        expected = set()
        for t in elems:
            g = (zero, t, zero)
            expected.add(tuple(
                ctx.point_index[u_infty_apply(g, p)] for p in ctx.points))
        if stab != expected:
            return (f"stabilizer has order {len(stab)}, "
                    f"expected {{(0,t,0)}} of order {len(expected)}")
        return None

    def aut_absolute_lines():
        import numpy as np
        hx = ctx.hexagon
        lines = [polarity(compact_to_hex(p, params)) for p in ctx.points]
        verts = [hx.vertex(L) for L in lines]
        n = len(verts)
        meets = np.zeros((n, n), dtype=bool)
        for i, v in enumerate(verts):
            dist = hx.bfs_distances(v)
            for j, w in enumerate(verts):
                meets[i, j] = dist[w] <= 2
        for perm in aut.group("G").elements:
            idx = np.asarray(perm)
            if not np.array_equal(meets[np.ix_(idx, idx)], meets):
                return f"absolute-line meets matrix moved by {perm}"
        return None

    def aut_membership():
        elements = set(aut.group("G").elements)

        def perm_of(action):
            return tuple(ctx.point_index[action(p)] for p in ctx.points)

        for a in elems:
            for b in elems:
                for c in elems:
                    t = (a, b, c)
                    pi = perm_of(lambda p: u_infty_apply(t, p))
                    if pi not in elements:
                        return f"u_infty{t} not in Aut(G)"
                    pz = perm_of(lambda p: u_zero_apply(t, p, params))
                    if pz not in elements:
                        return f"u_zero{t} not in Aut(G)"
        for scale in elems:
            if not scale:
                continue
            for power in range(params.degree):
                coll = known_collineation(scale, power)
                pc = perm_of(coll.apply)
                if pc not in elements:
                    return (f"collineation(l={scale.digits()},sigma^{power}) "
                            f"not in Aut(G)")
        return None

    return [
        Check("geometry.circle_family", "exhaustive", _simple(circles_family)),
        Check("geometry.sphere_family", "exhaustive", _simple(spheres_family)),
        Check("geometry.samegnarl_subcircle_gnarls", "exhaustive",
              _simple(samegnarl_subcircles)),
        Check("geometry.samegnarl_partition", "exhaustive",
              _simple(samegnarl_partition)),
        Check("geometry.parallel_class_gnarls", "exhaustive",
              _simple(parallel_gnarls)),
        Check("geometry.planes_intersect", "exhaustive", _simple(intersect)),
        Check("geometry.base_planes_intersect2", "exhaustive",
              _simple(intersect2)),
        Check("geometry.w_base_explicit", "exhaustive", _simple(w_base)),
        Check("geometry.w_pair_intersections", "exhaustive",
              _simple(w_intersections)),
        Check("geometry.parallelism_criterion", "exhaustive",
              _simple(parallelism)),
        Check("geometry.hexagon_circles_coherence", "exhaustive",
              _simple(hexagon_circles)),
        Check("geometry.hexagon_spheres_coherence", "exhaustive",
              _simple(hexagon_spheres)),
        Check("geometry.unital_design", "exhaustive", _simple(unital_design)),
        Check("geometry.aut_orders", "exhaustive", aut_orders),
        Check("geometry.aut_gnarl_preservation", "exhaustive",
              _simple(aut_gnarls)),
        Check("geometry.aut_type_preservation", "exhaustive",
              _simple(aut_types)),
        Check("geometry.aut_unital_stabilizer", "exhaustive",
              _simple(aut_stabilizer)),
        Check("geometry.aut_absolute_lines", "exhaustive",
              _simple(aut_absolute_lines)),
        Check("geometry.aut_contains_root_groups", "exhaustive",
              _simple(aut_membership)),
    ]


def _geometry_checks_sampled(params: FieldParams, seed: int,
                             trials: int) -> list[Check]:
    q = params.q
    zero = params.zero
    inf = OvoidPoint.infinity()
    # gnarl recomputation tries every point of a q+1-point block, so this
    # check is two orders of magnitude more expensive per trial than the rest
    orbit_trials = max(1, min(trials, 50))

    def random_triple(rng):
        return tuple(params.random_element(rng) for _ in range(3))

    def circle_samples():
        ctx = ree_context(params)
        rng = _rng(seed, "geometry.circle_samples")
        for _ in range(orbit_trials):
            g = OvoidPoint.of(*random_triple(rng))
            b = circle(g, inf, params)
            if len(b.points) != q + 1:
                return f"circle size {len(b.points)} at gnarl {g!r}"
            if gnarl_of(b, ctx) != g:
                return f"gnarl recomputation fails at {g!r}"
            expected = set(ordinary_line(*g.triple, params).points) | {inf}
            if set(b.points) != expected:
                return f"circle through (inf) != ordinary line at {g!r}"
        return None

    def parallel_gnarls():
        rng = _rng(seed, "geometry.parallel_gnarls")
        for _ in range(trials):
            a = params.random_element(rng)
            g1 = OvoidPoint.of(a, params.random_element(rng),
                               params.random_element(rng))
            g2 = OvoidPoint.of(a, params.random_element(rng),
                               params.random_element(rng))
            l1 = ordinary_line(*g1.triple, params)
            l2 = ordinary_line(*g2.triple, params)
            if not are_parallel(l1, l2):
                return f"same-first-coordinate lines not parallel: {g1!r}"
            vp = vertical_plane(a, params)
            if g2 not in vp.points:
                return f"parallel-class gnarl {g2!r} outside P_{a.digits()}"
        return None

    def intersect():
        rng = _rng(seed, "geometry.intersect")
        for _ in range(trials):
            a = params.random_element(rng)
            vp = vertical_plane(a, params).points
            op = ordinary_plane(*random_triple(rng), params).points
            if not (vp & op):
                return f"vertical plane P_{a.digits()} misses a plane"
        return None

    def intersect2():
        rng = _rng(seed, "geometry.intersect2")
        base = ordinary_plane(zero, zero, zero, params).points
        for _ in range(trials):
            ap = params.random_element(rng)
            app = params.random_element(rng)
            other = ordinary_plane(zero, ap, app, params).points
            if not (base & other):
                return (f"S_(0,0,0) misses "
                        f"S_(0,{ap.digits()},{app.digits()})")
        return None

    def parallelism():
        rng = _rng(seed, "geometry.parallelism")
        for _ in range(trials):
            l1 = ordinary_line(*random_triple(rng), params)
            l2 = ordinary_line(*random_triple(rng), params)
            if are_parallel(l1, l2) != are_parallel_definitional(l1, l2):
                return f"criteria disagree for {l1!r}, {l2!r}"
        return None

    return [
        Check("geometry.circle_samples", _sampled(seed, orbit_trials),
              _simple(circle_samples)),
        Check("geometry.parallel_class_gnarls", _sampled(seed, trials),
              _simple(parallel_gnarls)),
        Check("geometry.planes_intersect", _sampled(seed, trials),
              _simple(intersect)),
        Check("geometry.base_planes_intersect2", _sampled(seed, trials),
              _simple(intersect2)),
        Check("geometry.parallelism_criterion", _sampled(seed, trials),
              _simple(parallelism)),
    ]


# ==========================================================================
# driver

_BUILDERS = {
    "field": field_checks,
    "identities": identities_checks,
    "hexagon": hexagon_checks,
    "ovoid": ovoid_checks,
    "geometry": geometry_checks,
}


def build_checks(name: str, params: FieldParams, seed: int = 0,
                 trials: int = 1000) -> list[Check]:
    if name == "all":
        out = []
        for suite in SUITE_NAMES:
            out += _BUILDERS[suite](params, seed, trials)
        return out
    if name not in _BUILDERS:
        raise ValueError(f"unknown suite {name!r}; expected all or one of "
                         f"{', '.join(SUITE_NAMES)}")
    return _BUILDERS[name](params, seed, trials)


def _run_check(check: Check) -> CheckReport:
    start = time.monotonic()
    try:
        witness, detail = check.fn()
    except Exception as exc:  # a raised invariant guard is a failure witness
        witness, detail = f"{type(exc).__name__}: {exc}", None
    elapsed = time.monotonic() - start
    status = "pass" if witness is None else "fail"
    return CheckReport(check.name, check.scope, status, witness, elapsed,
                       detail)


def run_checks(checks: list[Check]) -> list[CheckReport]:
    """Run an explicit list of checks sequentially, in order."""
    return [_run_check(c) for c in checks]


def run_suite(name: str, params: FieldParams, seed: int = 0,
              trials: int = 1000) -> list[CheckReport]:
    """Run a suite; report order follows check declaration order."""
    checks = build_checks(name, params, seed, trials)
    threads = int(os.environ.get("REEKIT_THREADS", "1") or "1")
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            return list(pool.map(_run_check, checks))
    return [_run_check(c) for c in checks]
