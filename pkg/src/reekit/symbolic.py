"""Polynomials over F3 with exponents in the monoid N[theta], theta^2 = 3.

A formal exponent m + n*theta is the pair (m, n); the theta-action sends
(m, n) to (3n, m).  This is enough to verify the algebraic identities behind
the root-group structure independently of any concrete field: the group law,
its inverse, the commutator displays and the cube formula.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Mapping

from .field import FieldElement, FieldParams

#: monomial = sorted tuple of (variable, (m, n)) with (m, n) != (0, 0)
Monomial = tuple[tuple[str, tuple[int, int]], ...]


@dataclass(frozen=True)
class ThetaExponent:
    """The formal exponent m + n*theta."""

    m: int
    n: int

    def __add__(self, other: "ThetaExponent") -> "ThetaExponent":
        return ThetaExponent(self.m + other.m, self.n + other.n)

    def theta(self) -> "ThetaExponent":
        # theta * (m + n*theta) = 3n + m*theta
        return ThetaExponent(3 * self.n, self.m)


def _exp_add(a: tuple[int, int], b: tuple[int, int]) -> tuple[int, int]:
    return (a[0] + b[0], a[1] + b[1])


class FormalPoly:
    """Polynomial over F3 in named variables with N[theta] exponents.

    Terms are stored as a map from monomials to coefficients in {1, 2};
    zero coefficients are never stored, so equality is structural.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Monomial, int] | None = None):
        clean = {}
        if terms:
            for mono, c in terms.items():
                c %= 3
                if c:
                    clean[mono] = c
        self.terms = clean

    @staticmethod
    def zero() -> "FormalPoly":
        return FormalPoly()

    @staticmethod
    def const(c: int) -> "FormalPoly":
        return FormalPoly({(): c})

    @staticmethod
    def var(name: str, m: int = 1, n: int = 0) -> "FormalPoly":
        """The monomial name^(m + n*theta)."""
        if (m, n) == (0, 0):
            return FormalPoly.const(1)
        return FormalPoly({((name, (m, n)),): 1})

    def __add__(self, other: "FormalPoly") -> "FormalPoly":
        terms = dict(self.terms)
        for mono, c in other.terms.items():
            terms[mono] = terms.get(mono, 0) + c
        return FormalPoly(terms)

    def __neg__(self) -> "FormalPoly":
        return FormalPoly({mono: -c for mono, c in self.terms.items()})

    def __sub__(self, other: "FormalPoly") -> "FormalPoly":
        return self + (-other)

    def __mul__(self, other: "FormalPoly") -> "FormalPoly":
        terms: dict[Monomial, int] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                exps: dict[str, tuple[int, int]] = dict(m1)
                for v, e in m2:
                    exps[v] = _exp_add(exps[v], e) if v in exps else e
                mono = tuple(sorted(exps.items()))
                terms[mono] = terms.get(mono, 0) + c1 * c2
        return FormalPoly(terms)

    def __pow__(self, k: int) -> "FormalPoly":
        result = FormalPoly.const(1)
        for _ in range(k):
            result = result * self
        return result

    def theta(self) -> "FormalPoly":
        """Image under the formal Tits endomorphism."""
        terms = {}
        for mono, c in self.terms.items():
            new = tuple(sorted((v, (3 * e[1], e[0])) for v, e in mono))
            # c^3 = c in F3, so coefficients are untouched
            terms[new] = terms.get(new, 0) + c
        return FormalPoly(terms)

    def substitute(self, bindings: Mapping[str, "FormalPoly"]) -> "FormalPoly":
        """Replace each variable by a polynomial and expand.

        x^(m + n*theta) rewrites to binding^m * theta(binding)^n.
        """
        result = FormalPoly.zero()
        for mono, c in self.terms.items():
            term = FormalPoly.const(c)
            for v, (m, n) in mono:
                if v not in bindings:
                    raise KeyError(f"no binding for variable {v!r}")
                b = bindings[v]
                term = term * b ** m * b.theta() ** n
            result = result + term
        return result

    def variables(self) -> set[str]:
        return {v for mono in self.terms for v, _ in mono}

    def evaluate(self, env: Mapping[str, FieldElement],
                 params: FieldParams) -> FieldElement:
        """Numeric value in a concrete field (theta = Tits endomorphism)."""
        total = params.zero
        for mono, c in self.terms.items():
            val = params.scalar(c)
            for v, (m, n) in mono:
                x = env[v]
                val = val * x ** m * x.theta() ** n
            total = total + val
        return total

    def __eq__(self, other) -> bool:
        return isinstance(other, FormalPoly) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __len__(self) -> int:
        return len(self.terms)

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        bits = []
        for mono, c in sorted(self.terms.items()):
            factors = [str(c)] if (c != 1 or not mono) else []
            for v, (m, n) in mono:
                if (m, n) == (1, 0):
                    factors.append(v)
                else:
                    factors.append(f"{v}^({m}+{n}t)" if n else f"{v}^{m}")
            bits.append("*".join(factors))
        return " + ".join(bits)


def poly_add(p: FormalPoly, q: FormalPoly) -> FormalPoly:
    return p + q


def poly_mul(p: FormalPoly, q: FormalPoly) -> FormalPoly:
    return p * q


def poly_neg(p: FormalPoly) -> FormalPoly:
    return -p


def apply_theta(p: FormalPoly) -> FormalPoly:
    return p.theta()


def substitute(p: FormalPoly, bindings: Mapping[str, FormalPoly]) -> FormalPoly:
    return p.substitute(bindings)


def verify_identity(lhs: FormalPoly, rhs: FormalPoly) -> bool:
    """True iff the canonical forms coincide."""
    return lhs == rhs


Triple = tuple[FormalPoly, FormalPoly, FormalPoly]


def sym_triple(prefix: str) -> Triple:
    """The generic root-group element (prefix, prefix', prefix'')."""
    return (FormalPoly.var(prefix),
            FormalPoly.var(prefix + "1"),
            FormalPoly.var(prefix + "2"))


def group_mul(t1: Triple, t2: Triple) -> Triple:
    """Multiplication law of the root group fixing the point at infinity."""
    x, x1, x2 = t1
    y, y1, y2 = t2
    return (x + y,
            x1 + y1 + x * y.theta(),
            x2 + y2 + x * y1 - x1 * y - x * y * y.theta())


def group_inv(t: Triple) -> Triple:
    """Inverse for group_mul: (-x, -x' + x^(1+theta), -x'')."""
    x, x1, x2 = t
    return (-x, -x1 + x * x.theta(), -x2)


def group_commutator(t1: Triple, t2: Triple) -> Triple:
    g1i, g2i = group_inv(t1), group_inv(t2)
    return group_mul(group_mul(g1i, g2i), group_mul(t1, t2))


@dataclass(frozen=True)
class IdentityResult:
    name: str
    ok: bool
    lhs_terms: int
    rhs_terms: int


def _triple_identity(name: str, lhs: Triple, rhs: Triple) -> IdentityResult:
    ok = all(verify_identity(a, b) for a, b in zip(lhs, rhs))
    return IdentityResult(name, ok,
                          sum(len(p) for p in lhs), sum(len(p) for p in rhs))


def check_theta_square_is_cube() -> IdentityResult:
    x = FormalPoly.var("x")
    return IdentityResult("theta_square_is_cube",
                          verify_identity(x.theta().theta(), x ** 3),
                          len(x.theta().theta()), len(x ** 3))


def check_frobenius_additivity() -> IdentityResult:
    x, y = FormalPoly.var("x"), FormalPoly.var("y")
    lhs = (x + y) ** 3
    rhs = x ** 3 + y ** 3
    return IdentityResult("cube_additivity_char3",
                          verify_identity(lhs, rhs), len(lhs), len(rhs))


def check_group_inverse() -> IdentityResult:
    # derived by solving u * v = 1 and frozen here as a regression identity
    u = sym_triple("x")
    zero = (FormalPoly.zero(),) * 3
    return _triple_identity("group_inverse", group_mul(u, group_inv(u)), zero)


def check_associativity() -> IdentityResult:
    u, v, w = sym_triple("x"), sym_triple("y"), sym_triple("z")
    return _triple_identity("group_associativity",
                            group_mul(group_mul(u, v), w),
                            group_mul(u, group_mul(v, w)))


def _display_triple(u: Triple, v: Triple) -> Triple:
    """The displayed closed form for the commutator of two generic elements."""
    u0, u1, _ = u
    v0, v1, _ = v
    return (FormalPoly.zero(),
            u0 * v0.theta() - v0 * u0.theta(),
            u1 * v0 - u0 * v1 - u0 * v0 * v0.theta() + v0 * u0 * u0.theta())


def check_commutator_display() -> IdentityResult:
    # Known to fail: the displayed third component differs from the actual
    # commutator by the central element (0, 0, (u+v) * (u*v^theta - v*u^theta))
    # under every bracketing convention; see check_commutator_mod_center for
    # the exact relationship.  The discrepancy vanishes whenever either first
    # coordinate is zero, and over GF(3) (where theta = id).
    u, v = sym_triple("x"), sym_triple("y")
    return _triple_identity("commutator_display", group_commutator(u, v),
                            _display_triple(u, v))


def check_commutator_mod_center() -> IdentityResult:
    """The display is the commutator up to an explicit central correction."""
    u, v = sym_triple("x"), sym_triple("y")
    com = group_commutator(u, v)
    disp = _display_triple(u, v)
    correction = (u[0] + v[0]) * disp[1]
    ok = (verify_identity(com[0], disp[0])
          and verify_identity(com[1], disp[1])
          and verify_identity(disp[2] - com[2], correction))
    return IdentityResult("commutator_display_mod_center", ok,
                          sum(len(p) for p in com),
                          sum(len(p) for p in disp) + len(correction))


def check_derived_commutator() -> IdentityResult:
    # [(0, x1, x2), (y, y1, y2)] = (0, 0, x1*y)
    u = (FormalPoly.zero(), FormalPoly.var("x1"), FormalPoly.var("x2"))
    v = sym_triple("y")
    rhs = (FormalPoly.zero(), FormalPoly.zero(),
           FormalPoly.var("x1") * FormalPoly.var("y"))
    return _triple_identity("derived_vs_full_commutator",
                            group_commutator(u, v), rhs)


def check_cube() -> IdentityResult:
    # g^3 = (0, 0, -a^(2+theta))
    g = sym_triple("a")
    cube = group_mul(group_mul(g, g), g)
    a = FormalPoly.var("a")
    rhs = (FormalPoly.zero(), FormalPoly.zero(), -(a ** 2 * a.theta()))
    return _triple_identity("cube_formula", cube, rhs)


ALL_IDENTITIES: list[Callable[[], IdentityResult]] = [
    check_theta_square_is_cube,
    check_frobenius_additivity,
    check_group_inverse,
    check_associativity,
    check_commutator_display,
    check_commutator_mod_center,
    check_derived_commutator,
    check_cube,
]


def run_identity_checks() -> list[IdentityResult]:
    return [check() for check in ALL_IDENTITIES]
