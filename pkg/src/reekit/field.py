"""Arithmetic in GF(3^(2e+1)) together with the Tits endomorphism.

Elements are stored in the polynomial basis as little-endian coefficient
tuples over {0,1,2}, always fully reduced, so equality and hashing are
structural.  The Tits endomorphism ``theta`` satisfies theta(theta(x)) = x^3
and is realised as the power map x -> x^(3^(e+1)); its inverse is
x -> x^(3^e).  Both are F3-linear and are precomputed as basis-image tables.
"""
from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Iterator, Sequence


class FieldUsageError(ValueError):
    """Mixing elements of different fields, or a malformed field flag."""


class FieldDomainError(ZeroDivisionError):
    """Domain violation, e.g. inverting zero."""


#: built-in irreducible moduli (little-endian, monic): x for GF(3),
#: t^3 - t - 1 for GF(27)
DEFAULT_MODULI = {0: (0, 1), 1: (2, 2, 0, 1)}


def _poly_trim(p: list[int]) -> list[int]:
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_mod(num: Sequence[int], den: Sequence[int]) -> list[int]:
    """Remainder of num modulo den over F3 (den monic, little-endian)."""
    rem = [c % 3 for c in num]
    _poly_trim(rem)
    dd = len(den) - 1
    while len(rem) - 1 >= dd:
        shift = len(rem) - 1 - dd
        lead = rem[-1]
        for i, c in enumerate(den):
            rem[shift + i] = (rem[shift + i] - lead * c) % 3
        _poly_trim(rem)
    return rem


def _is_irreducible(modulus: Sequence[int]) -> bool:
    """Exhaustive trial division by all monic polynomials of degree <= deg/2."""
    deg = len(modulus) - 1
    if deg < 1:
        return False
    for d in range(1, deg // 2 + 1):
        for tail in itertools.product((0, 1, 2), repeat=d):
            den = list(tail) + [1]
            if not _poly_mod(modulus, den):
                return False
    return True


class FieldParams:
    """The field GF(3^(2e+1)) given by a monic irreducible modulus over F3."""

    def __init__(self, e: int, modulus: Sequence[int] | None = None):
        if e < 0:
            raise FieldUsageError("e must be a nonnegative integer")
        if modulus is None:
            if e not in DEFAULT_MODULI:
                raise FieldUsageError(
                    f"no built-in modulus for e={e}; supply one explicitly")
            modulus = DEFAULT_MODULI[e]
        modulus = tuple(c % 3 for c in modulus)
        degree = 2 * e + 1
        if len(modulus) != degree + 1 or modulus[-1] != 1:
            raise FieldUsageError(
                f"modulus must be monic of degree {degree} (little-endian)")
        if not _is_irreducible(modulus):
            raise FieldUsageError("modulus is reducible over F3")
        self.e = e
        self.degree = degree
        self.modulus = modulus
        self.q = 3 ** degree
        # reduced images of x^k for degree <= k <= 2*degree-2
        self._xk: dict[int, tuple[int, ...]] = {}
        for k in range(degree, 2 * degree - 1):
            rem = _poly_mod([0] * k + [1], modulus)
            self._xk[k] = tuple(rem + [0] * (degree - len(rem)))
        self.zero = FieldElement((0,) * degree, self)
        self.one = FieldElement((1,) + (0,) * (degree - 1), self)
        # basis images of theta = x^(3^(e+1)) and theta_inv = x^(3^e)
        self._theta_images = self._power_map_images(3 ** (e + 1))
        self._theta_inv_images = self._power_map_images(3 ** e)
        self._inv_cache: dict[tuple[int, ...], FieldElement] = {}

    def _power_map_images(self, n: int) -> list[tuple[int, ...]]:
        images = []
        for i in range(self.degree):
            basis = self.element([0] * i + [1])
            images.append((basis ** n).coeffs)
        return images

    def element(self, coeffs: Sequence[int]) -> "FieldElement":
        coeffs = tuple(c % 3 for c in coeffs)
        if len(coeffs) > self.degree:
            raise FieldUsageError("coefficient vector longer than field degree")
        return FieldElement(coeffs + (0,) * (self.degree - len(coeffs)), self)

    def scalar(self, n: int) -> "FieldElement":
        return self.element([n % 3])

    def elements(self) -> Iterator["FieldElement"]:
        """All field elements, lexicographic on the coefficient vector."""
        for coeffs in itertools.product((0, 1, 2), repeat=self.degree):
            yield FieldElement(coeffs, self)

    def random_element(self, rng) -> "FieldElement":
        return FieldElement(
            tuple(rng.randrange(3) for _ in range(self.degree)), self)

    def __eq__(self, other) -> bool:
        return (isinstance(other, FieldParams)
                and self.modulus == other.modulus)

    def __hash__(self) -> int:
        return hash(self.modulus)

    def __repr__(self) -> str:
        return f"FieldParams(e={self.e}, modulus={self.modulus})"


class FieldElement:
    """Immutable element of GF(3^(2e+1)) in the polynomial basis."""

    __slots__ = ("coeffs", "params")

    def __init__(self, coeffs: tuple[int, ...], params: FieldParams):
        self.coeffs = coeffs
        self.params = params

    def _check(self, other: "FieldElement") -> None:
        if self.params is not other.params and self.params != other.params:
            raise FieldUsageError("operands belong to different fields")

    def __add__(self, other: "FieldElement") -> "FieldElement":
        self._check(other)
        return FieldElement(
            tuple((a + b) % 3 for a, b in zip(self.coeffs, other.coeffs)),
            self.params)

    def __sub__(self, other: "FieldElement") -> "FieldElement":
        self._check(other)
        return FieldElement(
            tuple((a - b) % 3 for a, b in zip(self.coeffs, other.coeffs)),
            self.params)

    def __neg__(self) -> "FieldElement":
        return FieldElement(tuple((-a) % 3 for a in self.coeffs), self.params)

    def __mul__(self, other: "FieldElement") -> "FieldElement":
        self._check(other)
        p = self.params
        d = p.degree
        if d == 1:
            return FieldElement(((self.coeffs[0] * other.coeffs[0]) % 3,), p)
        prod = [0] * (2 * d - 1)
        for i, ui in enumerate(self.coeffs):
            if ui:
                for j, vj in enumerate(other.coeffs):
                    if vj:
                        prod[i + j] += ui * vj
        for k in range(2 * d - 2, d - 1, -1):
            c = prod[k] % 3
            if c:
                red = p._xk[k]
                for i in range(d):
                    prod[i] += c * red[i]
        return FieldElement(tuple(c % 3 for c in prod[:d]), p)

    def __pow__(self, n: int) -> "FieldElement":
        if n < 0:
            return self.inverse() ** (-n)
        result = self.params.one
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def inverse(self) -> "FieldElement":
        if not self:
            raise FieldDomainError("zero has no multiplicative inverse")
        cached = self.params._inv_cache.get(self.coeffs)
        if cached is None:
            cached = self ** (self.params.q - 2)
            self.params._inv_cache[self.coeffs] = cached
        return cached

    def __truediv__(self, other: "FieldElement") -> "FieldElement":
        return self * other.inverse()

    def _linear_map(self, images: list[tuple[int, ...]]) -> "FieldElement":
        d = self.params.degree
        acc = [0] * d
        for i, c in enumerate(self.coeffs):
            if c:
                img = images[i]
                for j in range(d):
                    acc[j] += c * img[j]
        return FieldElement(tuple(a % 3 for a in acc), self.params)

    def theta(self) -> "FieldElement":
        """Tits endomorphism: x^(3^(e+1)); theta(theta(x)) = x^3."""
        return self._linear_map(self.params._theta_images)

    def theta_inv(self) -> "FieldElement":
        """Inverse of theta: x^(3^e) composed appropriately."""
        return self._linear_map(self.params._theta_inv_images)

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def __eq__(self, other) -> bool:
        return (isinstance(other, FieldElement)
                and self.coeffs == other.coeffs
                and self.params == other.params)

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def digits(self) -> str:
        """Little-endian digit string, e.g. '21' for 2 + t."""
        return "".join(str(c) for c in self.coeffs)

    def __repr__(self) -> str:
        return f"<{self.digits()}>"


def add(x: FieldElement, y: FieldElement) -> FieldElement:
    return x + y


def mul(x: FieldElement, y: FieldElement) -> FieldElement:
    return x * y


def neg(x: FieldElement) -> FieldElement:
    return -x


def inv(x: FieldElement) -> FieldElement:
    return x.inverse()


def theta(x: FieldElement) -> FieldElement:
    return x.theta()


def theta_inv(x: FieldElement) -> FieldElement:
    return x.theta_inv()


@lru_cache(maxsize=None)
def _cached_params(e: int, modulus: tuple[int, ...] | None) -> FieldParams:
    return FieldParams(e, modulus)


def field_params(e: int, modulus: Sequence[int] | None = None) -> FieldParams:
    """Shared FieldParams instance for (e, modulus)."""
    return _cached_params(e, tuple(modulus) if modulus is not None else None)


def parse_field_flag(flag: str) -> FieldParams:
    """Parse a CLI field flag 'e' or 'e:c0,c1,...' (little-endian digits)."""
    try:
        if ":" in flag:
            e_part, mod_part = flag.split(":", 1)
            e = int(e_part)
            modulus = tuple(int(c) for c in mod_part.split(","))
            return field_params(e, modulus)
        return field_params(int(flag))
    except FieldUsageError:
        raise
    except ValueError as exc:
        raise FieldUsageError(f"malformed field flag {flag!r}: {exc}") from exc
