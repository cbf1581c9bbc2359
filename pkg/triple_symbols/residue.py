"""
Residue arithmetic
The prime field F_q, its extension F_q[w] and the cubic algebra
F_q[w][t]/(t^3 - p1), with Legendre symbols, modular square roots and the
cubic residue character
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Tuple, Union

from .eisenstein import EisensteinInt, NormalizedPrimeL3
from .errors import (
    CharacterUndefined,
    InternalInvariantViolation,
    NoCubeRoot,
    NonResidue,
    NotCubeRootOfUnity,
    NotSplit,
)

logger = logging.getLogger(__name__)

# The residue field identifies the abstract zeta_3 with w^2 = w^-1. With
# zeta_3 -> w every value of the reference tables comes out conjugated.
ZETA3_RESIDUE_EXPONENT = 2


def _square_and_multiply(base, exponent: int, one):
    """Left-to-right binary exponentiation over any ring element type"""
    if exponent < 0:
        raise ValueError("Negative exponents are not supported")
    result = one
    for bit in bin(exponent)[2:]:
        result = result * result
        if bit == "1":
            result = result * base
    return result


def _modulus(q: Union[int, NormalizedPrimeL3]) -> int:
    return q.q if isinstance(q, NormalizedPrimeL3) else abs(q)


# ==================== F_q ====================

@dataclass(frozen=True)
class FpElem:
    """Residue class value mod a prime q"""
    value: int
    q: int

    def __post_init__(self):
        object.__setattr__(self, "value", self.value % self.q)

    def _check(self, other) -> FpElem:
        if isinstance(other, int):
            return FpElem(other, self.q)
        if other.q != self.q:
            raise ValueError("Cannot combine elements of different fields")
        return other

    def __add__(self, other) -> FpElem:
        other = self._check(other)
        return FpElem(self.value + other.value, self.q)

    def __sub__(self, other) -> FpElem:
        other = self._check(other)
        return FpElem(self.value - other.value, self.q)

    def __neg__(self) -> FpElem:
        return FpElem(-self.value, self.q)

    def __mul__(self, other) -> FpElem:
        other = self._check(other)
        return FpElem(self.value * other.value, self.q)

    def __pow__(self, exponent: int) -> FpElem:
        return _square_and_multiply(self, exponent, FpElem(1, self.q))

    def inverse(self) -> FpElem:
        if self.value == 0:
            raise ZeroDivisionError(f"0 has no inverse mod {self.q}")
        return FpElem(pow(self.value, -1, self.q), self.q)

    def is_zero(self) -> bool:
        return self.value == 0


# ==================== F_q[w] ====================

@dataclass(frozen=True)
class FpOmegaElem:
    """Element c0 + c1*w of F_q[w], w^2 = -1 - w"""
    c0: int
    c1: int
    q: int

    def __post_init__(self):
        object.__setattr__(self, "c0", self.c0 % self.q)
        object.__setattr__(self, "c1", self.c1 % self.q)

    @classmethod
    def of(cls, value: Union[int, EisensteinInt, FpElem], q: int) -> FpOmegaElem:
        """Image of an integer or Eisenstein integer"""
        if isinstance(value, EisensteinInt):
            return cls(value.a, value.b, q)
        if isinstance(value, FpElem):
            return cls(value.value, 0, q)
        return cls(value, 0, q)

    @classmethod
    def one(cls, q: int) -> FpOmegaElem:
        return cls(1, 0, q)

    @classmethod
    def omega(cls, q: int) -> FpOmegaElem:
        return cls(0, 1, q)

    @classmethod
    def omega_power(cls, m: int, q: int) -> FpOmegaElem:
        """Image of w^m"""
        return (cls(1, 0, q), cls(0, 1, q), cls(-1, -1, q))[m % 3]

    def _check(self, other) -> FpOmegaElem:
        if isinstance(other, (int, EisensteinInt, FpElem)):
            return FpOmegaElem.of(other, self.q)
        if other.q != self.q:
            raise ValueError("Cannot combine elements of different fields")
        return other

    def __add__(self, other) -> FpOmegaElem:
        other = self._check(other)
        return FpOmegaElem(self.c0 + other.c0, self.c1 + other.c1, self.q)

    __radd__ = __add__

    def __sub__(self, other) -> FpOmegaElem:
        other = self._check(other)
        return FpOmegaElem(self.c0 - other.c0, self.c1 - other.c1, self.q)

    def __neg__(self) -> FpOmegaElem:
        return FpOmegaElem(-self.c0, -self.c1, self.q)

    def __mul__(self, other) -> FpOmegaElem:
        other = self._check(other)
        bd = self.c1 * other.c1
        return FpOmegaElem(
            self.c0 * other.c0 - bd,
            self.c0 * other.c1 + self.c1 * other.c0 - bd,
            self.q,
        )

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> FpOmegaElem:
        return _square_and_multiply(self, exponent, FpOmegaElem.one(self.q))

    def conjugate(self) -> FpOmegaElem:
        """w -> w^2; the Frobenius of F_q^2 when q = 2 mod 3"""
        return FpOmegaElem(self.c0 - self.c1, -self.c1, self.q)

    def norm(self) -> int:
        """Norm down to F_q"""
        return (self.c0 * self.c0 - self.c0 * self.c1 + self.c1 * self.c1) % self.q

    def inverse(self) -> FpOmegaElem:
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError(f"{self} is not invertible mod {self.q}")
        return self.conjugate() * pow(n, -1, self.q)

    def is_zero(self) -> bool:
        return self.c0 == 0 and self.c1 == 0

    def key(self) -> Tuple[int, int]:
        return (self.c0, self.c1)

    def __str__(self) -> str:
        return f"{self.c0}+{self.c1}w (mod {self.q})"


# ==================== F_q[w][t]/(t^3 - p1) ====================

@dataclass(frozen=True)
class CubicAlgebraElem:
    """Element d0 + d1*t + d2*t^2 with t^3 = p1"""
    d0: FpOmegaElem
    d1: FpOmegaElem
    d2: FpOmegaElem
    p1: int

    @property
    def q(self) -> int:
        return self.d0.q

    @classmethod
    def constant(cls, value, p1: int, q: int) -> CubicAlgebraElem:
        zero = FpOmegaElem(0, 0, q)
        return cls(FpOmegaElem.of(value, q) if not isinstance(value, FpOmegaElem) else value, zero, zero, p1)

    @classmethod
    def t(cls, p1: int, q: int) -> CubicAlgebraElem:
        zero = FpOmegaElem(0, 0, q)
        return cls(zero, FpOmegaElem.one(q), zero, p1)

    @classmethod
    def linear(cls, x, y, p1: int, q: int) -> CubicAlgebraElem:
        """x + y*t for x, y in Z[w] or F_q[w]"""
        zero = FpOmegaElem(0, 0, q)
        x = x if isinstance(x, FpOmegaElem) else FpOmegaElem.of(x, q)
        y = y if isinstance(y, FpOmegaElem) else FpOmegaElem.of(y, q)
        return cls(x, y, zero, p1)

    def _check(self, other) -> CubicAlgebraElem:
        if not isinstance(other, CubicAlgebraElem):
            return CubicAlgebraElem.constant(other, self.p1, self.q)
        if other.q != self.q or other.p1 != self.p1:
            raise ValueError("Cannot combine elements of different algebras")
        return other

    def __add__(self, other) -> CubicAlgebraElem:
        other = self._check(other)
        return CubicAlgebraElem(self.d0 + other.d0, self.d1 + other.d1, self.d2 + other.d2, self.p1)

    def __sub__(self, other) -> CubicAlgebraElem:
        other = self._check(other)
        return CubicAlgebraElem(self.d0 - other.d0, self.d1 - other.d1, self.d2 - other.d2, self.p1)

    def __mul__(self, other) -> CubicAlgebraElem:
        other = self._check(other)
        a = (self.d0, self.d1, self.d2)
        b = (other.d0, other.d1, other.d2)
        c = [FpOmegaElem(0, 0, self.q) for _ in range(5)]
        for i in range(3):
            for j in range(3):
                c[i + j] = c[i + j] + a[i] * b[j]
        # t^3 = p1, t^4 = p1*t
        return CubicAlgebraElem(c[0] + c[3] * self.p1, c[1] + c[4] * self.p1, c[2], self.p1)

    def __pow__(self, exponent: int) -> CubicAlgebraElem:
        return _square_and_multiply(self, exponent, CubicAlgebraElem.constant(1, self.p1, self.q))

    def evaluate(self, root: FpOmegaElem) -> FpOmegaElem:
        return self.d0 + self.d1 * root + self.d2 * root * root


# ==================== Characters ====================

def legendre(a: int, q: int) -> int:
    """Legendre symbol (a/q) by Euler's criterion"""
    r = pow(a % q, (q - 1) // 2, q)
    return -1 if r == q - 1 else r


def _find_nonsquare(q: int) -> int:
    for z in range(2, q):
        if legendre(z, q) == -1:
            return z
    raise InternalInvariantViolation(f"No quadratic non-residue modulo {q}")


def sqrt_mod(a: int, q: int) -> Tuple[int, int]:
    """Both square roots (s, q - s) of a mod q, smaller first"""
    a %= q
    if legendre(a, q) != 1:
        raise NonResidue(f"{a} is not a nonzero square mod {q}")

    if q % 4 == 3:
        s = pow(a, (q + 1) // 4, q)
    else:
        # Tonelli-Shanks: q - 1 = odd * 2^e
        odd, e = q - 1, 0
        while odd % 2 == 0:
            odd //= 2
            e += 1
        c = pow(_find_nonsquare(q), odd, q)
        s = pow(a, (odd + 1) // 2, q)
        t = pow(a, odd, q)
        m = e
        while t != 1:
            i, t2 = 0, t
            while t2 != 1:
                t2 = t2 * t2 % q
                i += 1
                if i == m:
                    raise InternalInvariantViolation("Tonelli-Shanks did not converge")
            b = pow(c, 1 << (m - i - 1), q)
            s = s * b % q
            t = t * b * b % q
            c = b * b % q
            m = i

    if s * s % q != a:
        raise InternalInvariantViolation(f"Square root check failed for {a} mod {q}")
    return tuple(sorted((s, q - s)))


def omega_log(u: FpOmegaElem) -> int:
    """m in Z/3 with u = w^m"""
    for m in range(3):
        if u == FpOmegaElem.omega_power(m, u.q):
            return m
    raise NotCubeRootOfUnity(f"{u} is not a cube root of unity")


def zeta3_log(u: FpOmegaElem) -> int:
    """c with u equal to the residue image of zeta_3^c"""
    return (ZETA3_RESIDUE_EXPONENT * omega_log(u)) % 3


def zeta3_power(c: int, q: int) -> FpOmegaElem:
    """Residue image of zeta_3^c"""
    return FpOmegaElem.omega_power(ZETA3_RESIDUE_EXPONENT * c, q)


def cubic_character(a: Union[int, EisensteinInt], np: NormalizedPrimeL3) -> int:
    """m with a^((q^2-1)/3) = w^m in F_q^2"""
    u = FpOmegaElem.of(a, np.q)
    if u.is_zero():
        raise CharacterUndefined(f"{a} is divisible by {np.p}")
    return omega_log(u ** ((np.q * np.q - 1) // 3))


@lru_cache(maxsize=None)
def cube_roots_in_fq2(p1: int, q: Union[int, NormalizedPrimeL3]) -> Tuple[FpOmegaElem, FpOmegaElem, FpOmegaElem]:
    """
    The three roots of t^3 = p1 in F_q^2 for q = 2 mod 3.

    Order: the root r with the lexicographically smallest (c0, c1) comes
    first, followed by r*w and r*w^2.
    """
    q = _modulus(q)
    if q % 3 != 2:
        raise NotSplit(f"F_{q}[w] is not a field")
    if p1 % q == 0:
        raise NoCubeRoot(f"{p1} is zero mod {q}")
    target = FpOmegaElem.of(p1, q)
    if omega_log(target ** ((q * q - 1) // 3)) != 0:
        raise NoCubeRoot(f"{p1} is not a cube in F_{q}^2")

    # Cubing is a bijection of F_q when q = 2 mod 3
    r = FpOmegaElem(pow(p1 % q, (2 * q - 1) // 3, q), 0, q)
    omega = FpOmegaElem.omega(q)
    roots = [r, r * omega, r * omega * omega]
    for root in roots:
        if root ** 3 != target:
            raise InternalInvariantViolation(f"Cube root check failed for {p1} mod {q}")

    first = min(roots, key=FpOmegaElem.key)
    return (first, first * omega, first * omega * omega)


def algebra_components(e: CubicAlgebraElem) -> Tuple[FpOmegaElem, FpOmegaElem, FpOmegaElem]:
    """Images of e under the three splitting maps t -> r, r*w, r*w^2"""
    try:
        roots = cube_roots_in_fq2(e.p1, e.q)
    except NoCubeRoot as exc:
        raise NotSplit(f"Algebra with t^3 = {e.p1} does not split mod {e.q}") from exc
    return tuple(e.evaluate(root) for root in roots)


def algebra_norm(e: CubicAlgebraElem) -> int:
    """Norm of e down to F_q: product of the components, then N(F_q^2/F_q)"""
    product = FpOmegaElem.one(e.q)
    for component in algebra_components(e):
        product = product * component
    return product.norm()
