"""
Eisenstein integers
Exact arithmetic in Z[w] (w^2 + w + 1 = 0), prime normalization for the
cubic case and the prime list used by the appendix tables
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import List, Optional

from .errors import (
    DivisorZero,
    InternalInvariantViolation,
    NormNotOneMod9,
    NotInert,
    NotPrime,
    PrimeOutOfRange,
)

logger = logging.getLogger(__name__)

# Miller-Rabin with these bases is exact below 3.8e18
MILLER_RABIN_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23)
PRIMALITY_LIMIT = 3 * 10 ** 18


@dataclass(frozen=True)
class EisensteinInt:
    """Element a + b*w of Z[w]"""
    a: int
    b: int = 0

    def __add__(self, other) -> EisensteinInt:
        other = _coerce(other)
        return EisensteinInt(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __neg__(self) -> EisensteinInt:
        return EisensteinInt(-self.a, -self.b)

    def __sub__(self, other) -> EisensteinInt:
        return self + (-_coerce(other))

    def __rsub__(self, other) -> EisensteinInt:
        return _coerce(other) - self

    def __mul__(self, other) -> EisensteinInt:
        other = _coerce(other)
        # w^2 = -1 - w
        bd = self.b * other.b
        return EisensteinInt(
            self.a * other.a - bd,
            self.a * other.b + self.b * other.a - bd,
        )

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> EisensteinInt:
        if exponent < 0:
            raise ValueError("Negative powers are not defined in Z[w]")
        result = ONE
        for bit in bin(exponent)[2:]:
            result = result * result
            if bit == "1":
                result = result * self
        return result

    def conjugate(self) -> EisensteinInt:
        """Complex conjugate: w -> w^2 = -1 - w"""
        return EisensteinInt(self.a - self.b, -self.b)

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def exact_div(self, divisor: EisensteinInt) -> Optional[EisensteinInt]:
        """Quotient self / divisor if it lies in Z[w], else None"""
        divisor = _coerce(divisor)
        n = eis_norm(divisor)
        if n == 0:
            raise DivisorZero("Division by zero in Z[w]")
        numerator = self * divisor.conjugate()
        if numerator.a % n or numerator.b % n:
            return None
        return EisensteinInt(numerator.a // n, numerator.b // n)

    def __str__(self) -> str:
        if self.b == 0:
            return str(self.a)
        return f"{self.a}{'+' if self.b >= 0 else '-'}{abs(self.b)}w"


def _coerce(value) -> EisensteinInt:
    if isinstance(value, EisensteinInt):
        return value
    if isinstance(value, int):
        return EisensteinInt(value, 0)
    raise TypeError(f"Cannot use {type(value).__name__} as an Eisenstein integer")


ZERO = EisensteinInt(0, 0)
ONE = EisensteinInt(1, 0)
OMEGA = EisensteinInt(0, 1)
OMEGA_SQUARED = EisensteinInt(-1, -1)
SQRT_MINUS_3 = EisensteinInt(1, 2)
# 3*sqrt(-3): the modulus of the primary normalization
THREE_SQRT_MINUS_3 = EisensteinInt(3, 6)

UNITS = (ONE, OMEGA, OMEGA_SQUARED, -ONE, -OMEGA, -OMEGA_SQUARED)


def eis_norm(e: EisensteinInt) -> int:
    """N(a + b*w) = a^2 - ab + b^2"""
    return e.a * e.a - e.a * e.b + e.b * e.b


def eis_divides(d: EisensteinInt, e: EisensteinInt) -> bool:
    """True iff e = d*u for some u in Z[w]"""
    d, e = _coerce(d), _coerce(e)
    if d.is_zero():
        raise DivisorZero("Divisor must be nonzero")
    if e.is_zero():
        return True
    if eis_norm(e) % eis_norm(d):
        return False
    return e.exact_div(d) is not None


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin for n below PRIMALITY_LIMIT"""
    if n > PRIMALITY_LIMIT:
        raise PrimeOutOfRange(f"{n} exceeds the deterministic primality limit {PRIMALITY_LIMIT}")
    if n < 2:
        return False
    for p in MILLER_RABIN_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for base in MILLER_RABIN_BASES:
        x = pow(base, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class NormalizedPrimeL3:
    """Primary associate p of an inert rational prime q"""
    p: int
    q: int

    @property
    def element(self) -> EisensteinInt:
        return EisensteinInt(self.p, 0)

    @property
    def norm(self) -> int:
        return self.q * self.q

    def __str__(self) -> str:
        return str(self.p)


def normalize_prime_l3(q: int) -> NormalizedPrimeL3:
    """
    Return the unique associate p of q with p = 1 mod 3*sqrt(-3).

    A negative input is read as an already normalized value; normalization
    is idempotent.
    """
    q = abs(q)
    if not is_prime(q):
        raise NotPrime(f"{q} is not prime")
    if q % 3 != 2:
        raise NotInert(f"NotInert({-q}): {q} is not inert in Z[w]")
    if (q * q) % 9 != 1:
        raise NormNotOneMod9(f"NormNotOneMod9({-q}): {q}^2 = {(q * q) % 9} mod 9")

    primary = [
        unit * q for unit in UNITS
        if eis_divides(THREE_SQRT_MINUS_3, unit * q - ONE)
    ]
    if len(primary) != 1:
        raise InternalInvariantViolation(
            f"Expected exactly one primary associate of {q}, found {len(primary)}")
    associate = primary[0]
    if associate.b != 0:
        raise InternalInvariantViolation(f"Primary associate {associate} of {q} is not rational")
    return NormalizedPrimeL3(p=associate.a, q=q)


def enumerate_prime_list(bound: int) -> List[NormalizedPrimeL3]:
    """All normalized primes p with 1 <= -p <= bound, ascending by |p|"""
    primes = []
    for q in range(2, bound + 1):
        if q % 3 != 2 or not is_prime(q):
            continue
        try:
            primes.append(normalize_prime_l3(q))
        except NormNotOneMod9:
            continue
    logger.debug(f"Prime list up to {bound}: {len(primes)} entries")
    return primes
