"""
Eligibility of prime triples
Checks the congruence and residue conditions on (p1, p2, p3) for l = 2, 3
and packages verified inputs
"""
import logging
from dataclasses import dataclass, field
from itertools import permutations
from typing import Dict, List, Optional, Sequence, Tuple

from .eisenstein import NormalizedPrimeL3, is_prime, normalize_prime_l3
from .errors import IneligibleTriple, NormNotOneMod9, NotInert, NotPrime
from .residue import cubic_character, legendre

logger = logging.getLogger(__name__)

SUPPORTED_ELLS = (2, 3)


@dataclass(frozen=True)
class TripleContext:
    """Verified triple (or pair, with p3 None) for a given l"""
    ell: int
    p1: int
    p2: int
    p3: Optional[int] = None
    checks: Dict[str, bool] = field(default_factory=dict, compare=False, hash=False)
    normalized: Tuple[NormalizedPrimeL3, ...] = field(default=(), compare=False, hash=False)

    @property
    def primes(self) -> Tuple[int, ...]:
        return tuple(p for p in (self.p1, self.p2, self.p3) if p is not None)

    @property
    def q3(self) -> int:
        """Residue characteristic at p3"""
        return abs(self.p3)

    def normalized_prime(self, index: int) -> NormalizedPrimeL3:
        return self.normalized[index]


def _check_primes(ell: int, raw: Sequence[int]) -> Tuple[Dict[str, bool], List[str], List[Optional[int]], List[Optional[NormalizedPrimeL3]]]:
    checks: Dict[str, bool] = {}
    violations: List[str] = []
    values: List[Optional[int]] = []
    normalized: List[Optional[NormalizedPrimeL3]] = []

    for p in raw:
        if ell == 2:
            prime = p > 0 and is_prime(p)
            checks[f"Prime({p})"] = prime
            if not prime:
                violations.append(f"NotPrime({p})")
                values.append(None)
                normalized.append(None)
                continue
            one_mod_4 = p % 4 == 1
            checks[f"OneMod4({p})"] = one_mod_4
            if not one_mod_4:
                violations.append(f"NotOneMod4({p})")
            values.append(p)
            normalized.append(None)
        else:
            try:
                np = normalize_prime_l3(p)
            except (NotPrime, NotInert, NormNotOneMod9) as exc:
                display = p if p < 0 else -p
                checks[f"Normalized({p})"] = False
                violations.append(f"{exc.error_name}({display})")
                values.append(None)
                normalized.append(None)
                continue
            checks[f"Normalized({np.p})"] = True
            values.append(np.p)
            normalized.append(np)

    return checks, violations, values, normalized


def _check_pairs(ell: int, values, normalized, checks: Dict[str, bool], violations: List[str]):
    known = [(v, n) for v, n in zip(values, normalized) if v is not None]
    if len({v for v, _ in known}) != len(known):
        checks["Distinct"] = False
        violations.append("NotDistinct(" + ",".join(str(v) for v, _ in known) + ")")
        return
    checks["Distinct"] = True

    for (pi, ni), (pj, nj) in permutations(known, 2):
        if ell == 2:
            ok = legendre(pi, pj) == 1
            checks[f"({pi}/{pj})=1"] = ok
            if not ok:
                violations.append(f"NotQuadraticResidue({pi},{pj})")
        else:
            ok = cubic_character(pi, nj) == 0
            checks[f"({pi}/{pj})_3=1"] = ok
            if not ok:
                violations.append(f"NotCubicResidue({pi},{pj})")


def _build(ell: int, raw: Sequence[int]) -> TripleContext:
    if ell not in SUPPORTED_ELLS:
        raise IneligibleTriple([f"UnsupportedEll({ell})"])

    checks, violations, values, normalized = _check_primes(ell, raw)
    _check_pairs(ell, values, normalized, checks, violations)

    if violations:
        logger.debug(f"Ineligible l={ell} input {tuple(raw)}: {violations}")
        raise IneligibleTriple(violations)

    padded = list(values) + [None] * (3 - len(values))
    return TripleContext(
        ell=ell,
        p1=padded[0],
        p2=padded[1],
        p3=padded[2],
        checks=checks,
        normalized=tuple(normalized) if ell == 3 else (),
    )


def check_triple(ell: int, p1: int, p2: int, p3: int) -> TripleContext:
    """Verify every condition on the triple; collect all violations"""
    return _build(ell, (p1, p2, p3))


def check_pair(ell: int, p1: int, p2: int) -> TripleContext:
    """Conditions on the first two primes only"""
    return _build(ell, (p1, p2))


def is_eligible(ell: int, p1: int, p2: int, p3: int) -> bool:
    try:
        check_triple(ell, p1, p2, p3)
        return True
    except IneligibleTriple:
        return False
