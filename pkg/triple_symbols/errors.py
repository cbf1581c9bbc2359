"""
Error hierarchy for triple symbol computations
"""
from typing import List, Sequence


class TripleSymbolError(ValueError):
    """Base class for every domain failure; exit code 1"""

    exit_code = 1

    @property
    def error_name(self) -> str:
        return type(self).__name__


class InvalidConfig(TripleSymbolError):
    pass


# eisenstein

class DivisorZero(TripleSymbolError):
    pass


class NotPrime(TripleSymbolError):
    pass


class PrimeOutOfRange(TripleSymbolError):
    pass


class NotInert(TripleSymbolError):
    pass


class NormNotOneMod9(TripleSymbolError):
    pass


# residue arithmetic

class NonResidue(TripleSymbolError):
    pass


class CharacterUndefined(TripleSymbolError):
    pass


class NotCubeRootOfUnity(TripleSymbolError):
    pass


class NoCubeRoot(TripleSymbolError):
    pass


class NotSplit(TripleSymbolError):
    pass


# eligibility

class IneligibleTriple(TripleSymbolError):
    """Carries every violated condition name, not only the first"""

    def __init__(self, violations: Sequence[str]):
        self.violations: List[str] = list(violations)
        super().__init__("Ineligible: " + ", ".join(self.violations))


# norm equations

class InputsEqual(TripleSymbolError):
    pass


class NotFoundWithinBound(TripleSymbolError):
    pass


class AssumptionANotWitnessed(TripleSymbolError):
    pass


# symbols

class DegenerateTheta(TripleSymbolError):
    pass


class ThetaNotUnitAtP3(TripleSymbolError):
    pass


class ReciprocityNotTestable(TripleSymbolError):
    pass


class PartialOrbit(TripleSymbolError):
    """Some orderings of the triple have no solution within the bound"""

    def __init__(self, message: str, available: dict):
        self.available = available
        super().__init__(message)


class InternalInvariantViolation(TripleSymbolError):
    """A proven identity failed: signals a convention bug"""

    exit_code = 2


# polylog

class DegenerateZ(TripleSymbolError):
    pass


class RhoUndefined(TripleSymbolError):
    pass


def exit_code_for(error_name: str) -> int:
    """Exit code of a report status; 0 for "ok" """
    if error_name == "ok":
        return 0
    if error_name == InternalInvariantViolation.__name__:
        return InternalInvariantViolation.exit_code
    return TripleSymbolError.exit_code
