"""
Published datasets: the prime list, the pair and p3 range of the
(-17, -593) table and the three permutation orbits with their printed alpha
"""
from dataclasses import dataclass
from typing import List, Tuple

from .eisenstein import enumerate_prime_list

PRIME_LIST_BOUND = 1000

TABLE1_PAIR: Tuple[int, int] = (-17, -593)


@dataclass(frozen=True)
class Table2Row:
    """One ordered row: the pair, p3 and alpha = x + y*cbrt(p1) as printed"""
    p1: int
    p2: int
    p3: int
    alpha_x: int
    alpha_y: int


TABLE2_TRIPLES: Tuple[Tuple[int, int, int], ...] = (
    (-17, -53, -431),
    (-17, -557, -773),
    (-17, -593, -773),
)

TABLE2_ROWS: Tuple[Table2Row, ...] = (
    Table2Row(-17, -53, -431, 8, 3),
    Table2Row(-53, -17, -431, 8, 1),
    # printed with p3 = -51
    Table2Row(-17, -431, -53, 31, 15),
    # the next two printed alphas do not solve the norm equation
    Table2Row(-431, -53, -17, 10, 3),
    Table2Row(-53, -431, -17, 10, -1),
    Table2Row(-431, -17, -53, 31, -4),

    Table2Row(-17, -557, -773, -42, -16),
    Table2Row(-557, -17, -773, -42, -2),
    Table2Row(-17, -773, -557, -23, 8),
    Table2Row(-773, -557, -17, -6, -1),
    Table2Row(-557, -773, -17, -6, 1),
    Table2Row(-773, -17, -557, -23, -3),

    Table2Row(-17, -593, -773, 9, 2),
    Table2Row(-593, -17, -773, 9, 1),
    Table2Row(-17, -773, -593, -23, 8),
    Table2Row(-773, -593, -17, -55, -6),
    Table2Row(-593, -773, -17, -55, 1),
    Table2Row(-773, -17, -593, -23, -3),
)


def prime_list() -> List[int]:
    return [np.p for np in enumerate_prime_list(PRIME_LIST_BOUND)]


def table1_primes() -> List[int]:
    """p3 values of the (-17, -593) table, in list order"""
    return [p for p in prime_list() if p not in TABLE1_PAIR]
