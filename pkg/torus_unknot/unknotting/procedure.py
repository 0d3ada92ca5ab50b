"""
U-crossing data of the toric braid B(p, q) and the unknotting
number of torus knots and links.
"""
import math
from dataclasses import dataclass
from typing import List, Tuple

from cached_property import cached_property


__all__ = [
    'ToricParams',
    'staircase_positions',
    'u_crossing_data',
    'unknotting_number',
]


@dataclass(frozen=True)
class ToricParams:
    """
    >>> ToricParams(6, 4).d, ToricParams(6, 4).is_knot
    (2, False)
    """
    p: int
    q: int

    def __post_init__(self):
        if self.p < 2 or self.q < 1:
            raise ValueError(
                f'Torus parameters need p >= 2 and q >= 1, '
                f'got p={self.p}, q={self.q}'
            )

    @cached_property
    def d(self) -> int:
        return math.gcd(self.p, self.q)

    @property
    def is_knot(self) -> bool:
        return self.d == 1

    @property
    def crossings(self) -> int:
        return self.q * (self.p - 1)


def staircase_positions(p: int, length: int) -> List[int]:
    """
    {k(p-1) - j : 2 <= k <= length, 0 <= j <= k-2}, ascending. Flipping
    these in `length` blocks of s_1 ... s_(p-1) inverts the last k - 1
    letters of block k.

    >>> staircase_positions(5, 3)
    [8, 11, 12]
    """
    return sorted(
        k * (p - 1) - j
        for k in range(2, length + 1)
        for j in range(k - 1)
    )


def u_crossing_data(p: int, q: int) -> Tuple[int, ...]:
    """
    U-crossing data of B(p, q). For p >= q the staircase of the q blocks,
    for q = mp + a one full staircase X per period of p blocks and the
    staircase Y of the remaining a blocks. Coprimality is not required.

    >>> u_crossing_data(3, 4)
    (4, 5, 6)
    >>> u_crossing_data(5, 1)
    ()
    """
    params = ToricParams(p, q)
    if p >= q:
        return tuple(staircase_positions(p, q))
    m, a = divmod(q, p)
    period = p * (p - 1)
    x = staircase_positions(p, p)
    y = staircase_positions(p, a)
    positions = [j * period + value for j in range(m) for value in x]
    positions += [m * period + value for value in y]
    assert positions == sorted(positions), (params, positions)
    return tuple(positions)


def unknotting_number(p: int, q: int) -> int:
    """
    ((p-1)(q-1) + gcd(p, q) - 1) / 2

    >>> unknotting_number(7, 4), unknotting_number(6, 4)
    (9, 8)
    """
    params = ToricParams(p, q)
    numerator = (p - 1) * (q - 1) + params.d - 1
    assert numerator % 2 == 0, (params, numerator)
    return numerator // 2
