"""
Reproduces the MATLAB routine that lists two minimal unknotting crossing
data sets of a torus knot.

The program concatenates B_1 with the shifted pairwise unions of the later
steps (W, reported as `primary_raw`), prints W as the first data set and
((p-1)(q-1)/2) + 1 - W as the second. The second formula leaves 1..q(p-1)
for most inputs; the mirrored data (p-1)q + 1 - W indexes the reversed braid
and is reported as the corrected variant.
"""
import math
from dataclasses import dataclass
from typing import Tuple

from torus_unknot.unknotting.recursion import (
    EVEN, combined_records, euclid_trace,
)


__all__ = [
    'ParityReport',
    'matlab_parity',
]


@dataclass(frozen=True)
class ParityReport:
    p: int
    q: int
    primary_raw: Tuple[int, ...]
    mirrored_as_printed: Tuple[int, ...]
    mirrored_corrected: Tuple[int, ...]
    printed_by_program: bool

    @property
    def primary(self) -> Tuple[int, ...]:
        return tuple(sorted(self.primary_raw))

    @property
    def crossings(self) -> int:
        return self.q * (self.p - 1)

    @property
    def out_of_range(self) -> Tuple[int, ...]:
        """Values of the as-printed second set outside of 1..q(p-1)."""
        return tuple(
            value for value in self.mirrored_as_printed
            if not 1 <= value <= self.crossings
        )

    @property
    def as_printed_in_range(self) -> bool:
        return len(self.out_of_range) == 0


def matlab_parity(p: int, q: int) -> ParityReport:
    """
    >>> report = matlab_parity(7, 4)
    >>> report.primary_raw
    (12, 17, 18, 22, 23, 24, 8, 13, 14)
    >>> report.out_of_range
    (-2, -7, -8, -12, -13, -14, -3, -4)
    >>> report.mirrored_corrected
    (1, 2, 3, 7, 8, 11, 12, 13, 17)
    """
    if math.gcd(p, q) != 1:
        raise ValueError(
            f'The program targets torus knots, but gcd({p}, {q}) = '
            f'{math.gcd(p, q)}'
        )
    trace = euclid_trace(p, q)
    raw = tuple(record.position for record in combined_records(trace, p))
    as_printed_offset = (p - 1) * (q - 1) // 2 + 1
    corrected_offset = (p - 1) * q + 1
    return ParityReport(
        p=p,
        q=q,
        primary_raw=raw,
        mirrored_as_printed=tuple(as_printed_offset - w for w in raw),
        mirrored_corrected=tuple(sorted(corrected_offset - w for w in raw)),
        printed_by_program=trace.steps[-1].parity == EVEN,
    )
