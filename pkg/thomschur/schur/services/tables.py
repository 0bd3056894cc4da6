"""
The d and e coefficient tables of the I22 and A3 Thom polynomials.

Both have a first column read off a rational generating series and the
rest filled by entry(i+1, j) = entry(i, j-1) + entry(i, j) inside a
triangular zero pattern.
"""
from dataclasses import dataclass
from functools import reduce
from typing import Sequence

from schur.models import TableKind
from schur.services.exceptions import ParameterRangeException


@dataclass(frozen=True)
class CoeffTable:
    kind: TableKind
    first_row: int
    first_column: int
    entries: tuple[tuple[int, ...], ...]

    @property
    def last_row(self) -> int:
        return self.first_row + len(self.entries) - 1

    def get(self, i: int, j: int) -> int:
        """Entry in matrix coordinates; zero outside the stored range."""
        row, column = i - self.first_row, j - self.first_column
        if 0 <= row < len(self.entries) and 0 <= column < len(self.entries[row]):
            return self.entries[row][column]
        return 0

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i - self.first_row]

    def first_column_values(self) -> list[int]:
        return [row[0] for row in self.entries]


def _multiply(a: Sequence[int], b: Sequence[int]) -> list[int]:
    product = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            product[i + j] += x * y
    return product


def series_coefficients(numerator: Sequence[int], denominator: Sequence[int], count: int) -> list[int]:
    """First count coefficients of numerator/denominator as a power series in z; denominator[0] == 1."""
    coefficients = []
    for n in range(count):
        value = numerator[n] if n < len(numerator) else 0
        value -= sum(denominator[k] * coefficients[n - k]
                     for k in range(1, min(n, len(denominator) - 1) + 1))
        coefficients.append(value)
    return coefficients


def _linear_factors(*roots: int) -> list[int]:
    """(1 - root_1 z)(1 - root_2 z)..."""
    return reduce(_multiply, ([1, -root] for root in roots), [1])


def _fill(first_column: list[int], widths: list[int]) -> tuple[tuple[int, ...], ...]:
    rows: list[list[int]] = []
    width = max(widths)
    for n, head in enumerate(first_column):
        row = [head] + [0] * (width - 1)
        for j in range(1, widths[n]):
            row[j] = rows[n - 1][j - 1] + rows[n - 1][j]
        rows.append(row)
    return tuple(tuple(row) for row in rows)


def d_table(rows: int) -> CoeffTable:
    """d_{i1} from 1/((1-z)(1-2z)); d_{ij} = 0 for j > (i+1)//2."""
    if rows < 1:
        raise ParameterRangeException("rows", rows, 1)
    first_column = series_coefficients([1], _linear_factors(1, 2), rows)
    widths = [(i + 1) // 2 for i in range(1, rows + 1)]
    return CoeffTable(TableKind.D, TableKind.get_first_row(TableKind.D),
                      TableKind.get_first_column(TableKind.D), _fill(first_column, widths))


def e_table(rows: int) -> CoeffTable:
    """e_{i0} from (5-6z)/((1-z)(1-2z)(1-3z)); e_{ij} = 0 for j > (i-2)//2."""
    if rows < 2:
        raise ParameterRangeException("rows", rows, 2)
    first_column = series_coefficients([5, -6], _linear_factors(1, 2, 3), rows - 1)
    widths = [(i - 2) // 2 + 1 for i in range(2, rows + 1)]
    return CoeffTable(TableKind.E, TableKind.get_first_row(TableKind.E),
                      TableKind.get_first_column(TableKind.E), _fill(first_column, widths))
