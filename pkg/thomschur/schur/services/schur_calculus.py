"""
Complete functions S_i(A - B), Schur determinants S_I(A - B), hooks,
resultants and the factorization of Schur functions whose diagram contains
the (n^m) rectangle.

Partitions are written weakly increasing at the surface (1,3,3) and stored
weakly decreasing (3,3,1) for the Jacobi-Trudi determinants.
"""
import logging
from dataclasses import dataclass
from functools import lru_cache, total_ordering
from itertools import combinations_with_replacement
from typing import Iterable, Sequence

from django.conf import settings
from sympy.utilities.iterables import partitions

from schur.services.alphabets import Alphabet, VirtualAlphabet, virtual
from schur.services.exceptions import CardinalityMismatchException, InvalidPartitionException
from schur.services.poly_core import MPoly, RING, det_fraction_free

logging.basicConfig(level=logging.INFO)
verbose = settings.DEBUG


@total_ordering
@dataclass(frozen=True)
class Partition:
    rows: tuple[int, ...] = ()

    def __post_init__(self):
        rows = tuple(int(row) for row in self.rows)
        if any(row < 0 for row in rows) or any(a < b for a, b in zip(rows, rows[1:])):
            raise InvalidPartitionException(f"Rows {rows} are not weakly decreasing and nonnegative")
        object.__setattr__(self, "rows", tuple(row for row in rows if row))

    @classmethod
    def of(cls, parts: Iterable[int]) -> 'Partition':
        """From the weakly increasing notation; leading zeros are dropped."""
        parts = tuple(parts)
        if any(part < 0 for part in parts) or any(a > b for a, b in zip(parts, parts[1:])):
            raise InvalidPartitionException(f"{InvalidPartitionException.default_detail}, got {parts}")
        return cls(tuple(reversed(parts)))

    @classmethod
    def from_rows(cls, rows: Iterable[int]) -> 'Partition':
        return cls(tuple(rows))

    @classmethod
    def parse(cls, text: str) -> 'Partition':
        text = text.strip().strip("[]()")
        if not text:
            return cls()
        try:
            return cls.of(int(part) for part in text.split(","))
        except ValueError:
            raise InvalidPartitionException(f"{InvalidPartitionException.default_detail}, got '{text}'")

    @classmethod
    def rectangle(cls, height: int, width: int) -> 'Partition':
        """(width^height): height rows of length width."""
        return cls((width,) * height) if width else cls()

    @property
    def parts(self) -> tuple[int, ...]:
        return tuple(reversed(self.rows))

    @property
    def weight(self) -> int:
        return sum(self.rows)

    @property
    def length(self) -> int:
        return len(self.rows)

    def padded(self, length: int) -> tuple[int, ...]:
        """Weakly increasing parts with leading zeros up to length."""
        return (0,) * (length - self.length) + self.parts

    def conjugate(self) -> 'Partition':
        if not self.rows:
            return Partition()
        return Partition(tuple(sum(1 for row in self.rows if row > column)
                               for column in range(self.rows[0])))

    def contains(self, other: 'Partition') -> bool:
        return other.length <= self.length and all(a >= b for a, b in zip(self.rows, other.rows))

    def in_hook(self, m: int, n: int) -> bool:
        return self.length <= m or self.rows[m] <= n

    def sort_key(self) -> tuple[int, tuple[int, ...]]:
        return self.weight, self.parts

    def __lt__(self, other):
        if not isinstance(other, Partition):
            return NotImplemented
        return self.sort_key() < other.sort_key()

    def __str__(self):
        return ",".join(str(part) for part in self.parts)


@dataclass(frozen=True)
class HookSpec:
    m: int
    n: int

    def __post_init__(self):
        if self.m < 0 or self.n < 0:
            raise CardinalityMismatchException(f"Hook sizes must be nonnegative, got ({self.m},{self.n})")


def as_index_sequence(index: Partition | Sequence[int]) -> tuple[int, ...]:
    return index.parts if isinstance(index, Partition) else tuple(index)


def partitions_of_weight(weight: int, max_length: int | None = None) -> list[Partition]:
    """All partitions of the weight with at most max_length parts, in canonical order."""
    if weight < 0:
        return []
    found = []
    for multiplicities in partitions(weight, m=max_length):
        rows = sorted((part for part, count in multiplicities.items() for _ in range(count)),
                      reverse=True)
        if sum(rows) == weight:
            found.append(Partition(tuple(rows)))
    return sorted(set(found))


@lru_cache(maxsize=settings.THOMSCHUR_SCHUR_CACHE_SIZE)
def complete_series(v: VirtualAlphabet, degree: int) -> tuple[MPoly, ...]:
    """
    S_0(v), ..., S_degree(v): the truncated series prod(1 - bz) / prod(1 - az).
    Cached values are shared; never mutate them.
    """
    coefficients = [RING.one] + [RING.zero] * degree
    for b in v.minus.polys():
        for k in range(degree, 0, -1):
            coefficients[k] = coefficients[k] - b * coefficients[k - 1]
    for a in v.plus.polys():
        for k in range(1, degree + 1):
            coefficients[k] = coefficients[k] + a * coefficients[k - 1]
    return tuple(coefficients)


def complete_function(i: int, v: VirtualAlphabet) -> MPoly:
    if i < 0:
        return RING.zero
    return complete_series(v, i)[i]


def hook_contains(index: Partition, h: HookSpec) -> bool:
    return index.in_hook(h.m, h.n)


def resultant(a: Alphabet, b: Alphabet) -> MPoly:
    product = RING.one
    for x in a.polys():
        for y in b.polys():
            product = product * (x - y)
    return product


def straighten(index: Sequence[int]) -> tuple[int, Partition] | None:
    """
    S_index = sign * S_partition, or None when the determinant vanishes.
    Row exchanges of the Jacobi-Trudi matrix act on index_p - p.
    """
    decreasing = tuple(reversed(tuple(index)))
    shifted = [part - position for position, part in enumerate(decreasing, start=1)]
    if len(set(shifted)) < len(shifted):
        return None
    inversions = sum(1 for i in range(len(shifted)) for j in range(i + 1, len(shifted))
                     if shifted[i] < shifted[j])
    ordered = sorted(shifted, reverse=True)
    rows = [value + position for position, value in enumerate(ordered, start=1)]
    if rows and rows[-1] < 0:
        return None
    return (-1) ** inversions, Partition(tuple(rows))


def _schur_determinant(parts: tuple[int, ...], v: VirtualAlphabet) -> MPoly:
    k = len(parts)
    if k == 0:
        return RING.one
    top = max(part + p for p, part in enumerate(parts))
    if top < 0:
        return RING.zero
    series = complete_series(v, top)

    def entry(n: int) -> MPoly:
        return series[n] if n >= 0 else RING.zero

    matrix = [[entry(parts[p] + p - q) for q in range(k)] for p in range(k)]
    return det_fraction_free(matrix)


def schur(index: Partition | Sequence[int], v: VirtualAlphabet, fast: bool = False) -> MPoly:
    """
    det[S_{i_p + p - q}(v)] for any integer sequence i_1, ..., i_k.

    With fast=True, partitions outside the (|plus|, |minus|)-hook return 0 and
    partitions containing the (n^m) rectangle go through the factorization.
    """
    parts = as_index_sequence(index)
    if not fast:
        return _schur_determinant(parts, v)
    straightened = straighten(parts)
    if straightened is None:
        return RING.zero
    sign, partition = straightened
    m, n = v.cardinalities
    if not partition.in_hook(m, n):
        return RING.zero
    if m and n and partition.contains(Partition.rectangle(m, n)):
        inner = Partition.from_rows(row - n for row in partition.rows[:m])
        arm = Partition.from_rows(partition.rows[m:])
        return sign * schur_factorized(arm, inner, v.plus, v.minus)
    return sign * _schur_determinant(partition.parts, v)


def concatenated_partition(j: Partition, i: Partition, m: int, n: int) -> Partition:
    """The partition (j_1, ..., j_k, i_1 + n, ..., i_m + n)."""
    if i.length > m:
        raise CardinalityMismatchException(f"I={i} has more than {m} parts")
    parts = j.parts + tuple(part + n for part in i.padded(m))
    try:
        return Partition.of(parts)
    except InvalidPartitionException:
        raise CardinalityMismatchException(f"({j}) followed by ({i})+{n} is not a partition")


def schur_factorized(j: Partition, i: Partition, a: Alphabet, b: Alphabet) -> MPoly:
    """S_{(J, I+n)}(A - B) = S_I(A) * R(A, B) * S_J(-B) with m = |A|, n = |B|."""
    concatenated_partition(j, i, len(a), len(b))
    return schur(i, virtual(a)) * resultant(a, b) * schur(j, virtual(None, b))


def skew_schur(outer: Partition, inner: Partition, v: VirtualAlphabet) -> MPoly:
    """Jacobi-Trudi skew determinant det[S_{lambda_p - mu_q - p + q}(v)]."""
    size = max(outer.length, inner.length)
    lam = outer.rows + (0,) * (size - outer.length)
    mu = inner.rows + (0,) * (size - inner.length)
    if size == 0:
        return RING.one
    top = max(lam[p] - mu[q] - p + q for p in range(size) for q in range(size))
    series = complete_series(v, max(top, 0))

    def entry(n: int) -> MPoly:
        return series[n] if n >= 0 else RING.zero

    matrix = [[entry(lam[p] - mu[q] - p + q) for q in range(size)] for p in range(size)]
    return det_fraction_free(matrix)


def f_index(i: Sequence[int], n: int) -> tuple[int, ...]:
    """(n - i_m, ..., n - i_1, n + |I|) for I = (i_1 <= ... <= i_m)."""
    return tuple(n - part for part in reversed(tuple(i))) + (n + sum(i),)


def f_function(a: Alphabet, n: int, v: VirtualAlphabet, fast: bool = False) -> MPoly:
    """Sum over I = (i_1 <= ... <= i_m <= n) of S_I(A) * S_{f_index(I, n)}(v)."""
    total = RING.zero
    coefficient_argument = virtual(a)
    for i in combinations_with_replacement(range(n + 1), len(a)):
        coefficient = schur(i, coefficient_argument)
        if coefficient:
            total = total + coefficient * schur(f_index(i, n), v, fast=fast)
    return total


def lambda_function(j: int, v: VirtualAlphabet) -> MPoly:
    return (-1) ** j * complete_function(j, -v)
