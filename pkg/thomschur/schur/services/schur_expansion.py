"""
Integer combinations of Schur functions, the form every Thom polynomial is
written in, and the passage between them and polynomials.
"""
import logging
import re
from typing import Iterable, Mapping, Sequence

from django.conf import settings
from sortedcontainers import SortedDict

from schur.services.alphabets import Alphabet, VirtualAlphabet, virtual
from schur.services.exceptions import ExpressionSyntaxException, InconsistentSystemException, \
    LengthExceededException, NonIntegerCoefficientsException, NotInSpanException, \
    UnderdeterminedSystemException
from schur.services.poly_core import MPoly, RING, coeff_extract, solve_rational_system
from schur.services.schur_calculus import Partition, partitions_of_weight, schur

logging.basicConfig(level=logging.INFO)
verbose = settings.DEBUG

_TERM = re.compile(r"\s*([+-])?\s*(\d+)?\s*\*?\s*S(?:\[([\d,\s]*)\]|_\{([\d,]*)\}|_(\d))\s*")


class SchurExpansion:
    """
    Finitely supported map Partition -> integer, sorted by (weight, parts).
    Instances are treated as immutable; arithmetic returns new expansions.
    """

    def __init__(self, terms: Mapping[Partition, int] | Iterable[tuple[Partition, int]] = (),
                 r: int | None = None, name: str | None = None):
        self._terms: SortedDict = SortedDict()
        pairs = terms.items() if isinstance(terms, Mapping) else terms
        for partition, coeff in pairs:
            if not isinstance(partition, Partition):
                partition = Partition.of(partition)
            total = self._terms.get(partition, 0) + int(coeff)
            if total:
                self._terms[partition] = total
            else:
                self._terms.pop(partition, None)
        self.r = r
        self.name = name

    @classmethod
    def from_pairs(cls, *pairs: tuple[Sequence[int] | Partition, int], r: int | None = None,
                   name: str | None = None) -> 'SchurExpansion':
        return cls(pairs, r=r, name=name)

    @classmethod
    def single(cls, partition: Partition | Sequence[int], coeff: int = 1, **meta) -> 'SchurExpansion':
        return cls([(partition, coeff)], **meta)

    @classmethod
    def parse(cls, text: str, r: int | None = None, name: str | None = None) -> 'SchurExpansion':
        """Accepts 'S[1,3,3]+3S[3,4]' and the compact 'S_{133}+3S_{34}' or 'S_{6,10}'."""
        text = text.strip()
        if text == "0":
            return cls(r=r, name=name)
        pairs = []
        position = 0
        while position < len(text):
            match = _TERM.match(text, position)
            if match is None or match.end() == position:
                raise ExpressionSyntaxException(text)
            if position and match.group(1) is None:
                raise ExpressionSyntaxException(text)
            sign, digits, bracketed, compact, short = match.groups()
            coeff = int(digits) if digits else 1
            if bracketed is not None:
                parts = [int(part) for part in bracketed.replace(" ", "").split(",") if part]
            elif compact is not None:
                parts = [int(part) for part in (compact.split(",") if "," in compact else compact)]
            else:
                parts = [int(short)]
            pairs.append((Partition.of(parts), -coeff if sign == "-" else coeff))
            position = match.end()
        return cls(pairs, r=r, name=name)

    def with_meta(self, r: int | None = None, name: str | None = None) -> 'SchurExpansion':
        return SchurExpansion(self._terms, r=r if r is not None else self.r,
                              name=name if name is not None else self.name)

    def items(self) -> list[tuple[Partition, int]]:
        return list(self._terms.items())

    def partitions(self) -> list[Partition]:
        return list(self._terms.keys())

    def coefficient(self, partition: Partition | Sequence[int]) -> int:
        if not isinstance(partition, Partition):
            partition = Partition.of(partition)
        return self._terms.get(partition, 0)

    def weights(self) -> set[int]:
        return {partition.weight for partition in self._terms}

    def is_homogeneous(self, weight: int | None = None) -> bool:
        weights = self.weights()
        if weight is None:
            return len(weights) <= 1
        return weights <= {weight}

    def is_nonnegative(self) -> bool:
        return all(coeff >= 0 for coeff in self._terms.values())

    def max_length(self) -> int:
        return max((partition.length for partition in self._terms), default=0)

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __iter__(self):
        return iter(self._terms.items())

    def __eq__(self, other):
        if not isinstance(other, SchurExpansion):
            return NotImplemented
        return dict(self._terms) == dict(other._terms)

    def __hash__(self):
        return hash(tuple(self._terms.items()))

    def __add__(self, other: 'SchurExpansion') -> 'SchurExpansion':
        return SchurExpansion(list(self._terms.items()) + list(other._terms.items()),
                              r=self.r, name=self.name)

    def __neg__(self) -> 'SchurExpansion':
        return SchurExpansion({partition: -coeff for partition, coeff in self._terms.items()},
                              r=self.r, name=self.name)

    def __sub__(self, other: 'SchurExpansion') -> 'SchurExpansion':
        return self + (-other)

    def __mul__(self, factor: int) -> 'SchurExpansion':
        return SchurExpansion({partition: coeff * factor for partition, coeff in self._terms.items()},
                              r=self.r, name=self.name)

    __rmul__ = __mul__

    def to_text(self) -> str:
        """Compact rendering, e.g. S_{133}+3S_{34} or 31S_{6,10}."""
        if not self._terms:
            return "0"
        pieces = []
        for partition, coeff in self._terms.items():
            parts = partition.parts
            separator = "," if any(part >= 10 for part in parts) else ""
            label = f"S_{{{separator.join(str(part) for part in parts)}}}"
            magnitude = "" if abs(coeff) == 1 else str(abs(coeff))
            sign = "-" if coeff < 0 else "+"
            pieces.append(f"{sign}{magnitude}{label}")
        return "".join(pieces).lstrip("+")

    def to_data(self) -> dict:
        return {"r": self.r,
                "name": self.name,
                "terms": [{"partition": list(partition.parts), "coeff": str(coeff)}
                          for partition, coeff in self._terms.items()]}

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"{SchurExpansion.__name__}({self.to_text()}, r={self.r}, name={self.name})"


def evaluate(e: SchurExpansion, v: VirtualAlphabet, fast: bool = True) -> MPoly:
    total = RING.zero
    for partition, coeff in e:
        value = schur(partition, v, fast=fast)
        if value:
            total = total + coeff * value
    return total


def tau_shift(e: SchurExpansion) -> SchurExpansion:
    """S_{i1,i2,i3} -> S_{i1+1,i2+1,i3+1} on supports of length at most 3."""
    if e.max_length() > 3:
        raise LengthExceededException()
    return SchurExpansion([(Partition.of(part + 1 for part in partition.padded(3)), coeff)
                           for partition, coeff in e], r=e.r, name=e.name)


def variable_template(m: int, n: int) -> VirtualAlphabet:
    """A_m - B_n over the a- and b-variables."""
    return virtual(Alphabet.variables(*(f"a{k}" for k in range(1, m + 1))),
                   Alphabet.variables(*(f"b{k}" for k in range(1, n + 1))))


def coefficient_matching_rows(columns: Sequence[MPoly], target: MPoly) -> tuple[list[list[int]], list[int]]:
    """
    Rows of the linear system sum_j c_j * columns[j] = target, one row per
    monomial occurring anywhere, monomials in sorted order.
    """
    monomials = set(target.keys())
    for column in columns:
        monomials.update(column.keys())
    matrix, rhs = [], []
    for monomial in sorted(monomials):
        matrix.append([coeff_extract(column, monomial) for column in columns])
        rhs.append(coeff_extract(target, monomial))
    return matrix, rhs


def expand_in_schur_basis(p: MPoly, template: VirtualAlphabet | None = None,
                          weight: int = 0) -> SchurExpansion:
    """
    The unique integer combination of S_I(A_m - B_n), I of the weight in the
    (m,n)-hook, equal to p. The template defaults to A_weight - B_weight.
    """
    if template is None:
        template = variable_template(weight, weight)
    m, n = template.cardinalities
    basis = [partition for partition in partitions_of_weight(weight) if partition.in_hook(m, n)]
    columns = [schur(partition, template) for partition in basis]
    matrix, rhs = coefficient_matching_rows(columns, p)
    if verbose:
        logging.info(f"expand_in_schur_basis: {len(basis)} basis functions, {len(matrix)} monomials")
    try:
        result = solve_rational_system(matrix, rhs) if matrix else None
    except InconsistentSystemException:
        raise NotInSpanException()
    if result is None:
        return SchurExpansion()
    if not result.is_unique:
        raise UnderdeterminedSystemException(result.kernel_dim)
    if not result.is_integral:
        raise NonIntegerCoefficientsException(
            f"{NonIntegerCoefficientsException.default_detail}: "
            + ", ".join(f"{partition}: {value}" for partition, value in zip(basis, result.solution)))
    return SchurExpansion([(partition, int(value)) for partition, value in zip(basis, result.solution)])
