"""
Exact arithmetic substrate: one global multivariate polynomial ring over ZZ,
fraction-free determinants and exact rational linear solving.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence, TypeAlias

from django.conf import settings
from sympy import QQ, ZZ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.orderings import grlex
from sympy.polys.polyerrors import ExactQuotientFailed
from sympy.polys.rings import PolyElement, ring

from schur.models import PolyOperation
from schur.services.exceptions import DivisionFailedException, InconsistentSystemException, \
    LogicError, UnknownVariableException

logging.basicConfig(level=logging.INFO)
verbose = settings.DEBUG

MPoly: TypeAlias = PolyElement
RatMatrix: TypeAlias = Sequence[Sequence[Fraction | int]]

CofactorLimit = 5


def _variable_names(size: int) -> tuple[str, ...]:
    """Global variable order: x < x1 < x2 < a1.. < b1.. < y1.. < z."""
    indexed = [f"{family}{n}" for family in "aby" for n in range(1, size + 1)]
    return ("x", "x1", "x2", *indexed, "z")


VARIABLE_NAMES = _variable_names(settings.THOMSCHUR_ALPHABET_SIZE)
RING, *_GENERATORS = ring(",".join(VARIABLE_NAMES), ZZ, grlex)
GENERATORS: dict[str, MPoly] = dict(zip(VARIABLE_NAMES, _GENERATORS))
VARIABLE_INDEX: dict[str, int] = {name: n for n, name in enumerate(VARIABLE_NAMES)}
POLY_DOMAIN = RING.to_domain()


def variable(name: str) -> MPoly:
    try:
        return GENERATORS[name]
    except KeyError:
        raise UnknownVariableException(name)


def constant(value: int) -> MPoly:
    return RING(value)


def mpoly_arith(a: MPoly, b: MPoly, op: PolyOperation) -> MPoly:
    match op:
        case PolyOperation.ADD:
            return a + b
        case PolyOperation.SUB:
            return a - b
        case PolyOperation.MUL:
            return a * b
    raise LogicError(f"Unknown polynomial operation '{op}'")


def monomial_exponents(m: MPoly | Mapping[str, int] | Sequence[int]) -> tuple[int, ...]:
    """Exponent vector of a monomial given as a ring element, a {name: power} map or a raw vector."""
    if isinstance(m, PolyElement):
        if len(m) != 1:
            raise LogicError(f"'{m}' is not a monomial")
        return next(iter(m.keys()))
    if isinstance(m, Mapping):
        exponents = [0] * len(VARIABLE_NAMES)
        for name, power in m.items():
            if name not in VARIABLE_INDEX:
                raise UnknownVariableException(name)
            exponents[VARIABLE_INDEX[name]] = power
        return tuple(exponents)
    return tuple(m)


def coeff_extract(p: MPoly, m: MPoly | Mapping[str, int] | Sequence[int]) -> int:
    return int(p.get(monomial_exponents(m), 0))


def coefficient_in(p: MPoly, name: str, degree: int) -> MPoly:
    """
    Coefficient of name**degree, as a polynomial in the remaining variables.
    """
    if name not in VARIABLE_INDEX:
        raise UnknownVariableException(name)
    index = VARIABLE_INDEX[name]
    terms = {}
    for monom, coeff in p.items():
        if monom[index] == degree:
            terms[monom[:index] + (0,) + monom[index + 1:]] = coeff
    return RING.from_dict(terms) if terms else RING.zero


def specialize(p: MPoly, name: str, value: MPoly | int) -> MPoly:
    return p.compose(variable(name), RING(value))


def evaluate_at(p: MPoly, point: Mapping[str, int]) -> int:
    """Integer value of p; every variable occurring in p must be assigned."""
    substitutions = [(variable(name), value) for name, value in point.items()]
    if unassigned := [name for name in variables_of(p) if name not in point]:
        raise UnknownVariableException(unassigned[0])
    return constant_value(p.subs(substitutions) if substitutions else p)


def constant_value(p: MPoly) -> int:
    if not p.is_ground:
        raise LogicError(f"'{render(p)}' is not a constant")
    return int(p.get(RING.zero_monom, 0))


def variables_of(p: MPoly) -> tuple[str, ...]:
    occurring = set()
    for monom in p.keys():
        occurring.update(n for n, power in enumerate(monom) if power)
    return tuple(VARIABLE_NAMES[n] for n in sorted(occurring))


def exact_quotient(p: MPoly, q: MPoly) -> MPoly:
    try:
        return p.exquo(q)
    except ExactQuotientFailed:
        raise DivisionFailedException(f"{DivisionFailedException.default_detail}: "
                                      f"({render(p)}) / ({render(q)})")


def render(p: MPoly) -> str:
    """Canonical string, terms in the ring's graded lexicographic order."""
    return str(p) if p else "0"


def cofactor_determinant(matrix: Sequence[Sequence[MPoly]]) -> MPoly:
    """Laplace expansion along the first row, skipping zero entries."""
    order = len(matrix)
    if order == 0:
        return RING.one
    if order == 1:
        return RING(matrix[0][0])
    if order == 2:
        return matrix[0][0] * matrix[1][1] - matrix[0][1] * matrix[1][0]
    result = RING.zero
    for column, entry in enumerate(matrix[0]):
        if not entry:
            continue
        minor = [row[:column] + row[column + 1:] for row in matrix[1:]]
        term = entry * cofactor_determinant(minor)
        result = result - term if column % 2 else result + term
    return result


def det_fraction_free(matrix: Sequence[Sequence[MPoly]]) -> MPoly:
    """
    Exact determinant. Orders up to CofactorLimit use cofactor expansion,
    larger ones the Bareiss elimination of DomainMatrix over ZZ[variables].
    """
    order = len(matrix)
    if any(len(row) != order for row in matrix):
        raise LogicError(f"Determinant of a non-square {order}-row matrix")
    if order <= CofactorLimit:
        return cofactor_determinant(matrix)
    rows = [[RING(entry) for entry in row] for row in matrix]
    determinant = DomainMatrix(rows, (order, order), POLY_DOMAIN).det()
    if verbose:
        logging.info(f"det_fraction_free: Bareiss on order {order}")
    return RING(determinant)


@dataclass(frozen=True)
class RationalSolution:
    solution: tuple[QQ.dtype, ...]
    kernel_dim: int

    @property
    def is_unique(self) -> bool:
        return self.kernel_dim == 0

    @property
    def is_integral(self) -> bool:
        return all(value.denominator == 1 for value in self.solution)


def _to_qq(value: Fraction | int):
    value = Fraction(value)
    return QQ(value.numerator, value.denominator)


def solve_rational_system(matrix: RatMatrix, rhs: Sequence[Fraction | int]) -> RationalSolution:
    """
    One solution of matrix·v = rhs (free coordinates set to 0) and the kernel
    dimension, from the reduced row echelon form of the augmented matrix.
    """
    rows = len(matrix)
    cols = len(matrix[0]) if rows else 0
    if len(rhs) != rows:
        raise LogicError(f"Right-hand side has {len(rhs)} entries for {rows} rows")
    if rows == 0:
        return RationalSolution(tuple(QQ.zero for _ in range(cols)), cols)

    augmented = [[_to_qq(entry) for entry in row] + [_to_qq(value)]
                 for row, value in zip(matrix, rhs)]
    echelon, pivots = DomainMatrix(augmented, (rows, cols + 1), QQ).rref()
    if cols in pivots:
        raise InconsistentSystemException()

    reduced = echelon.to_list()
    solution = [QQ.zero] * cols
    for row, pivot in enumerate(pivots):
        solution[pivot] = reduced[row][cols]

    if verbose:
        logging.info(f"solve_rational_system: {rows}x{cols}, rank {len(pivots)}")
    return RationalSolution(tuple(solution), cols - len(pivots))
