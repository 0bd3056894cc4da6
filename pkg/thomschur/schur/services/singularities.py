"""
Restriction data of the singularities A_i, I22 and III22 with r = k + 1.

Every singularity xi contributes a substitution c(xi), written as a virtual
alphabet, and an Euler class e(xi), written as a product of resultants. The
Thom polynomial of eta vanishes at c(xi) for the listed xi != eta and equals
e(eta) at c(eta).
"""
import re
from dataclasses import dataclass, field
from math import factorial

from schur.models import CandidateSet, SingularityFamily
from schur.services.alphabets import Alphabet, Letter, VirtualAlphabet, alphabet_scale, \
    standard_alphabets, virtual
from schur.services.exceptions import LogicError, UnsupportedSingularityException
from schur.services.poly_core import MPoly, RING, exact_quotient, variable
from schur.services.schur_calculus import Partition, partitions_of_weight, resultant

_SINGULARITY_LABEL = re.compile(r"^(A)(\d+)$|^(I22|III22)$")


def b_alphabet(count: int) -> Alphabet:
    return standard_alphabets("B", count) if count > 0 else Alphabet()


def multiples_of_x(*factors: int) -> Alphabet:
    """[f_1 x] + [f_2 x] + ..."""
    return alphabet_scale(Alphabet.boxed(*factors), Letter.variable("x"))


@dataclass(frozen=True)
class SingularityId:
    family: SingularityFamily
    r: int
    i: int | None = None

    def __post_init__(self):
        supported = self.r >= 1
        match self.family:
            case SingularityFamily.A:
                supported = supported and self.i is not None and self.i >= 0
            case SingularityFamily.III22:
                supported = supported and self.r >= 2
        if not supported:
            raise UnsupportedSingularityException(self)

    @classmethod
    def parse(cls, text: str, r: int) -> 'SingularityId':
        match = _SINGULARITY_LABEL.match(text.strip())
        if match is None:
            raise UnsupportedSingularityException(text)
        if match.group(1):
            return cls(SingularityFamily.A, r, int(match.group(2)))
        return cls(SingularityFamily(match.group(3)), r)

    @classmethod
    def a(cls, i: int, r: int) -> 'SingularityId':
        return cls(SingularityFamily.A, r, i)

    @property
    def label(self) -> str:
        return f"A{self.i}" if self.family == SingularityFamily.A else str(self.family.value)

    @property
    def codim(self) -> int:
        slope, offset = SingularityFamily.get_codimension_slope(self.family, self.i)
        return slope * self.r + offset

    def substitution(self) -> VirtualAlphabet:
        """The argument c(xi) a Thom polynomial is evaluated at."""
        match self.family:
            case SingularityFamily.A if self.i == 0:
                return virtual(None, b_alphabet(self.r - 1))
            case SingularityFamily.A:
                return virtual(Alphabet.variables("x"), b_alphabet(self.r - 1) + multiples_of_x(self.i + 1))
            case SingularityFamily.I22:
                return virtual(standard_alphabets("X2"), standard_alphabets("E") + b_alphabet(self.r - 1))
            case SingularityFamily.III22:
                return virtual(standard_alphabets("X2"), standard_alphabets("D") + b_alphabet(self.r - 2))
        raise LogicError(f"No substitution for {self}")

    def euler_class(self) -> MPoly:
        """e(xi) as resultants over boxed alphabets."""
        match self.family:
            case SingularityFamily.A if self.i == 0:
                return RING.one
            case SingularityFamily.A:
                return resultant(multiples_of_x(*range(1, self.i + 1)),
                                 b_alphabet(self.r - 1) + multiples_of_x(self.i + 1))
            case SingularityFamily.I22:
                x2 = standard_alphabets("X2")
                return (resultant(x2, standard_alphabets("E"))
                        * resultant(x2 + Alphabet.of("x1+x2"), b_alphabet(self.r - 1)))
            case SingularityFamily.III22:
                return resultant(standard_alphabets("X2"), standard_alphabets("D") + b_alphabet(self.r - 2))
        raise LogicError(f"No Euler class for {self}")

    def lower_singularities(self) -> list['SingularityId']:
        """The singularities whose vanishing conditions determine this one."""
        r = self.r
        lower = [SingularityId.a(0, r), SingularityId.a(1, r), SingularityId.a(2, r)]
        match self.family:
            case SingularityFamily.A if self.i <= 3:
                lower = lower[:self.i]
                if self.i == 3 and r >= 2:
                    lower.append(SingularityId(SingularityFamily.III22, r))
            case SingularityFamily.A if self.i == 4 and r == 1:
                lower += [SingularityId.a(3, r), SingularityId(SingularityFamily.I22, r)]
            case SingularityFamily.I22:
                if r >= 2:
                    lower.append(SingularityId(SingularityFamily.III22, r))
            case SingularityFamily.III22:
                if r == 2:
                    lower.append(SingularityId.a(3, r))
            case _:
                raise UnsupportedSingularityException(self)
        return lower

    def __str__(self):
        return f"{self.label} (r={self.r})"


@dataclass(frozen=True)
class RestrictionEquation:
    label: str
    substitution: VirtualAlphabet
    rhs: MPoly = field(hash=False, compare=False)
    source: SingularityId | None = None

    @property
    def is_normalization(self) -> bool:
        return bool(self.rhs)


@dataclass(frozen=True)
class RestrictionSystem:
    target: SingularityId
    equations: tuple[RestrictionEquation, ...]
    candidates: tuple[Partition, ...]
    candidate_set: CandidateSet = CandidateSet.DEFAULT

    def __post_init__(self):
        if any(candidate.weight != self.codim for candidate in self.candidates):
            raise LogicError(f"Candidates of {self.target} must have weight {self.codim}")

    @property
    def codim(self) -> int:
        return self.target.codim

    @property
    def r(self) -> int:
        return self.target.r


def restriction_equations(target: SingularityId) -> list[RestrictionEquation]:
    equations = [RestrictionEquation(f"{lower.label} vanishing", lower.substitution(), RING.zero, lower)
                 for lower in target.lower_singularities()]
    equations.append(RestrictionEquation(f"{target.label} normalization", target.substitution(),
                                         target.euler_class(), target))
    return equations


def candidate_partitions(codim: int, max_length: int | None = None,
                         must_contain: Partition | None = None,
                         hook: tuple[int, int] | None = None) -> list[Partition]:
    candidates = partitions_of_weight(codim, max_length)
    if must_contain is not None:
        candidates = [candidate for candidate in candidates if candidate.contains(must_contain)]
    if hook is not None:
        candidates = [candidate for candidate in candidates if candidate.in_hook(*hook)]
    return candidates


def default_candidates(target: SingularityId) -> list[Partition]:
    match target.family:
        case SingularityFamily.A:
            return candidate_partitions(target.codim, max_length=target.i)
        case SingularityFamily.I22:
            return candidate_partitions(target.codim, max_length=3,
                                        must_contain=Partition.rectangle(2, target.r + 1))
        case SingularityFamily.III22:
            return candidate_partitions(target.codim, max_length=2)
    raise UnsupportedSingularityException(target)


def restriction_system(target: SingularityId,
                       candidate_set: CandidateSet = CandidateSet.DEFAULT) -> RestrictionSystem:
    candidates = default_candidates(target) if candidate_set == CandidateSet.DEFAULT \
        else candidate_partitions(target.codim)
    return RestrictionSystem(target, tuple(restriction_equations(target)), tuple(candidates), candidate_set)


def euler_class_product_form(i: int, k: int) -> MPoly:
    """i! x^i prod_{j<=k} prod_{p<=i} (p x - y_j)."""
    x = variable("x")
    product = factorial(i) * x ** i
    for j in range(1, k + 1):
        for p in range(1, i + 1):
            product = product * (p * x - variable(f"y{j}"))
    return product


def euler_class_resultant_form(i: int, k: int) -> MPoly:
    """R(x + [2x] + ... + [ix], Y_k + [(i+1)x])."""
    return resultant(multiples_of_x(*range(1, i + 1)), standard_alphabets("Y", k) + multiples_of_x(i + 1)) \
        if k else resultant(multiples_of_x(*range(1, i + 1)), multiples_of_x(i + 1))


def euler_class_sign(i: int, k: int) -> int:
    """The constant relating the resultant form of e(A_i) to its product form."""
    quotient = exact_quotient(euler_class_resultant_form(i, k), euler_class_product_form(i, k))
    if not quotient.is_ground:
        raise LogicError(f"e(A{i}) forms differ by a non-constant factor {quotient}")
    return int(quotient.LC)
