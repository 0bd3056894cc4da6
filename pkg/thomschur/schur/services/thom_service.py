import logging
from dataclasses import dataclass
from itertools import combinations_with_replacement
from math import factorial

from django.conf import settings

from schur.models import CandidateSet, SingularityFamily, TableKind
from schur.services.alphabets import Alphabet, standard_alphabets, virtual
from schur.services.common import Singleton
from schur.services.exceptions import InconsistentSystemException, NonIntegerSolutionException, \
    ParameterRangeException, UnderdeterminedSystemException, UnsupportedSingularityException
from schur.services.poly_core import MPoly, RING, coefficient_in, constant_value, exact_quotient, \
    solve_rational_system, specialize, variable
from schur.services.reports import Report
from schur.services.schur_calculus import Partition, complete_function, f_index, lambda_function, \
    resultant, schur, straighten
from schur.services.schur_expansion import SchurExpansion, coefficient_matching_rows, evaluate, \
    tau_shift, variable_template
from schur.services.singularities import RestrictionSystem, SingularityId, b_alphabet, \
    multiples_of_x, restriction_equations, restriction_system
from schur.services.tables import CoeffTable, d_table, e_table

logging.basicConfig(level=logging.INFO)
verbose = settings.DEBUG


@dataclass
class SolveOutcome:
    expansion: SchurExpansion
    kernel_dim: int
    candidate_set: CandidateSet
    candidate_count: int
    heuristic: bool
    retried: bool = False


def i_partition(i: int, j: int) -> Partition:
    """The (i, j) entry of the partition matrix next to the e-table: (i+1+j, 2i-1-j)."""
    return Partition.of((i + 1 + j, 2 * i - 1 - j))


class ThomService(metaclass=Singleton):
    """
    Closed-form Thom polynomials of A_1..A_3, A_4 (r=1), I22 and III22, the
    restriction-equation solver that recovers them from scratch, and the
    verification of an expansion against the equations of a singularity.
    Coefficient tables and closed forms are kept in memory once computed;
    restart_service drops them.
    """

    def __init__(self):
        self._tables: dict[TableKind, CoeffTable] = {}
        self._closed_forms: dict[tuple, SchurExpansion] = {}
        if verbose:
            logging.info(f"{ThomService.__name__} started")

    def restart_service(self):
        self._tables.clear()
        self._closed_forms.clear()
        if verbose:
            logging.info(f"{ThomService.__name__} restarted")

    # Tables

    def table(self, kind: TableKind, rows: int) -> CoeffTable:
        """A table with at least the requested rows; the larger one is kept."""
        cached = self._tables.get(kind)
        if cached is None or cached.last_row < rows:
            cached = d_table(rows) if kind == TableKind.D else e_table(rows)
            self._tables[kind] = cached
        return cached

    def d(self, i: int, j: int) -> int:
        return self.table(TableKind.D, max(i, 1)).get(i, j)

    def e(self, i: int, j: int) -> int:
        return self.table(TableKind.E, max(i, 2)).get(i, j)

    # Closed forms

    def _remember(self, key: tuple, build) -> SchurExpansion:
        if key not in self._closed_forms:
            self._closed_forms[key] = build()
            if verbose:
                logging.info(f"{ThomService.__name__} built {key}: {self._closed_forms[key]}")
        return self._closed_forms[key]

    def p_r_o(self, r: int) -> SchurExpansion:
        """Two-row part of the I22 Thom polynomial: sum_j d_{rj} S_{r+j, 2r+1-j}."""
        _check_r(r)
        return self._remember(("P_o", r), lambda: SchurExpansion(
            [(Partition.of((r + j, 2 * r + 1 - j)), self.d(r, j)) for j in range(1, (r + 1) // 2 + 1)],
            r=r, name="P_o"))

    def thom_I22(self, r: int) -> SchurExpansion:
        _check_r(r)

        def build():
            terms = []
            for k in range(r):
                j = 1
                while k + 2 * j <= r + 1:
                    terms.append((Partition.of((k, r + j, 2 * r - k - j + 1)), self.d(r - k, j)))
                    j += 1
            return SchurExpansion(terms, r=r, name=SingularityFamily.I22.value)

        return self._remember(("I22", r), build)

    def thom_III22(self, r: int) -> SchurExpansion:
        if r < 2:
            raise UnsupportedSingularityException(f"III22 (r={r})")
        return SchurExpansion.single((r + 1, r + 1), r=r, name=SingularityFamily.III22.value)

    def h_r(self, r: int) -> SchurExpansion:
        """The A3 correction term; empty for r = 1."""
        _check_r(r)

        def build():
            terms = []
            for k in range(r - 1):
                j = 0
                while k + 2 * j <= r - 2:
                    terms.append((Partition.of((k, r + j + 1, 2 * r - k - j - 1)), self.e(r - k, j)))
                    j += 1
            return SchurExpansion(terms, r=r, name="H")

        return self._remember(("H", r), build)

    def h_r_o(self, r: int) -> SchurExpansion:
        if r < 2:
            raise ParameterRangeException("r", r, 2)
        return self._remember(("H_o", r), lambda: SchurExpansion(
            [(i_partition(r, j), self.e(r, j)) for j in range((r - 2) // 2 + 1)], r=r, name="H_o"))

    def f_i_r(self, i: int, r: int) -> SchurExpansion:
        """
        First approximation F^(i)_r: the sum over J = (j_1 <= ... <= j_{i-1} <= r)
        of S_J([2] + ... + [i]) * S_{r-j_{i-1}, ..., r-j_1, r+|J|}, straightened.
        """
        _check_r(r)
        if i < 1:
            raise ParameterRangeException("i", i, 1)
        if i == 1:
            return SchurExpansion.single((r,), r=r, name="F1")

        def build():
            boxed = virtual(Alphabet.boxed(*range(2, i + 1)))
            terms = []
            for j in combinations_with_replacement(range(r + 1), i - 1):
                coefficient = constant_value(schur(j, boxed))
                straightened = straighten(f_index(j, r))
                if coefficient and straightened is not None:
                    sign, partition = straightened
                    terms.append((partition, sign * coefficient))
            return SchurExpansion(terms, r=r, name=f"F{i}")

        return self._remember(("F", i, r), build)

    def f_i_1_hook_form(self, i: int) -> SchurExpansion:
        """F^(i)_1 = sum_{j < i} Lambda_j([2] + ... + [i]) S_{1^{i-j-1}, j+1}."""
        if i < 1:
            raise ParameterRangeException("i", i, 1)
        boxed = virtual(Alphabet.boxed(*range(2, i + 1)))
        return SchurExpansion([(Partition.of((1,) * (i - j - 1) + (j + 1,)),
                                constant_value(lambda_function(j, boxed))) for j in range(i)],
                              r=1, name=f"F{i}")

    def a4_defect(self) -> MPoly:
        """F^(4)_1 at the I22 vanishing argument X2 - E; -10 x1x2(x1-2x2)(x2-2x1)."""
        return evaluate(self.f_i_r(4, 1), SingularityId(SingularityFamily.I22, 1).substitution())

    def a4_correction(self) -> int:
        """The multiple c of S_22 with (F^(4)_1 + c S_22)(X2 - E) = 0; S_22(X2 - E) = R(X2, E)."""
        x2_minus_e = resultant(standard_alphabets("X2"), standard_alphabets("E"))
        return -constant_value(exact_quotient(self.a4_defect(), x2_minus_e))

    def thom_A(self, i: int, r: int) -> SchurExpansion:
        _check_r(r)
        match i, r:
            case 1, _:
                expansion = SchurExpansion.single((r,))
            case 2, _:
                expansion = self.f_i_r(2, r)
            case 3, _:
                expansion = self.f_i_r(3, r) + self.h_r(r)
            case 4, 1:
                expansion = self.f_i_r(4, 1) + SchurExpansion.single((2, 2), self.a4_correction())
            case _:
                raise UnsupportedSingularityException(f"A{i} (r={r})")
        return expansion.with_meta(r=r, name=f"A{i}")

    def closed_form(self, target: SingularityId) -> SchurExpansion:
        match target.family:
            case SingularityFamily.A:
                return self.thom_A(target.i, target.r)
            case SingularityFamily.I22:
                return self.thom_I22(target.r)
            case SingularityFamily.III22:
                return self.thom_III22(target.r)
        raise UnsupportedSingularityException(target)

    # Restriction equations

    def verify(self, e: SchurExpansion, target: SingularityId) -> Report:
        """Evaluates e at every restriction equation of the target; failures carry the residual."""
        report = Report(f"verify {e} against {target}")
        for equation in restriction_equations(target):
            entry = report.compare(equation.label, evaluate(e, equation.substitution), equation.rhs)
            if not entry.passed:
                logging.warning(f"{ThomService.__name__} {target}: {equation.label} fails "
                                f"at {equation.substitution}, residual {entry.residual_text}")
        if verbose:
            logging.info(f"{ThomService.__name__} verified {target}: "
                         f"{len(report.entries) - len(report.failures)}/{len(report.entries)} passed")
        return report

    def solve_restriction_system(self, system: RestrictionSystem) -> SolveOutcome:
        """
        Stacks the monomial coefficient constraints of every equation on the
        candidate coefficients and solves them exactly. Rows are assembled in
        equation order and sorted monomial order.
        """
        if not system.candidates:
            raise InconsistentSystemException(f"No candidate partitions of weight {system.codim}")
        matrix, rhs = [], []
        for equation in system.equations:
            columns = [schur(candidate, equation.substitution, fast=True) for candidate in system.candidates]
            rows, values = coefficient_matching_rows(columns, equation.rhs)
            matrix.extend(rows)
            rhs.extend(values)
        result = solve_rational_system(matrix, rhs)
        if verbose:
            logging.info(f"{ThomService.__name__} {system.target}: {len(matrix)} constraints on "
                         f"{len(system.candidates)} candidates, kernel {result.kernel_dim}")
        if not result.is_unique:
            raise UnderdeterminedSystemException(result.kernel_dim)
        if not result.is_integral:
            raise NonIntegerSolutionException(f"{NonIntegerSolutionException.default_detail}: " + ", ".join(
                f"{candidate}: {value}" for candidate, value in zip(system.candidates, result.solution)))
        expansion = SchurExpansion([(candidate, int(value)) for candidate, value
                                    in zip(system.candidates, result.solution)],
                                   r=system.r, name=system.target.label)
        return SolveOutcome(expansion, result.kernel_dim, system.candidate_set, len(system.candidates),
                            heuristic=_is_heuristic(system))

    def solve(self, target: SingularityId, candidate_set: CandidateSet = CandidateSet.DEFAULT) -> SolveOutcome:
        """Solves with the requested candidates; a failing default set is retried with all partitions."""
        try:
            return self.solve_restriction_system(restriction_system(target, candidate_set))
        except (UnderdeterminedSystemException, InconsistentSystemException) as exc:
            if candidate_set != CandidateSet.DEFAULT:
                raise
            fallback = CandidateSet.get_fallback()
            logging.warning(f"{ThomService.__name__} {target}: {exc.detail} with the {candidate_set.value} "
                            f"candidates, retrying with {fallback.value}")
            outcome = self.solve_restriction_system(restriction_system(target, fallback))
            outcome.retried = True
            return outcome

    # Identities

    def porteous_recursion_check(self, i: int) -> Report:
        """
        F^(i)_1 = sum_{j<=i} (i-1)!/(i-j)! Lambda_j F^(j)_1 with both factors of
        every product evaluated at the same A_i - B_i.
        """
        if i < 1:
            raise ParameterRangeException("i", i, 1)
        template = variable_template(i, i)
        lhs = evaluate(self.f_i_r(i, 1), template)
        rhs = RING.zero
        for j in range(1, i + 1):
            weight = factorial(i - 1) // factorial(i - j)
            rhs = rhs + weight * lambda_function(j, template) * evaluate(self.f_i_r(j, 1), template)
        report = Report(f"Porteous recursion i={i}")
        entry = report.compare(f"F{i}_1 recursion", lhs, rhs)
        if not entry.passed:
            logging.warning(f"{ThomService.__name__} Porteous recursion does not hold for i={i} "
                            f"with both factors at {template}")
        return report

    def specialization_check(self, r: int) -> Report:
        """b_{r-1} -> x1+x2 turns X2 - E - B_{r-1} into X2 - D - B_{r-2}, where P_r vanishes."""
        if r < 2:
            raise ParameterRangeException("r", r, 2)
        target = SingularityId(SingularityFamily.I22, r)
        value = evaluate(self.thom_I22(r), target.substitution())
        report = Report(f"I22 specialization r={r}")
        report.compare(f"P{r}(X2-E-B{r - 1}) at b{r - 1}=x1+x2",
                       specialize(value, f"b{r - 1}", variable("x1") + variable("x2")), RING.zero)
        return report

    def recursion_coefficient_check(self, r: int) -> Report:
        """The b_{r-1}-linear parts of both sides of the I22 normalization agree."""
        if r < 2:
            raise ParameterRangeException("r", r, 2)
        target = SingularityId(SingularityFamily.I22, r)
        value = evaluate(self.thom_I22(r), target.substitution())
        name = f"b{r - 1}"
        report = Report(f"I22 b{r - 1}-coefficient r={r}")
        report.compare(f"[{name}^1] P{r}(X2-E-B{r - 1})",
                       coefficient_in(value, name, 1), coefficient_in(target.euler_class(), name, 1))
        return report

    def s_two_complete_identity(self, r: int) -> Report:
        """sum_{j<r} S_j(-D-B_{r-2}) S_{r-1-j}(D) = S_{r-1}(-B_{r-2}) = 0."""
        if r < 2:
            raise ParameterRangeException("r", r, 2)
        d, b = standard_alphabets("D"), b_alphabet(r - 2)
        total = RING.zero
        for j in range(r):
            total = total + complete_function(j, virtual(None, d + b)) * complete_function(r - 1 - j, virtual(d))
        right = complete_function(r - 1, virtual(None, b))
        report = Report(f"complete function identity r={r}")
        report.compare(f"sum S_j(-D-B{r - 2}) S_(r-1-j)(D) = S_{r - 1}(-B{r - 2})", total, right)
        report.compare(f"S_{r - 1}(-B{r - 2}) = 0", right, RING.zero)
        return report

    def p_r_recursion(self, r: int) -> Report:
        """P_r = P_r_o + tau(P_{r-1})."""
        if r < 2:
            raise ParameterRangeException("r", r, 2)
        report = Report(f"P_r recursion r={r}")
        expected = self.p_r_o(r) + tau_shift(self.thom_I22(r - 1))
        report.check(f"P{r} = P{r}_o + tau(P{r - 1})", self.thom_I22(r) == expected,
                     f"{self.thom_I22(r)} vs {expected}")
        return report

    def p_r_shift_sum(self, r: int) -> Report:
        """P_r = sum_i tau^i(P_{r-i}_o)."""
        _check_r(r)
        total = SchurExpansion()
        for i in range(r):
            shifted = self.p_r_o(r - i)
            for _ in range(i):
                shifted = tau_shift(shifted)
            total = total + shifted
        report = Report(f"P_r as shifted two-row parts r={r}")
        report.check(f"P{r} = sum tau^i(P_o)", self.thom_I22(r) == total, f"{self.thom_I22(r)} vs {total}")
        return report

    def p_r_o_on_x2(self, r: int) -> Report:
        """P_r_o(X2) = (x1 x2)^{r+1} S_{r-1}(D)."""
        _check_r(r)
        x2 = virtual(standard_alphabets("X2"))
        expected = (variable("x1") * variable("x2")) ** (r + 1) * complete_function(r - 1, virtual(standard_alphabets("D")))
        report = Report(f"P_r_o on X2 r={r}")
        report.compare(f"P{r}_o(X2)", evaluate(self.p_r_o(r), x2), expected)
        return report

    def f_i_r_vanishing(self, i: int, r: int) -> Report:
        """F^(i)_r vanishes at x - B_{r-1} - [px] for p <= i."""
        expansion = self.f_i_r(i, r)
        report = Report(f"F{i}_{r} vanishing")
        for p in range(1, i + 1):
            argument = virtual(Alphabet.variables("x"), b_alphabet(r - 1) + multiples_of_x(p))
            report.compare(f"F{i}_{r}({argument})", evaluate(expansion, argument), RING.zero)
        return report

    def f_i_r_at_x_minus_b(self, i: int, r: int) -> Report:
        """F^(i)_r(x - B_r) = R(x + [2x] + ... + [ix], B_r)."""
        argument = virtual(Alphabet.variables("x"), b_alphabet(r))
        expected = resultant(multiples_of_x(*range(1, i + 1)), b_alphabet(r))
        report = Report(f"F{i}_{r} at x - B{r}")
        report.compare(f"F{i}_{r}({argument})", evaluate(self.f_i_r(i, r), argument), expected)
        return report

    def shape_check(self, e: SchurExpansion, target: SingularityId) -> Report:
        """Homogeneity of weight codim, nonnegative coefficients and, for I22, the two support filters."""
        report = Report(f"shape of {target}")
        report.check("homogeneous of codim weight", e.is_homogeneous(target.codim), f"weights {sorted(e.weights())}")
        report.check("nonnegative coefficients", e.is_nonnegative(), str(e))
        if target.family == SingularityFamily.I22:
            rectangle = Partition.rectangle(2, target.r + 1)
            report.check(f"support contains ({rectangle})",
                         all(partition.contains(rectangle) for partition in e.partitions()))
            report.check("support has at most three parts", e.max_length() <= 3)
        return report


def _check_r(r: int):
    if r < 1:
        raise ParameterRangeException("r", r, 1)


def _is_heuristic(system: RestrictionSystem) -> bool:
    """The default A-family filter (length <= i) is not proved to contain the support."""
    return system.candidate_set == CandidateSet.DEFAULT and system.target.family == SingularityFamily.A
