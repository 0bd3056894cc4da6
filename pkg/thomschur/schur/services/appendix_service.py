"""
The quotients U_r and V_r of the A3 Thom polynomial pieces by R(X2, D + B_{r-2})
at the III22 argument X2 - D - B_{r-2}, and the identities between them.
"""
import logging
from dataclasses import dataclass

from django.conf import settings

from schur.models import SingularityFamily
from schur.services.alphabets import Alphabet, VirtualAlphabet, standard_alphabets, virtual
from schur.services.common import Singleton
from schur.services.exceptions import ParameterRangeException
from schur.services.poly_core import MPoly, RING, exact_quotient, render
from schur.services.reports import Report
from schur.services.schur_calculus import complete_function, resultant, schur
from schur.services.schur_expansion import evaluate
from schur.services.singularities import SingularityId, b_alphabet
from schur.services.thom_service import ThomService

logging.basicConfig(level=logging.INFO)
verbose = settings.DEBUG


@dataclass
class AppendixResult:
    r: int
    U_r_at_0: MPoly
    V_r_at_0: MPoly
    full_check: Report

    def to_data(self) -> dict:
        return {"r": self.r,
                "U_r_at_0": render(self.U_r_at_0),
                "V_r_at_0": render(self.V_r_at_0),
                "passed": self.full_check.passed}


class AppendixService(metaclass=Singleton):

    def __init__(self):
        self.thom_service = ThomService()
        if verbose:
            logging.info(f"{AppendixService.__name__} started")

    @staticmethod
    def _b(r: int, with_b: bool) -> Alphabet:
        return b_alphabet(r - 2) if with_b else Alphabet()

    def _argument(self, r: int, with_b: bool) -> VirtualAlphabet:
        return virtual(standard_alphabets("X2"), standard_alphabets("D") + self._b(r, with_b))

    def _divisor(self, r: int, with_b: bool) -> MPoly:
        return resultant(standard_alphabets("X2"), standard_alphabets("D") + self._b(r, with_b))

    def v_expanded(self, r: int, with_b: bool = True) -> MPoly:
        """sum_{k+2j<=r-2} e_{r-k,j} S_k(-D-B_{r-2}) S_{j,r-k-j-2}(X2)."""
        _check_r(r)
        minus = virtual(None, standard_alphabets("D") + self._b(r, with_b))
        x2 = virtual(standard_alphabets("X2"))
        total = RING.zero
        for k in range(r - 1):
            j = 0
            while k + 2 * j <= r - 2:
                coefficient = self.thom_service.e(r - k, j)
                total = total + coefficient * complete_function(k, minus) * schur((j, r - k - j - 2), x2)
                j += 1
        return total

    def v_from_definition(self, r: int, with_b: bool = True) -> MPoly:
        """H_r(X2 - D - B_{r-2}) / R(X2, D + B_{r-2}); a remainder raises DivisionFailedException."""
        _check_r(r)
        value = evaluate(self.thom_service.h_r(r), self._argument(r, with_b))
        return exact_quotient(value, self._divisor(r, with_b))

    def u(self, r: int, with_b: bool = True) -> MPoly:
        """-F^(3)_r(X2 - D - B_{r-2}) / R(X2, D + B_{r-2})."""
        _check_r(r)
        value = evaluate(self.thom_service.f_i_r(3, r), self._argument(r, with_b))
        return -exact_quotient(value, self._divisor(r, with_b))

    @staticmethod
    def closed_form_at_zero(r: int) -> MPoly:
        """3^{r-2} (3 S_{r-2}(X2) - 2 S_{1,r-3}(X2)); S_{1,-1} = -1 is taken from the determinant."""
        _check_r(r)
        x2 = virtual(standard_alphabets("X2"))
        return 3 ** (r - 2) * (3 * complete_function(r - 2, x2) - 2 * schur((1, r - 3), x2))

    def b_expansion(self, r: int, quotient) -> tuple[MPoly, MPoly]:
        """Both sides of W_r(X2; B) = sum_{i<=r-2} W_{r-i}(X2; 0) S_i(-B_{r-2})."""
        minus_b = virtual(None, b_alphabet(r - 2))
        right = RING.zero
        for i in range(r - 1):
            right = right + quotient(r - i, False) * complete_function(i, minus_b)
        return quotient(r, True), right

    def h_r_vanishing(self, r: int, fast: bool = True) -> Report:
        """H_r vanishes at the A0, A1, A2 and A3 arguments."""
        _check_r(r)
        h = self.thom_service.h_r(r)
        report = Report(f"H_r vanishing r={r}")
        for i in range(4):
            argument = SingularityId(SingularityFamily.A, r, i).substitution()
            report.compare(f"H{r}({argument})", evaluate(h, argument, fast=fast), RING.zero)
        return report

    def total_vanishing(self, r: int) -> Report:
        """(F^(3)_r + H_r)(X2 - D - B_{r-2}) = 0."""
        _check_r(r)
        report = Report(f"A3 at the III22 argument r={r}")
        argument = self._argument(r, True)
        report.compare(f"T_A3({argument})", evaluate(self.thom_service.thom_A(3, r), argument), RING.zero)
        return report

    def appendix_UV(self, r: int, vanishing_fast: bool = True) -> AppendixResult:
        _check_r(r)
        u_at_0, v_at_0 = self.u(r, False), self.v_from_definition(r, False)
        closed = self.closed_form_at_zero(r)
        report = Report(f"U_r and V_r r={r}")
        report.compare(f"U{r}(X2;0) closed form", u_at_0, closed)
        report.compare(f"V{r}(X2;0) closed form", v_at_0, closed)
        report.compare(f"V{r} expanded = H{r}/R", self.v_expanded(r), self.v_from_definition(r))
        report.compare(f"V{r} expansion in S_i(-B)", *self.b_expansion(r, self.v_from_definition))
        report.compare(f"U{r} expansion in S_i(-B)", *self.b_expansion(r, self.u))
        report.extend(self.h_r_vanishing(r, fast=vanishing_fast))
        report.extend(self.total_vanishing(r))
        for entry in report.failures:
            logging.warning(f"{AppendixService.__name__} r={r}: {entry.equation_label} fails, "
                            f"residual {entry.residual_text}")
        if verbose:
            logging.info(f"{AppendixService.__name__} r={r}: U=V={render(closed)}")
        return AppendixResult(r, u_at_0, v_at_0, report)


def _check_r(r: int):
    if r < 2:
        raise ParameterRangeException("r", r, 2)
