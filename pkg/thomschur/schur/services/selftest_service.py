import json
import logging
from pathlib import Path

from django.conf import settings

from schur.models import SingularityFamily, TableKind
from schur.serializers import GoldenFileSerializer
from schur.services.alphabets import standard_alphabets, virtual
from schur.services.appendix_service import AppendixService
from schur.services.common import Singleton
from schur.services.oracle import oracle_report
from schur.services.poly_core import variable
from schur.services.properties import structural_report
from schur.services.reports import Report
from schur.services.schur_expansion import SchurExpansion, evaluate, tau_shift
from schur.services.singularities import SingularityId
from schur.services.thom_service import ThomService

logging.basicConfig(level=logging.INFO)
verbose = settings.DEBUG


class SelftestService(metaclass=Singleton):
    """
    Replays the stored tables and Thom polynomials from golden/ and the
    identities the closed forms rest on. Every check is one report entry;
    max_r bounds the work.
    """

    def __init__(self, golden_dir: Path | None = None, instances: int = 50):
        self.golden_dir = Path(golden_dir or settings.THOMSCHUR_GOLDEN_DIR)
        self.instances = instances
        self.thom_service = ThomService()
        self.appendix_service = AppendixService()
        if verbose:
            logging.info(f"{SelftestService.__name__} started, golden files in {self.golden_dir}")

    def run(self, max_r: int) -> Report:
        report = Report(f"selftest max_r={max_r}")
        report.extend(self.golden_report(max_r))
        report.extend(self.closed_form_report(max_r))
        report.extend(self.solver_report(max_r))
        report.extend(self.appendix_report(max_r))
        report.extend(self.identity_report(max_r))
        report.extend(structural_report(self.instances))
        report.extend(oracle_report())
        for entry in report.failures:
            logging.warning(f"{SelftestService.__name__}: {entry.equation_label} FAIL {entry.detail}")
        return report

    def load_golden(self, path: Path) -> dict:
        serializer = GoldenFileSerializer(data=json.loads(path.read_text()))
        serializer.is_valid(raise_exception=True)
        return serializer.save()

    def golden_report(self, max_r: int) -> Report:
        report = Report("golden files")
        for path in sorted(self.golden_dir.glob("*.json")):
            golden = self.load_golden(path)
            source = golden["source"]
            if source.endswith("_table"):
                kind = TableKind.D if source == "d_table" else TableKind.E
                rows = golden["first_row"] + len(golden["rows"]) - 1
                computed = self.thom_service.table(kind, rows)
                for offset, expected in enumerate(golden["rows"]):
                    i = golden["first_row"] + offset
                    actual = [computed.get(i, computed.first_column + j) for j in range(len(expected))]
                    report.check(f"{path.name} row {i}", expected == actual, f"{actual}")
                continue
            for expected in golden["expansions"]:
                if expected.r > max_r:
                    continue
                actual = self._compute(source, golden.get("i"), expected.r)
                report.check(f"{path.name} r={expected.r}", expected == actual, f"{actual} vs {expected}")
        return report

    def _compute(self, source: str, i: int | None, r: int) -> SchurExpansion:
        match source:
            case "thom_I22":
                return self.thom_service.thom_I22(r)
            case "p_r_o":
                return self.thom_service.p_r_o(r)
            case "h_r":
                return self.thom_service.h_r(r)
            case "h_r_o":
                return self.thom_service.h_r_o(r)
            case "thom_A":
                return self.thom_service.thom_A(i, r)
            case "f_i_r":
                return self.thom_service.f_i_r(i, r)

    def closed_form_report(self, max_r: int) -> Report:
        service = self.thom_service
        report = Report("closed forms")
        for r in range(2, min(max_r, 7) + 1):
            report.extend(service.p_r_recursion(r))
            h_recursion = service.h_r_o(r) + tau_shift(service.h_r(r - 1))
            report.check(f"H{r} = H{r}_o + tau(H{r - 1})", service.h_r(r) == h_recursion, str(h_recursion))
        for r in range(1, min(max_r, 6) + 1):
            report.extend(service.p_r_shift_sum(r))
            report.extend(service.p_r_o_on_x2(r))
        for r in range(1, min(max_r, 7) + 1):
            report.extend(service.shape_check(service.thom_I22(r), SingularityId(SingularityFamily.I22, r)))
            report.extend(service.shape_check(service.thom_A(3, r), SingularityId.a(3, r)))
        for i in range(1, 5):
            for r in range(1, min(max_r, 4) + 1):
                report.extend(service.f_i_r_vanishing(i, r))
                report.extend(service.f_i_r_at_x_minus_b(i, r))
        for r in range(2, min(max_r, 4) + 1):
            report.extend(service.verify(service.thom_A(3, r), SingularityId.a(3, r)))
        a4 = SingularityId.a(4, 1)
        report.extend(service.shape_check(service.thom_A(4, 1), a4))
        report.extend(service.verify(service.thom_A(4, 1), a4))
        report.compare("F4_1 at X2 - E", service.a4_defect(), -10 * self._s22_at_x2_minus_e())
        return report

    @staticmethod
    def _s22_at_x2_minus_e():
        x1, x2 = variable("x1"), variable("x2")
        return x1 * x2 * (x1 - 2 * x2) * (x2 - 2 * x1)

    def solver_report(self, max_r: int) -> Report:
        report = Report("restriction solver")
        targets = [SingularityId.a(i, r) for i in (1, 2, 3) for r in range(1, min(max_r, 3) + 1)]
        targets += [SingularityId(SingularityFamily.I22, r) for r in range(1, min(max_r, 4) + 1)]
        targets += [SingularityId(SingularityFamily.III22, r) for r in range(2, min(max_r, 3) + 1)]
        targets.append(SingularityId.a(4, 1))
        for target in targets:
            outcome = self.thom_service.solve(target)
            expected = self.thom_service.closed_form(target)
            report.check(f"solve {target}", outcome.expansion == expected and outcome.kernel_dim == 0,
                         f"{outcome.expansion} vs {expected}, kernel {outcome.kernel_dim}")
        return report

    def appendix_report(self, max_r: int) -> Report:
        report = Report("U_r and V_r")
        for r in range(2, min(max_r, 6) + 1):
            report.extend(self.appendix_service.appendix_UV(r).full_check)
        x2 = virtual(standard_alphabets("X2"))
        report.compare("S_22(X2 - E)", evaluate(SchurExpansion.single((2, 2)),
                                                 virtual(x2.plus, standard_alphabets("E"))),
                       self._s22_at_x2_minus_e())
        return report

    def identity_report(self, max_r: int) -> Report:
        service = self.thom_service
        report = Report("I22 and complete function identities")
        for r in range(2, min(max_r, 5) + 1):
            report.extend(service.recursion_coefficient_check(r))
            report.extend(service.specialization_check(r))
            report.extend(service.s_two_complete_identity(r))
        for i in range(1, 5):
            report.check(f"F{i}_1 hook form", service.f_i_1_hook_form(i) == service.f_i_r(i, 1),
                         str(service.f_i_1_hook_form(i)))
        for i in (1, 2):
            porteous = service.porteous_recursion_check(i)
            report.check(f"Porteous recursion i={i} differs at one argument", not porteous.passed,
                         "the recursion held with both factors at A_i - B_i")
        return report
