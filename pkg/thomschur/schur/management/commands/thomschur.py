import json
from pathlib import Path

from django.conf import settings
from django.core.management.base import BaseCommand, CommandError
from rest_framework.exceptions import ValidationError

from schur.models import CandidateSet, OutputFormat, TableKind, Verb
from schur.serializers import CoeffTableSerializer, ReportSerializer, SchurExpansionSerializer
from schur.services.alphabets import parse_virtual_alphabet
from schur.services.appendix_service import AppendixService
from schur.services.exceptions import BaseServiceException, DivisionFailedException, \
    InconsistentSystemException, NonIntegerSolutionException, ParameterRangeException, \
    UnderdeterminedSystemException, UsageException
from schur.services.poly_core import render
from schur.services.reports import Report
from schur.services.schur_expansion import SchurExpansion, evaluate
from schur.services.selftest_service import SelftestService
from schur.services.singularities import SingularityId
from schur.services.thom_service import SolveOutcome, ThomService

USAGE_EXIT = 2
FAILURE_EXIT = 1

SOLVER_FAILURES = (UnderdeterminedSystemException, InconsistentSystemException, NonIntegerSolutionException)


class Command(BaseCommand):
    help = ("Thom polynomials as Schur function expansions. "
            "Verbs: compute <target>, verify <target>, solve <target>, table d|e, "
            "eval <expression> --at <alphabet>, selftest.")

    def add_arguments(self, parser):
        parser.add_argument("verb", choices=Verb.values)
        parser.add_argument("target", nargs="?", default=None,
                            help="A<i>, I22, III22, P_o, H, H_o, F, porteous, appendix, d, e or an expression")
        parser.add_argument("--r", type=int, default=None)
        parser.add_argument("--i", type=int, default=None)
        parser.add_argument("--rows", type=int, default=None)
        parser.add_argument("--format", choices=OutputFormat.values, default=OutputFormat.TEXT.value)
        parser.add_argument("--candidates", choices=CandidateSet.values, default=CandidateSet.DEFAULT.value)
        parser.add_argument("--max-r", type=int, default=settings.THOMSCHUR_MAX_R)
        parser.add_argument("--at", default=None, help="Virtual alphabet, e.g. 'X2 - [2x1] - [2x2]'")
        parser.add_argument("--input", default=None,
                            help="Expansion to verify: a JSON file or an expression like 'S[1,3,3]+3S[3,4]'")

    def handle(self, *args, **options):
        verb = Verb(options["verb"])
        self.output_format = OutputFormat(options["format"])
        if verb in Verb.get_verbs_requiring_target() and not options["target"]:
            raise CommandError(f"'{verb.value}' needs a target", returncode=USAGE_EXIT)
        try:
            if verb in Verb.get_verbs_bounded_by_max_r():
                self._check_r(options)
            match verb:
                case Verb.COMPUTE:
                    self._compute(options)
                case Verb.VERIFY:
                    self._verify(options)
                case Verb.SOLVE:
                    self._solve(options)
                case Verb.TABLE:
                    self._table(options)
                case Verb.EVAL:
                    self._eval(options)
                case Verb.SELFTEST:
                    self._emit_report(SelftestService().run(options["max_r"]))
        except SOLVER_FAILURES as exc:
            self._emit({"error": exc.get_codes(), "detail": str(exc)}, f"{exc.get_codes()}: {exc}")
            raise CommandError(str(exc), returncode=FAILURE_EXIT)
        except (UsageException, ValidationError) as exc:
            raise CommandError(str(exc), returncode=USAGE_EXIT)
        except BaseServiceException as exc:
            returncode = FAILURE_EXIT if isinstance(exc, DivisionFailedException) else USAGE_EXIT
            raise CommandError(str(exc), returncode=returncode)

    @staticmethod
    def _check_r(options):
        r = options["r"] if options["r"] is not None else 1
        options["r"] = r
        if not 1 <= r <= options["max_r"]:
            raise ParameterRangeException("r", r, 1, options["max_r"])

    @staticmethod
    def _i(options) -> int:
        i = options["i"] if options["i"] is not None else 1
        if i < 1:
            raise ParameterRangeException("i", i, 1)
        return i

    def _compute(self, options):
        target, r = options["target"], options["r"]
        service = ThomService()
        match target:
            case "P_o":
                expansion = service.p_r_o(r)
            case "H":
                expansion = service.h_r(r)
            case "H_o":
                expansion = service.h_r_o(r)
            case "F":
                expansion = service.f_i_r(self._i(options), r)
            case _:
                expansion = service.closed_form(SingularityId.parse(target, r))
        self._emit_expansion(expansion)

    def _verify(self, options):
        target, r = options["target"], options["r"]
        match target:
            case "porteous":
                self._emit_report(ThomService().porteous_recursion_check(self._i(options)))
            case "appendix":
                result = AppendixService().appendix_UV(r)
                if self.output_format == OutputFormat.TEXT:
                    self.stdout.write(f"U_r(X2;0) = {render(result.U_r_at_0)}")
                    self.stdout.write(f"V_r(X2;0) = {render(result.V_r_at_0)}")
                self._emit_report(result.full_check, extra=result.to_data())
            case _:
                singularity = SingularityId.parse(target, r)
                expansion = self._read_input(options["input"], r) if options["input"] \
                    else ThomService().closed_form(singularity)
                self._emit_report(ThomService().verify(expansion, singularity))

    def _solve(self, options):
        singularity = SingularityId.parse(options["target"], options["r"])
        outcome = ThomService().solve(singularity, CandidateSet(options["candidates"]))
        self._emit(self._outcome_data(outcome), self._outcome_text(outcome))

    def _table(self, options):
        try:
            kind = TableKind(options["target"])
        except ValueError:
            raise UsageException(f"Unknown table '{options['target']}', expected d or e")
        rows = options["rows"] if options["rows"] is not None else TableKind.get_first_row(kind) + 6
        if rows < TableKind.get_first_row(kind):
            raise ParameterRangeException("rows", rows, TableKind.get_first_row(kind))
        table = ThomService().table(kind, rows)
        entries = table.entries[:rows - table.first_row + 1]
        columns = max(j + 1 for row in entries for j, value in enumerate(row) if value)
        entries = [row[:columns] for row in entries]
        width = max(len(str(value)) for row in entries for value in row)
        text = "\n".join(" ".join(str(value).rjust(width) for value in row) for row in entries)
        data = CoeffTableSerializer(table).data
        data["entries"] = [list(row) for row in entries]
        self._emit(data, text)

    def _eval(self, options):
        if not options["at"]:
            raise UsageException("eval needs --at <alphabet>")
        expansion = SchurExpansion.parse(options["target"])
        value = evaluate(expansion, parse_virtual_alphabet(options["at"]))
        self._emit({"expression": expansion.to_text(), "at": options["at"], "value": render(value)},
                   render(value))

    @staticmethod
    def _read_input(source: str, r: int) -> SchurExpansion:
        path = Path(source)
        if path.suffix == ".json" and path.is_file():
            serializer = SchurExpansionSerializer(data=json.loads(path.read_text()))
            serializer.is_valid(raise_exception=True)
            return serializer.save()
        return SchurExpansion.parse(source, r=r)

    @staticmethod
    def _outcome_data(outcome: SolveOutcome) -> dict:
        return {"expansion": outcome.expansion.to_data(),
                "kernel_dim": outcome.kernel_dim,
                "candidate_set": outcome.candidate_set.value,
                "candidate_count": outcome.candidate_count,
                "heuristic": outcome.heuristic,
                "retried": outcome.retried}

    @staticmethod
    def _outcome_text(outcome: SolveOutcome) -> str:
        labels = [f"kernel_dim={outcome.kernel_dim}", f"candidates={outcome.candidate_set.value}"
                  f"({outcome.candidate_count})"]
        if outcome.heuristic:
            labels.append("heuristic")
        if outcome.retried:
            labels.append("retried")
        return f"{outcome.expansion.to_text()}\n{' '.join(labels)}"

    def _emit_expansion(self, expansion: SchurExpansion):
        self._emit(SchurExpansionSerializer(expansion).data, expansion.to_text())

    def _emit_report(self, report: Report, extra: dict | None = None):
        data = dict(ReportSerializer(report).data)
        if extra:
            data.update(extra)
        lines = []
        for entry in report.entries:
            line = f"{entry.status.value} {entry.equation_label}"
            if not entry.passed and entry.residual is not None:
                line += f"  residual: {entry.residual_text}"
            elif not entry.passed and entry.detail:
                line += f"  {entry.detail}"
            lines.append(line)
        passed = len(report.entries) - len(report.failures)
        lines.append(f"{'PASS' if report.passed else 'FAIL'} {passed}/{len(report.entries)}")
        self._emit(data, "\n".join(lines))
        if not report.passed:
            raise CommandError(f"{len(report.failures)} check(s) failed", returncode=FAILURE_EXIT)

    def _emit(self, data: dict, text: str):
        if self.output_format == OutputFormat.JSON:
            self.stdout.write(json.dumps(data, indent=2))
        else:
            self.stdout.write(text)
