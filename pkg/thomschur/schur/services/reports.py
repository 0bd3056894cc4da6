from dataclasses import dataclass, field

from schur.models import CheckStatus
from schur.services.poly_core import MPoly, render


@dataclass
class CheckEntry:
    equation_label: str
    status: CheckStatus
    residual: MPoly | None = None
    detail: str = ""

    @property
    def passed(self) -> bool:
        return self.status == CheckStatus.PASS

    @property
    def residual_text(self) -> str:
        return render(self.residual) if self.residual is not None else "0"


@dataclass
class Report:
    title: str
    entries: list[CheckEntry] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(entry.passed for entry in self.entries)

    @property
    def failures(self) -> list[CheckEntry]:
        return [entry for entry in self.entries if not entry.passed]

    def compare(self, label: str, actual: MPoly, expected: MPoly) -> CheckEntry:
        """Adds a PASS entry when actual == expected, else a FAIL carrying actual - expected."""
        residual = actual - expected
        entry = CheckEntry(label, CheckStatus.FAIL if residual else CheckStatus.PASS, residual)
        self.entries.append(entry)
        return entry

    def check(self, label: str, condition: bool, detail: str = "") -> CheckEntry:
        entry = CheckEntry(label, CheckStatus.PASS if condition else CheckStatus.FAIL, None, detail)
        self.entries.append(entry)
        return entry

    def extend(self, other: 'Report') -> 'Report':
        self.entries.extend(other.entries)
        return self
