import json

import pytest

from schur.services.oracle import oracle_report
from schur.services.properties import structural_report
from schur.services.selftest_service import SelftestService


@pytest.mark.usefixtures("clear_context")
class TestsSelftestService:

    def test_golden_files(self):
        report = SelftestService().golden_report(6)
        assert report.passed, [entry.equation_label for entry in report.failures]
        assert any(entry.equation_label == "i22.json r=6" for entry in report.entries)
        assert any(entry.equation_label == "e_table.json row 8" for entry in report.entries)

    def test_golden_mismatch_is_reported(self, tmp_path):
        (tmp_path / "p_o.json").write_text(json.dumps({
            "description": "wrong coefficient", "origin": "P_2^o with 4S_{34}", "source": "p_r_o",
            "expansions": [{"r": 2, "name": "P_o", "terms": [{"partition": [3, 4], "coeff": "4"}]}]}))
        SelftestService.drop_instance()
        report = SelftestService(golden_dir=tmp_path).golden_report(2)
        assert ["p_o.json r=2"] == [entry.equation_label for entry in report.failures]

    def test_golden_r_bound(self):
        labels = [entry.equation_label for entry in SelftestService().golden_report(2).entries]
        assert "i22.json r=2" in labels
        assert "i22.json r=3" not in labels

    def test_solver(self):
        assert SelftestService().solver_report(2).passed

    def test_appendix(self):
        assert SelftestService().appendix_report(3).passed

    def test_identities(self):
        report = SelftestService().identity_report(3)
        assert report.passed, [entry.equation_label for entry in report.failures]
        labels = [entry.equation_label for entry in report.entries]
        assert "Porteous recursion i=2 differs at one argument" in labels
        assert "F4_1 hook form" in labels

    @pytest.mark.slow
    def test_solver_acceptance_range(self):
        report = SelftestService().solver_report(8)
        assert report.passed, [entry.equation_label for entry in report.failures]
        labels = [entry.equation_label for entry in report.entries]
        assert "solve I22 (r=4)" in labels
        assert "solve I22 (r=5)" not in labels
        assert "solve III22 (r=3)" in labels
        assert "solve A3 (r=4)" not in labels

    @pytest.mark.slow
    def test_appendix_acceptance_range(self):
        report = SelftestService().appendix_report(8)
        assert report.passed, [entry.equation_label for entry in report.failures]
        assert "U6(X2;0) closed form" in [entry.equation_label for entry in report.entries]

    @pytest.mark.slow
    def test_oracle(self):
        assert oracle_report().passed

    def test_structural_identities(self):
        report = structural_report(instances=5, seed=7)
        assert report.passed
        assert report.entries

    def test_singleton(self):
        assert SelftestService() is SelftestService()

    @pytest.mark.slow
    def test_run(self):
        report = SelftestService().run(4)
        assert report.passed, [entry.equation_label for entry in report.failures]
