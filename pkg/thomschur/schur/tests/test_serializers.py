import json

import pytest
from django.conf import settings

from schur.models import CheckStatus
from schur.serializers import CheckEntrySerializer, CoeffTableSerializer, GoldenFileSerializer, ReportSerializer, \
    SchurExpansionSerializer
from schur.services.poly_core import RING, variable
from schur.services.reports import CheckEntry, Report
from schur.services.schur_expansion import SchurExpansion
from schur.services.tables import d_table

I22_R2 = {"r": 2, "name": "I22",
          "terms": [{"partition": [1, 3, 3], "coeff": "1"}, {"partition": [3, 4], "coeff": "3"}]}


class TestsSchurExpansionSerializer:

    def test_valid(self):
        serializer = SchurExpansionSerializer(data=I22_R2)
        assert serializer.is_valid(), serializer.errors
        expansion = serializer.save()
        assert SchurExpansion.parse("S_{133}+3S_{34}") == expansion
        assert 2 == expansion.r
        assert "I22" == expansion.name

    def test_without_meta(self):
        serializer = SchurExpansionSerializer(data={"terms": [{"partition": [], "coeff": "-4"}]})
        assert serializer.is_valid(), serializer.errors
        expansion = serializer.save()
        assert -4 == expansion.coefficient(())
        assert expansion.r is None

    @pytest.mark.parametrize('data,field', [
        pytest.param({"terms": [{"partition": [3, 1], "coeff": "1"}]}, "terms", id="decreasing"),
        pytest.param({"terms": [{"partition": [1, 2], "coeff": "1.5"}]}, "terms", id="fractional"),
        pytest.param({"terms": [{"partition": [-1, 2], "coeff": "1"}]}, "terms", id="negative"),
        pytest.param({"r": 0, "terms": []}, "r", id="r0"),
        pytest.param({"r": 2}, "terms", id="no-terms"),
    ])
    def test_invalid(self, data, field):
        serializer = SchurExpansionSerializer(data=data)
        assert not serializer.is_valid()
        assert field in serializer.errors

    def test_representation(self):
        expansion = SchurExpansion.parse("S_{133}+3S_{34}", r=2, name="I22")
        assert I22_R2 == SchurExpansionSerializer(expansion).data


class TestsReportSerializers:

    def test_report(self):
        report = Report("sample")
        report.compare("zero", RING.zero, RING.zero)
        report.compare("one", variable("x"), RING.zero)
        report.check("flag", False, "detail")
        data = ReportSerializer(report).data
        assert "sample" == data["title"]
        assert not data["passed"]
        assert [CheckStatus.PASS.value, CheckStatus.FAIL.value, CheckStatus.FAIL.value] \
               == [entry["status"] for entry in data["entries"]]
        assert ["0", "x", "0"] == [entry["residual"] for entry in data["entries"]]
        assert "detail" == data["entries"][2]["detail"]

    def test_check_entry(self):
        entry = CheckEntry("F2_3 at A_2 - B_2", CheckStatus.FAIL, variable("x") - 2 * variable("z"), "")
        data = CheckEntrySerializer(entry).data
        assert {"equation_label": "F2_3 at A_2 - B_2", "status": "FAIL", "residual": "x - 2*z", "detail": ""} == data

    def test_check_entry_without_residual(self):
        data = CheckEntrySerializer(CheckEntry("flag", CheckStatus.PASS)).data
        assert "PASS" == data["status"]
        assert "0" == data["residual"]

    def test_coeff_table(self):
        data = CoeffTableSerializer(d_table(3)).data
        assert "d" == data["kind"]
        assert 1 == data["first_row"]
        assert [[1, 0], [3, 0], [7, 3]] == data["entries"]


class TestsGoldenFileSerializer:

    @pytest.mark.parametrize('path', sorted(settings.THOMSCHUR_GOLDEN_DIR.glob("*.json")), ids=lambda path: path.stem)
    def test_shipped_golden_files(self, path):
        serializer = GoldenFileSerializer(data=json.loads(path.read_text()))
        assert serializer.is_valid(), serializer.errors
        golden = serializer.save()
        if golden["source"].endswith("_table"):
            assert golden["rows"]
        else:
            assert all(isinstance(expansion, SchurExpansion) and expansion for expansion in golden["expansions"])
        assert golden["origin"].strip()

    @pytest.mark.parametrize('data', [
        pytest.param({"description": "t", "origin": "o", "source": "thom_A", "expansions": []}, id="missing-i"),
        pytest.param({"description": "t", "origin": "o", "source": "d_table", "rows": [[1]]}, id="missing-first-row"),
        pytest.param({"description": "t", "origin": "o", "source": "thom_I22"}, id="missing-expansions"),
        pytest.param({"description": "t", "origin": "o", "source": "unknown", "expansions": []}, id="unknown-source"),
        pytest.param({"description": "t", "source": "thom_I22", "expansions": []}, id="missing-origin"),
    ])
    def test_invalid(self, data):
        assert not GoldenFileSerializer(data=data).is_valid()
