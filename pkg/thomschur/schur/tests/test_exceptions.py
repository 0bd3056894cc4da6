import pytest
from rest_framework import status
from rest_framework.exceptions import APIException

from schur.services.exceptions import AlgebraException, InconsistentSystemException, ParameterRangeException, \
    RestrictionException, SchurException, UnderdeterminedSystemException, UnknownAlphabetSpecException, \
    UnsupportedSingularityException, UsageException


class TestsServiceExceptions:

    @pytest.mark.parametrize('exc,expected_status', [
        pytest.param(InconsistentSystemException(), status.HTTP_422_UNPROCESSABLE_ENTITY, id="algebra"),
        pytest.param(UnknownAlphabetSpecException("Q"), status.HTTP_422_UNPROCESSABLE_ENTITY, id="alphabet"),
        pytest.param(UnsupportedSingularityException("A5"), status.HTTP_422_UNPROCESSABLE_ENTITY, id="restriction"),
        pytest.param(ParameterRangeException("r", 0, 1), status.HTTP_400_BAD_REQUEST, id="usage"),
    ])
    def test_status_codes(self, exc, expected_status):
        assert isinstance(exc, APIException)
        assert expected_status == exc.status_code

    def test_default_detail_and_code(self):
        exc = InconsistentSystemException()
        assert InconsistentSystemException.default_detail == str(exc)
        assert InconsistentSystemException.default_code == exc.get_codes()

    def test_custom_detail_keeps_default_code(self):
        exc = InconsistentSystemException("No candidate partitions of weight 4")
        assert "No candidate partitions of weight 4" == exc.detail
        assert "inconsistent system" == exc.get_codes()

    def test_underdetermined_carries_kernel(self):
        exc = UnderdeterminedSystemException(3)
        assert 3 == exc.kernel_dim
        assert str(exc).endswith("kernel dimension 3")
        assert "underdetermined system" == exc.get_codes()

    def test_parameter_range_detail(self):
        assert "Parameter out of range: r=9, expected between 1 and 8" == str(ParameterRangeException("r", 9, 1, 8))

    @pytest.mark.parametrize('exc,category', [
        pytest.param(InconsistentSystemException(), AlgebraException, id="algebra"),
        pytest.param(UnknownAlphabetSpecException("Q"), AlgebraException, id="alphabet"),
        pytest.param(UnsupportedSingularityException("A5"), RestrictionException, id="restriction"),
        pytest.param(ParameterRangeException("i", 0, 1), UsageException, id="usage"),
    ])
    def test_categories(self, exc, category):
        assert isinstance(exc, category)
        assert not isinstance(exc, SchurException)
