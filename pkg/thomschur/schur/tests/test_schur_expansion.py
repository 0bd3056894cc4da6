import factory
import pytest

from schur.services.alphabets import parse_virtual_alphabet
from schur.services.exceptions import ExpressionSyntaxException, InvalidPartitionException, \
    LengthExceededException, NotInSpanException
from schur.services.poly_core import RING, variable
from schur.services.schur_calculus import Partition, partitions_of_weight, schur
from schur.services.schur_expansion import SchurExpansion, evaluate, expand_in_schur_basis, tau_shift, \
    variable_template


class TestsSchurExpansion:

    @pytest.mark.parametrize('text', [
        pytest.param("S[1,3,3]+3S[3,4]", id="bracketed"),
        pytest.param("S_{133} + 3 S_{34}", id="compact"),
        pytest.param("3*S[3,4] + S_{1,3,3}", id="reordered"),
    ])
    def test_parse(self, text):
        expansion = SchurExpansion.parse(text)
        assert SchurExpansion.from_pairs(((1, 3, 3), 1), ((3, 4), 3)) == expansion
        assert "S_{133}+3S_{34}" == expansion.to_text()

    def test_parse_two_digit_parts(self):
        expansion = SchurExpansion.parse("31S_{6,10} - S_2")
        assert 31 == expansion.coefficient((6, 10))
        assert -1 == expansion.coefficient((2,))
        assert "-S_{2}+31S_{6,10}" == expansion.to_text()

    def test_parse_zero(self):
        assert not SchurExpansion.parse("0")
        assert "0" == SchurExpansion().to_text()

    @pytest.mark.parametrize('text', ["S[1,3", "3x", "S_{12} S_{3}"])
    def test_parse_invalid(self, text):
        with pytest.raises(ExpressionSyntaxException):
            SchurExpansion.parse(text)

    def test_parse_non_partition(self):
        with pytest.raises(InvalidPartitionException):
            SchurExpansion.parse("S[3,1]")

    def test_arithmetic(self):
        a = SchurExpansion.parse("S_{22} + 2S_{13}")
        b = SchurExpansion.parse("S_{22} - S_{4}")
        assert SchurExpansion.parse("2S_{22}+2S_{13}-S_{4}") == a + b
        assert SchurExpansion.parse("2S_{13}+S_{4}") == a - b
        assert SchurExpansion.parse("3S_{22}+6S_{13}") == 3 * a
        assert a.is_homogeneous(4)
        assert not b.is_nonnegative()
        assert 2 == a.max_length()

    def test_to_data(self):
        expansion = SchurExpansion.parse("S_{133}+3S_{34}", r=2, name="I22")
        assert {"r": 2, "name": "I22",
                "terms": [{"partition": [1, 3, 3], "coeff": "1"},
                          {"partition": [3, 4], "coeff": "3"}]} == expansion.to_data()

    def test_tau_shift(self):
        assert SchurExpansion.parse("S_{133}+2S_{1,1,5}") == tau_shift(SchurExpansion.parse("S_{22}+2S_{4}"))

    def test_tau_shift_of_long_partition(self):
        with pytest.raises(LengthExceededException):
            tau_shift(SchurExpansion.parse("S_{1111}"))

    def test_evaluate(self):
        x1, x2 = variable("x1"), variable("x2")
        v = parse_virtual_alphabet("X2 - [2x1] - [2x2]")
        expected = x1 * x2 * (x1 - 2 * x2) * (x2 - 2 * x1)
        assert expected == evaluate(SchurExpansion.single((2, 2)), v)
        assert expected == evaluate(SchurExpansion.single((2, 2)), v, fast=False)
        assert RING.zero == evaluate(SchurExpansion.single((3, 3, 3)), v)


class TestsSchurBasis:

    def test_expand_in_schur_basis(self):
        template = variable_template(2, 2)
        p = 2 * schur((1, 2), template) - schur((3,), template) + 5 * schur((1, 1, 1), template)
        assert SchurExpansion.parse("5S_{111}+2S_{12}-S_{3}") == expand_in_schur_basis(p, template, 3)

    def test_expand_with_default_template(self):
        p = schur((1, 1), variable_template(2, 2))
        assert SchurExpansion.single((1, 1)) == expand_in_schur_basis(p, weight=2)

    def test_expand_zero(self):
        assert not expand_in_schur_basis(RING.zero, variable_template(1, 1), 2)

    def test_not_in_span(self):
        with pytest.raises(NotInSpanException):
            expand_in_schur_basis(variable("a1"), variable_template(1, 1), 2)

    def test_basis_respects_hook(self):
        template = variable_template(1, 1)
        p = schur(Partition.of((1, 2)), template)
        assert SchurExpansion.single((1, 2)) == expand_in_schur_basis(p, template, 3)

    @pytest.mark.parametrize('instance', range(50))
    def test_round_trip(self, instance):
        rng = factory.random.randgen
        m, n, weight = rng.randint(1, 2), rng.randint(1, 2), rng.randint(0, 6)
        hook = [partition for partition in partitions_of_weight(weight) if partition.in_hook(m, n)]
        expansion = SchurExpansion([(partition, rng.randint(-5, 5))
                                    for partition in rng.sample(hook, rng.randint(1, len(hook)))])
        template = variable_template(m, n)
        assert expansion == expand_in_schur_basis(evaluate(expansion, template), template, weight)
