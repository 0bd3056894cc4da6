import factory
import pytest

from schur.services import properties
from schur.services.alphabets import Alphabet, parse_virtual_alphabet, standard_alphabets, virtual
from schur.services.exceptions import CardinalityMismatchException, InvalidPartitionException
from schur.services.oracle import brute_force_schur, oracle_report
from schur.services.poly_core import RING, constant, render, variable
from schur.services.schur_calculus import HookSpec, Partition, complete_function, concatenated_partition, \
    f_index, hook_contains, lambda_function, partitions_of_weight, resultant, schur, skew_schur, straighten

INSTANCES = 50


def sized_alphabets(fits) -> tuple[Alphabet, Alphabet]:
    """Variable alphabets A_m and B_n, m, n <= 3, with fits(m, n)."""
    m, n = factory.random.randgen.choice([(m, n) for m in range(4) for n in range(4) if fits(m, n)])
    return (Alphabet.variables(*(f"a{k}" for k in range(1, m + 1))),
            Alphabet.variables(*(f"b{k}" for k in range(1, n + 1))))


class TestsPartition:

    def test_notation(self):
        partition = Partition.of((1, 3, 3))
        assert (3, 3, 1) == partition.rows
        assert (1, 3, 3) == partition.parts
        assert 7 == partition.weight
        assert "1,3,3" == str(partition)
        assert partition == Partition.parse("[1,3,3]")
        assert Partition.of((0, 0, 2)) == Partition.of((2,))

    @pytest.mark.parametrize('parts', [(3, 1), (1, -1)])
    def test_invalid(self, parts):
        with pytest.raises(InvalidPartitionException):
            Partition.of(parts)

    def test_conjugate(self, partition):
        assert Partition.of((2, 2, 3)) == Partition.of((1, 3, 3)).conjugate()
        assert partition == partition.conjugate().conjugate()
        assert partition.weight == partition.conjugate().weight

    def test_hook(self):
        assert Partition.of((4, 5, 6, 9)).in_hook(3, 4)
        assert not Partition.of((4, 5, 6, 9)).in_hook(2, 4)
        assert hook_contains(Partition.of((1, 1, 1)), HookSpec(0, 1))
        with pytest.raises(CardinalityMismatchException):
            HookSpec(-1, 0)

    def test_partitions_of_weight(self):
        assert [Partition.of(p) for p in [(1, 1, 2), (1, 3), (2, 2), (4,)]] \
               == partitions_of_weight(4, 3)
        assert 7 == len(partitions_of_weight(5))
        assert [Partition()] == partitions_of_weight(0)


class TestsSchurFunctions:

    @pytest.mark.parametrize('i', range(6))
    def test_complete_function_of_integer_alphabet(self, i):
        assert constant(i + 1) == complete_function(i, parse_virtual_alphabet("int:2"))

    def test_complete_function_of_negative_alphabet(self):
        assert variable("b1") * variable("b2") == complete_function(2, parse_virtual_alphabet("- B2"))
        assert RING.zero == complete_function(3, parse_virtual_alphabet("- B2"))
        assert RING.zero == complete_function(-1, parse_virtual_alphabet("B2"))

    @pytest.mark.parametrize('index,expected', [
        pytest.param((1, 0), None, id="vanishing"),
        pytest.param((1, -1), (-1, Partition()), id="empty"),
        pytest.param((3, 1), (-1, Partition.of((2, 2))), id="exchange"),
        pytest.param((1, 2), (1, Partition.of((1, 2))), id="partition"),
    ])
    def test_straighten(self, index, expected):
        assert expected == straighten(index)

    @pytest.mark.parametrize('index', [(3, 1), (1, -1), (2, 0, 4), (0, 3, 1)])
    def test_schur_of_straightened(self, index):
        v = parse_virtual_alphabet("A2 - B1")
        straightened = straighten(index)
        expected = RING.zero if straightened is None else straightened[0] * schur(straightened[1], v)
        assert expected == schur(index, v)
        assert expected == schur(index, v, fast=True)

    def test_resultant(self):
        x1, x2 = variable("x1"), variable("x2")
        expected = x1 * x2 * (x1 - 2 * x2) * (x2 - 2 * x1)
        assert expected == resultant(standard_alphabets("X2"), standard_alphabets("E"))
        assert expected == schur((2, 2), parse_virtual_alphabet("X2 - E"))

    def test_hook_vanishing_on_the_fast_path(self):
        assert RING.zero == schur((4, 5, 6, 9), parse_virtual_alphabet("A2 - B4"), fast=True)
        assert RING.zero == schur((2, 2, 2), parse_virtual_alphabet("A2 - B1"))

    @pytest.mark.parametrize('index,text', [
        pytest.param((1, 3, 3), "A2 - B2", id="A2-B2"),
        pytest.param((2, 3, 3), "A2 - B1", id="A2-B1"),
        pytest.param((1, 2, 4), "X2 - E", id="X2-E"),
    ])
    def test_fast_path_agrees(self, index, text):
        v = parse_virtual_alphabet(text)
        assert schur(index, v) == schur(index, v, fast=True)

    def test_concatenated_partition(self):
        assert Partition.of((1, 4, 5)) == concatenated_partition(Partition.of((1,)), Partition.of((2, 3)), 2, 2)
        with pytest.raises(CardinalityMismatchException):
            concatenated_partition(Partition.of((3,)), Partition.of((0, 0)), 2, 2)
        with pytest.raises(CardinalityMismatchException):
            concatenated_partition(Partition(), Partition.of((1, 1, 1)), 2, 2)

    def test_skew_schur(self):
        v = parse_virtual_alphabet("A2 - B1")
        assert schur((2, 2), v) == skew_schur(Partition.of((2, 2)), Partition(), v)
        assert complete_function(1, v) == skew_schur(Partition.of((2,)), Partition.of((1,)), v)
        assert complete_function(1, v) == skew_schur(Partition.of((1, 1)), Partition.of((1,)), v)

    def test_f_index(self):
        assert (1, 2, 3) == f_index((0, 1), 2)

    def test_lambda_function(self):
        assert constant(6) == lambda_function(2, virtual(Alphabet.boxed(2, 3)))
        assert constant(5) == lambda_function(1, virtual(Alphabet.boxed(2, 3)))


class TestsSchurAgainstBruteForce:

    @pytest.mark.parametrize('m,n', [(m, n) for m in range(4) for n in range(4)])
    def test_determinant(self, m, n):
        a = standard_alphabets("A", m) if m else Alphabet()
        b = standard_alphabets("B", n) if n else Alphabet()
        for weight in range(6):
            for partition in partitions_of_weight(weight):
                assert brute_force_schur(partition, a, b) == schur(partition, virtual(a, b))

    def test_oracle_report(self):
        report = oracle_report(max_weight=3, max_size=1)
        assert report.passed
        assert ["oracle A0 - B0", "oracle A0 - B1", "oracle A1 - B0", "oracle A1 - B1"] \
               == [entry.equation_label for entry in report.entries]


class TestsStructuralIdentities:

    @pytest.mark.parametrize('instance', range(INSTANCES))
    def test_cancellation(self, instance, partition, plus_alphabet, minus_alphabet, common_alphabet):
        assert properties.cancellation(partition, plus_alphabet, minus_alphabet, common_alphabet).passed

    @pytest.mark.parametrize('instance', range(INSTANCES))
    def test_duality(self, instance, partition, plus_alphabet, minus_alphabet):
        assert properties.duality(partition, plus_alphabet, minus_alphabet).passed

    @pytest.mark.parametrize('instance', range(INSTANCES))
    def test_vanishing(self, instance):
        rng = factory.random.randgen
        a, b = sized_alphabets(lambda m, n: (m + 1) * (n + 1) <= 9)
        m, n = len(a), len(b)
        rectangle = Partition.rectangle(m + 1, n + 1)
        outside = [partition for partition in partitions_of_weight(rectangle.weight + rng.randint(0, 2))
                   if not partition.in_hook(m, n)]
        index = rng.choice(outside)
        assert index.contains(rectangle)
        assert properties.vanishing(index, a, b).passed

    @pytest.mark.parametrize('instance', range(INSTANCES))
    def test_factorization(self, instance):
        rng = factory.random.randgen
        a, b = sized_alphabets(lambda m, n: m * n <= 6)
        j = properties.random_partition(rng, 3, max_part=len(b))
        i = properties.random_partition(rng, 3, len(a))
        assert properties.factorization(j, i, a, b).passed

    @pytest.mark.parametrize('instance', range(INSTANCES))
    def test_resultant_rectangle(self, instance):
        a, b = sized_alphabets(lambda m, n: m * n <= 4)
        assert properties.resultant_rectangle(a, b).passed

    @pytest.mark.parametrize('instance', range(INSTANCES))
    def test_f_function_of_boxed_alphabet(self, instance, minus_alphabet):
        rng = factory.random.randgen
        boxed = Alphabet.boxed(*(rng.randint(1, 5) for _ in range(rng.randint(0, 3))))
        assert properties.f_function_resultant(boxed, minus_alphabet).passed

    @pytest.mark.parametrize('instance', range(INSTANCES))
    def test_symmetry(self, instance, partition, plus_alphabet, minus_alphabet):
        value = schur(partition, virtual(plus_alphabet, minus_alphabet))
        for alphabet in (plus_alphabet, minus_alphabet):
            names = [render(letter.poly) for letter in alphabet]
            shuffled = list(names)
            factory.random.randgen.shuffle(shuffled)
            assert value == value.compose([(variable(old), variable(new)) for old, new in zip(names, shuffled)])
