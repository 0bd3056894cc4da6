import factory
import pytest
from factory import fuzzy
from pytest_factoryboy import register

from schur.services.alphabets import Alphabet, Letter
from schur.services.schur_calculus import Partition, partitions_of_weight
from schur.services.selftest_service import SelftestService
from schur.services.thom_service import ThomService

MAX_ALPHABET_SIZE = 3
MAX_WEIGHT = 8


def setup_test_environment():
    factory.random.reseed_random('thomschur')


setup_test_environment()


@pytest.fixture
def clear_context():
    yield
    ThomService().restart_service()
    SelftestService.drop_instance()


def random_variables(family: str, max_size: int = MAX_ALPHABET_SIZE) -> tuple[Letter, ...]:
    size = factory.random.randgen.randint(0, max_size)
    return tuple(Letter.variable(f"{family}{n}") for n in range(1, size + 1))


def random_partition(max_weight: int = MAX_WEIGHT, max_length: int | None = None,
                     max_part: int | None = None) -> tuple[int, ...]:
    choices = partitions_of_weight(factory.random.randgen.randint(0, max_weight), max_length)
    if max_part is not None:
        choices = [choice for choice in choices if not choice.rows or choice.rows[0] <= max_part]
    return factory.random.randgen.choice(choices or [Partition()]).rows


class LetterFactory(factory.Factory):
    class Meta:
        model = Letter

    constant = fuzzy.FuzzyInteger(-5, 5)
    form = factory.LazyFunction(lambda: (("x", factory.random.randgen.randint(-3, 3)),))


class BoxedLetterFactory(factory.Factory):
    class Meta:
        model = Letter

    constant = factory.Faker("pyint", min_value=1, max_value=5)


class PlusAlphabetFactory(factory.Factory):
    class Meta:
        model = Alphabet

    letters = factory.LazyFunction(lambda: random_variables("a"))


class MinusAlphabetFactory(factory.Factory):
    class Meta:
        model = Alphabet

    letters = factory.LazyFunction(lambda: random_variables("b"))


class CommonAlphabetFactory(factory.Factory):
    class Meta:
        model = Alphabet

    letters = factory.LazyFunction(lambda: random_variables("y", 2))


class PartitionFactory(factory.Factory):
    class Meta:
        model = Partition

    rows = factory.LazyFunction(random_partition)


register(LetterFactory)
register(BoxedLetterFactory, "boxed_letter")
register(PlusAlphabetFactory, "plus_alphabet")
register(MinusAlphabetFactory, "minus_alphabet")
register(CommonAlphabetFactory, "common_alphabet")
register(PartitionFactory)
