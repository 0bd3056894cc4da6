from django.db import models


class SingularityFamily(models.TextChoices):
    A = 'A'
    I22 = 'I22'
    III22 = 'III22'

    @classmethod
    def get_codimension_slope(cls, family: 'SingularityFamily', i: int | None = None) -> tuple[int, int]:
        """
        Returns (a, b) with codim = a*r + b for the family.
        :return:
        """
        match family:
            case cls.A:
                return i, 0
            case cls.I22:
                return 3, 1
            case cls.III22:
                return 2, 2


class CheckStatus(models.TextChoices):
    PASS = 'PASS'
    FAIL = 'FAIL'


class CandidateSet(models.TextChoices):
    DEFAULT = 'default'
    ALL = 'all'

    @classmethod
    def get_fallback(cls):
        return cls.ALL


class TableKind(models.TextChoices):
    D = 'd'
    E = 'e'

    @classmethod
    def get_first_row(cls, kind: 'TableKind') -> int:
        return 1 if kind == cls.D else 2

    @classmethod
    def get_first_column(cls, kind: 'TableKind') -> int:
        return 1 if kind == cls.D else 0


class OutputFormat(models.TextChoices):
    JSON = 'json'
    TEXT = 'text'


class PolyOperation(models.TextChoices):
    ADD = 'add'
    SUB = 'sub'
    MUL = 'mul'


class Verb(models.TextChoices):
    COMPUTE = 'compute'
    VERIFY = 'verify'
    SOLVE = 'solve'
    TABLE = 'table'
    EVAL = 'eval'
    SELFTEST = 'selftest'

    @classmethod
    def get_verbs_requiring_target(cls):
        return [cls.COMPUTE, cls.VERIFY, cls.SOLVE, cls.TABLE, cls.EVAL]

    @classmethod
    def get_verbs_bounded_by_max_r(cls):
        return [cls.COMPUTE, cls.VERIFY, cls.SOLVE]
