"""
Structural identities of supersymmetric Schur functions, each checked on one
instance and returned as a one-line report.
"""
import random

from schur.services.alphabets import Alphabet, alphabet_scale, virtual
from schur.services.poly_core import RING
from schur.services.reports import Report
from schur.services.schur_calculus import Partition, concatenated_partition, f_function, \
    partitions_of_weight, resultant, schur, schur_factorized, skew_schur


def cancellation(index: Partition, a: Alphabet, b: Alphabet, c: Alphabet) -> Report:
    report = Report("cancellation")
    report.compare(f"S_{index}(({a}) + ({c}) - ({b}) - ({c}))",
                   schur(index, virtual(a + c, b + c)), schur(index, virtual(a, b)))
    return report


def vanishing(index: Partition, a: Alphabet, b: Alphabet) -> Report:
    report = Report("vanishing")
    report.check(f"{index} outside the ({len(a)},{len(b)})-hook", not index.in_hook(len(a), len(b)))
    report.compare(f"S_{index}({virtual(a, b)})", schur(index, virtual(a, b)), RING.zero)
    return report


def duality(index: Partition, a: Alphabet, b: Alphabet) -> Report:
    """S_I(A - B) = (-1)^|I| S_J(B - A) = S_J(B* - A*), J conjugate to I."""
    conjugate = index.conjugate()
    value = schur(index, virtual(a, b))
    report = Report("duality")
    report.compare(f"S_{index} vs S_{conjugate}(B - A)", value,
                   (-1) ** index.weight * schur(conjugate, virtual(b, a)))
    report.compare(f"S_{index} vs S_{conjugate}(B* - A*)", value, schur(conjugate, virtual(b.star(), a.star())))
    return report


def factorization(j: Partition, i: Partition, a: Alphabet, b: Alphabet) -> Report:
    index = concatenated_partition(j, i, len(a), len(b))
    report = Report("factorization")
    report.compare(f"S_{index}({virtual(a, b)})", schur(index, virtual(a, b)), schur_factorized(j, i, a, b))
    return report


def resultant_rectangle(a: Alphabet, b: Alphabet) -> Report:
    """R(A, B) = S_{(n^m)}(A - B) = sum_{I in (n^m)} S_I(A) S_{(n^m)/I}(-B)."""
    m, n = len(a), len(b)
    rectangle = Partition.rectangle(m, n)
    expected = resultant(a, b)
    total = RING.zero
    for weight in range(m * n + 1):
        for inner in partitions_of_weight(weight, m):
            if rectangle.contains(inner):
                total = total + schur(inner, virtual(a)) * skew_schur(rectangle, inner, virtual(None, b))
    report = Report("resultant rectangle")
    report.compare(f"S_({rectangle})({virtual(a, b)})", schur(rectangle, virtual(a, b)), expected)
    report.compare(f"skew expansion of R({a}, {b})", total, expected)
    return report


def f_function_resultant(a: Alphabet, b: Alphabet) -> Report:
    """F(A, x - B) = R(x + Ax, B) for a constant alphabet A and n = |B|."""
    x = Alphabet.variables("x")
    report = Report("F(A, x - B)")
    report.compare(f"F({a}, x - ({b}))", f_function(a, len(b), virtual(x, b)),
                   resultant(x + alphabet_scale(a, "x"), b))
    return report


def random_partition(rng: random.Random, max_weight: int, max_length: int | None = None,
                     max_part: int | None = None) -> Partition:
    choices = partitions_of_weight(rng.randint(0, max_weight), max_length)
    if max_part is not None:
        choices = [choice for choice in choices if not choice.rows or choice.rows[0] <= max_part]
    return rng.choice(choices or [Partition()])


def random_variables(rng: random.Random, family: str, max_size: int) -> Alphabet:
    return Alphabet.variables(*(f"{family}{n}" for n in range(1, rng.randint(0, max_size) + 1)))


def outside_hook(rng: random.Random, m: int, n: int, extra: int = 2) -> Partition:
    """A random partition containing the ((n+1)^(m+1)) rectangle, up to `extra` boxes beyond it."""
    weight = (m + 1) * (n + 1) + rng.randint(0, extra)
    return rng.choice([partition for partition in partitions_of_weight(weight) if not partition.in_hook(m, n)])


def structural_report(instances: int = 50, seed: int = 0, max_size: int = 3, max_weight: int = 8) -> Report:
    """Every identity above on `instances` seeded random instances."""
    rng = random.Random(seed)
    report = Report(f"structural identities, {instances} instances")
    for _ in range(instances):
        a, b = random_variables(rng, "a", max_size), random_variables(rng, "b", max_size)
        c = random_variables(rng, "y", 2)
        index = random_partition(rng, max_weight)
        m, n = len(a), len(b)
        report.extend(cancellation(index, a, b, c))
        report.extend(duality(index, a, b))
        if (m + 1) * (n + 1) <= 9:
            report.extend(vanishing(outside_hook(rng, m, n), a, b))
        else:
            small_a, small_b = Alphabet(a.letters[:2]), Alphabet(b.letters[:1])
            report.extend(vanishing(outside_hook(rng, len(small_a), len(small_b)), small_a, small_b))
        if m * n <= 6:
            report.extend(factorization(random_partition(rng, 3, max_part=n), random_partition(rng, 3, m), a, b))
        if m * n <= 4:
            report.extend(resultant_rectangle(a, b))
        boxed = Alphabet.boxed(*(rng.randint(1, 5) for _ in range(rng.randint(0, 3))))
        report.extend(f_function_resultant(boxed, b))
    return report
