"""
Brute-force Schur functions of pure variable alphabets: complete functions
by enumerating monomials, the determinant as a signed sum over permutations.
Nothing here goes through poly_core's determinants.
"""
from itertools import combinations, combinations_with_replacement, permutations

from schur.services.alphabets import Alphabet, virtual
from schur.services.poly_core import MPoly, RING
from schur.services.reports import Report
from schur.services.schur_calculus import Partition, partitions_of_weight, schur


def product(values) -> MPoly:
    total = RING.one
    for value in values:
        total = total * value
    return total


def brute_force_complete(k: int, a: Alphabet, b: Alphabet) -> MPoly:
    """h_k(A - B) = sum over p + q = k of h_p(A) * (-1)^q e_q(B)."""
    if k < 0:
        return RING.zero
    total = RING.zero
    for q in range(k + 1):
        h = sum((product(c) for c in combinations_with_replacement(a.polys(), k - q)), RING.zero)
        e = sum((product(c) for c in combinations(b.polys(), q)), RING.zero)
        total = total + (-1) ** q * h * e
    return total


def brute_force_schur(partition: Partition, a: Alphabet, b: Alphabet) -> MPoly:
    parts = partition.parts
    k = len(parts)
    total = RING.zero
    for sigma in permutations(range(k)):
        inversions = sum(1 for i in range(k) for j in range(i + 1, k) if sigma[i] > sigma[j])
        term = product(brute_force_complete(parts[p] + p - sigma[p], a, b) for p in range(k))
        total = total + (-1) ** inversions * term
    return total


def oracle_report(max_weight: int = 5, max_size: int = 3) -> Report:
    """schur against the brute force for A_m - B_n, m, n <= max_size, every weight up to max_weight."""
    report = Report(f"brute-force oracle, weight <= {max_weight}")
    for m in range(max_size + 1):
        for n in range(max_size + 1):
            a = Alphabet.variables(*(f"a{k}" for k in range(1, m + 1)))
            b = Alphabet.variables(*(f"b{k}" for k in range(1, n + 1)))
            mismatches = [partition for weight in range(max_weight + 1)
                          for partition in partitions_of_weight(weight)
                          if brute_force_schur(partition, a, b) != schur(partition, virtual(a, b))]
            report.check(f"oracle A{m} - B{n}", not mismatches, ", ".join(str(p) for p in mismatches))
    return report
