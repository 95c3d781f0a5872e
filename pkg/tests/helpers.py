"""Shared oracle data and independent reference implementations.

Everything here is deliberately dumb: lookup tables frozen from the
classical literature and brute-force enumerations.  Tests compare the
library's derived values against these, never the other way round.
"""

from fractions import Fraction
from itertools import combinations_with_replacement

# (number of positive roots, Coxeter number, dual Coxeter number, exponents)
_SPORADIC = {
    ("E", 6): (36, 12, 12, (1, 4, 5, 7, 8, 11)),
    ("E", 7): (63, 18, 18, (1, 5, 7, 9, 11, 13, 17)),
    ("E", 8): (120, 30, 30, (1, 7, 11, 13, 17, 19, 23, 29)),
    ("F", 4): (24, 12, 9, (1, 5, 7, 11)),
    ("G", 2): (6, 6, 4, (1, 5)),
}


def classical(family, rank):
    """Classical table data for one simple type."""
    if family == "A":
        return (rank * (rank + 1) // 2, rank + 1, rank + 1, tuple(range(1, rank + 1)))
    if family == "B":
        return (rank * rank, 2 * rank, 2 * rank - 1, tuple(2 * i + 1 for i in range(rank)))
    if family == "C":
        return (rank * rank, 2 * rank, rank + 1, tuple(2 * i + 1 for i in range(rank)))
    if family == "D":
        exps = tuple(sorted([2 * i + 1 for i in range(rank - 1)] + [rank - 1]))
        return (rank * (rank - 1), 2 * rank - 2, 2 * rank - 2, exps)
    return _SPORADIC[(family, rank)]


# Hand-translated epsilon-coordinate models, as (coeffs, length_class) pairs
# for the positive roots in Bourbaki simple-root coordinates.

B3_POSITIVES = {
    ((1, 0, 0), "long"),   # e1 - e2
    ((0, 1, 0), "long"),   # e2 - e3
    ((1, 1, 0), "long"),   # e1 - e3
    ((0, 0, 1), "short"),  # e3
    ((0, 1, 1), "short"),  # e2
    ((1, 1, 1), "short"),  # e1
    ((0, 1, 2), "long"),   # e2 + e3
    ((1, 1, 2), "long"),   # e1 + e3
    ((1, 2, 2), "long"),   # e1 + e2
}

C3_POSITIVES = {
    ((1, 0, 0), "short"),  # e1 - e2
    ((0, 1, 0), "short"),  # e2 - e3
    ((1, 1, 0), "short"),  # e1 - e3
    ((0, 1, 1), "short"),  # e2 + e3
    ((1, 1, 1), "short"),  # e1 + e3
    ((1, 2, 1), "short"),  # e1 + e2
    ((0, 0, 1), "long"),   # 2 e3
    ((0, 2, 1), "long"),   # 2 e2
    ((2, 2, 1), "long"),   # 2 e1
}

G2_POSITIVES = {
    ((1, 0), "short"),
    ((0, 1), "long"),
    ((1, 1), "short"),
    ((2, 1), "short"),
    ((3, 1), "long"),
    ((3, 2), "long"),
}


def multiset_partition_counts(vectors, target, max_size):
    """Number of k-element multisets of the given vectors summing to the
    target, for k = 0..max_size, by raw enumeration."""
    counts = [0] * (max_size + 1)
    if not any(target):
        counts[0] = 1
    for k in range(1, max_size + 1):
        for combo in combinations_with_replacement(vectors, k):
            total = tuple(sum(col) for col in zip(*combo))
            if total == target:
                counts[k] += 1
    return counts


def kostant_multiplicity(rs, lam, mu):
    """Weight multiplicity by the alternating sum over the Weyl group of the
    classical partition function (all positive roots, ungraded).  Completely
    independent of the Freudenthal recursion."""
    from shortroots import enumerate_group

    n = rs.rank
    inv = rs._cartan_inverse

    def partitions(fund):
        rc = []
        for i in range(n):
            v = sum(inv[i][j] * fund[j] for j in range(n))
            if v.denominator != 1 or v < 0:
                return 0
            rc.append(int(v))
        height = sum(rc)
        if height == 0:
            return 1
        vectors = [tuple(int(c) for c in rs.weight_of(r).fund) for r in rs.positive_roots()]
        return sum(multiset_partition_counts(vectors, tuple(fund), height))

    lam_rho = tuple(int(c) + 1 for c in lam.fund)
    mu_rho = tuple(int(c) + 1 for c in mu.fund)
    total = 0
    for w in enumerate_group(rs):
        img = w.act_fund(lam_rho)
        total += w.sign() * partitions(tuple(a - b for a, b in zip(img, mu_rho)))
    return total


def fraction_product(pairs):
    value = Fraction(1)
    for num, den in pairs:
        value *= Fraction(num, den)
    return value
