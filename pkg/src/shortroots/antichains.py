"""The poset of short positive roots and its antichain counts.

Brute-force enumeration is the oracle; two closed product formulas over
the exponents must agree with it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .config import current_limits
from .errors import SizeLimitExceeded, UnsupportedRootSystem
from .rootsystem import RootSystem

__all__ = [
    "RootPoset",
    "short_root_poset",
    "count_antichains",
    "count_antichains_formula",
    "count_antichains_formula_alt",
    "AntichainReport",
    "antichain_report",
]


class RootPoset:
    """A finite poset given by an element list and a comparison callable."""

    def __init__(self, elements, leq):
        self.elements = list(elements)
        n = len(self.elements)
        self.leq_matrix = [
            [bool(leq(self.elements[i], self.elements[j])) for j in range(n)]
            for i in range(n)
        ]

    def __len__(self):
        return len(self.elements)

    def leq(self, i: int, j: int) -> bool:
        return self.leq_matrix[i][j]

    def comparable(self, i: int, j: int) -> bool:
        return self.leq_matrix[i][j] or self.leq_matrix[j][i]


def short_root_poset(rs: RootSystem) -> RootPoset:
    """Short positive roots ordered by componentwise comparison of the
    simple-root coefficients."""
    if not rs.is_multiply_laced:
        raise UnsupportedRootSystem(f"{rs.spec} has a single root length")
    elements = sorted(rs.short_positive_roots(), key=lambda r: (r.height, r.coeffs))

    def leq(a, b):
        return all(x <= y for x, y in zip(a.coeffs, b.coeffs))

    return RootPoset(elements, leq)


def count_antichains(poset: RootPoset, bound: int | None = None) -> int:
    """Exact number of antichains (the empty one included), by depth-first
    enumeration with pruning on comparability."""
    limit = bound if bound is not None else current_limits().max_poset_size
    n = len(poset)
    if n > limit:
        raise SizeLimitExceeded(f"poset has {n} elements, brute force bound is {limit}")
    # incomp[i]: bitmask of j > i incomparable to i
    incomp = []
    for i in range(n):
        mask = 0
        for j in range(i + 1, n):
            if not poset.comparable(i, j):
                mask |= 1 << j
        incomp.append(mask)

    def rec(avail: int) -> int:
        total = 1  # the antichain chosen so far
        m = avail
        while m:
            low = m & -m
            j = low.bit_length() - 1
            m ^= low
            total += rec(avail & incomp[j] & ~(low - 1) & ~low)
        return total

    return rec((1 << n) - 1)


def count_antichains_formula(rs: RootSystem) -> int:
    """Product formula over the smallest exponents, one per short simple
    root.  The result is always an integer."""
    if not rs.is_multiply_laced:
        raise UnsupportedRootSystem(f"{rs.spec} has a single root length")
    h = rs.coxeter_number
    l = len(rs.short_simple_indices)
    value = Fraction(1)
    for m in rs.exponents[:l]:
        value *= Fraction(h + m + 1, m + 1)
    if value.denominator != 1:
        raise AssertionError("antichain product formula must be an integer")
    return int(value)


def count_antichains_formula_alt(rs: RootSystem) -> int:
    """Alternative product over all exponents with the short-root average in
    place of the Coxeter number; valid only when the squared length ratio
    is 2."""
    if rs.length_ratio != 2:
        raise UnsupportedRootSystem(
            f"the alternative product formula needs length ratio 2, "
            f"{rs.spec} has ratio {rs.length_ratio}"
        )
    g = 2 * len(rs.short_positives) // rs.rank
    value = Fraction(1)
    for m in rs.exponents:
        value *= Fraction(g + m + 1, m + 1)
    if value.denominator != 1:
        raise AssertionError("antichain product formula must be an integer")
    return int(value)


@dataclass(frozen=True)
class AntichainReport:
    brute_force_count: int
    formula_count: int
    alt_formula_count: int | None
    antichains: tuple | None = None

    @property
    def consistent(self) -> bool:
        if self.brute_force_count != self.formula_count:
            return False
        return self.alt_formula_count in (None, self.formula_count)


def antichain_report(rs: RootSystem, include_sets: bool = False) -> AntichainReport:
    poset = short_root_poset(rs)
    brute = count_antichains(poset)
    formula = count_antichains_formula(rs)
    alt = count_antichains_formula_alt(rs) if rs.length_ratio == 2 else None
    sets = None
    if include_sets:
        sets = tuple(_all_antichains(poset))
    return AntichainReport(brute, formula, alt, sets)


def _all_antichains(poset: RootPoset):
    n = len(poset)
    out = [()]
    stack = [((), 0)]
    while stack:
        chosen, start = stack.pop()
        for j in range(start, n):
            if all(not poset.comparable(i, j) for i in chosen):
                nxt = chosen + (j,)
                out.append(nxt)
                stack.append((nxt, j + 1))
    return [tuple(poset.elements[i] for i in ac) for ac in out]
