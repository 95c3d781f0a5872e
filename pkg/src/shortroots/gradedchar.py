"""Graded characters of the nullcone of the short-dominant module.

A q-analogue partition function counts multiset expressions of a weight
as sums of short positive roots, graded by multiset size; an alternating
Weyl sum turns it into graded multiplicities, and the full truncated
character must reproduce the Hilbert series of a complete intersection
cut out by the basic invariants.  Every polynomial carries an explicit
truncation degree; mixing truncations takes the minimum.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .config import current_limits
from .errors import SizeLimitExceeded, UnsupportedRootSystem
from .littleadjoint import weyl_dim
from .reduction import invariant_degrees
from .rootsystem import RootSystem, Weight
from .weyl import enumerate_group

__all__ = [
    "QPoly",
    "q_partition",
    "graded_multiplicity",
    "GradedCharacter",
    "nullcone_character",
    "HilbertReport",
    "hilbert_check",
]


class QPoly:
    """Integer polynomial in q reliable up to an explicit truncation degree."""

    __slots__ = ("coeffs", "truncation")

    def __init__(self, coeffs, truncation: int):
        if truncation < 0:
            raise ValueError("truncation degree must be non-negative")
        self.truncation = truncation
        self.coeffs = {
            k: v for k, v in dict(coeffs).items() if v != 0 and 0 <= k <= truncation
        }

    @classmethod
    def zero(cls, truncation: int) -> "QPoly":
        return cls({}, truncation)

    @classmethod
    def one(cls, truncation: int) -> "QPoly":
        return cls({0: 1}, truncation)

    def coeff(self, k: int) -> int:
        if k > self.truncation:
            raise ValueError(f"degree {k} is beyond the truncation {self.truncation}")
        return self.coeffs.get(k, 0)

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def terms(self):
        return sorted(self.coeffs.items())

    def __eq__(self, other):
        if isinstance(other, int):
            other = QPoly({0: other}, self.truncation)
        if not isinstance(other, QPoly):
            return NotImplemented
        return self.truncation == other.truncation and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.truncation, tuple(sorted(self.coeffs.items()))))

    def __add__(self, other: "QPoly") -> "QPoly":
        t = min(self.truncation, other.truncation)
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, 0) + v
        return QPoly(out, t)

    def __sub__(self, other: "QPoly") -> "QPoly":
        t = min(self.truncation, other.truncation)
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, 0) - v
        return QPoly(out, t)

    def __neg__(self) -> "QPoly":
        return QPoly({k: -v for k, v in self.coeffs.items()}, self.truncation)

    def __mul__(self, other):
        if isinstance(other, int):
            return QPoly({k: other * v for k, v in self.coeffs.items()}, self.truncation)
        t = min(self.truncation, other.truncation)
        out: dict[int, int] = {}
        for a, va in self.coeffs.items():
            for b, vb in other.coeffs.items():
                if a + b <= t:
                    out[a + b] = out.get(a + b, 0) + va * vb
        return QPoly(out, t)

    __rmul__ = __mul__

    def __repr__(self):
        if not self.coeffs:
            body = "0"
        else:
            parts = []
            for k, v in self.terms():
                if k == 0:
                    parts.append(str(v))
                else:
                    q = "q" if k == 1 else f"q^{k}"
                    parts.append(q if v == 1 else f"{v}*{q}")
            body = " + ".join(parts)
        return f"{body} (mod q^{self.truncation + 1})"


def _subset_roots(rs: RootSystem, roots: str):
    if roots == "short":
        return rs.short_positive_roots()
    if roots == "all":
        return rs.positive_roots()
    raise ValueError("roots must be 'short' or 'all'")


def _dp_tables(rs: RootSystem, roots: str, degree: int):
    """Multiset-count tables T[k][v]: the number of k-element multisets of
    the chosen positive roots summing to the weight v (fundamental
    coordinates).  Built once per system and extended on demand."""
    key = ("qdp", roots)
    cached = rs._cache.get(key)
    if cached is not None and cached[0] >= degree:
        return cached[1]
    vectors = sorted(
        tuple(int(c) for c in rs.weight_of(r).fund) for r in _subset_roots(rs, roots)
    )
    zero = (0,) * rs.rank
    tables = [dict() for _ in range(degree + 1)]
    tables[0][zero] = 1
    for vec in vectors:
        for k in range(1, degree + 1):
            prev = tables[k - 1]
            cur = tables[k]
            for v, count in prev.items():
                key2 = tuple(a + b for a, b in zip(v, vec))
                cur[key2] = cur.get(key2, 0) + count
    rs._cache[key] = (degree, tables)
    return tables


def q_partition(rs: RootSystem, target, max_degree: int, roots: str = "short") -> QPoly:
    """Generating polynomial of the multiset expressions of a weight as sums
    of positive roots from the chosen subset, graded by multiset size."""
    if max_degree < 0:
        raise ValueError("max_degree must be non-negative")
    if isinstance(target, Weight):
        if not target.is_integral:
            return QPoly.zero(max_degree)
        fund = tuple(int(c) for c in target.fund)
    elif hasattr(target, "coeffs"):
        fund = tuple(int(c) for c in rs.weight_of(target).fund)
    else:
        fund = tuple(int(c) for c in target)
    tables = _dp_tables(rs, roots, max_degree)
    return QPoly({k: tables[k].get(fund, 0) for k in range(max_degree + 1)}, max_degree)


def _signed_matrices(rs: RootSystem, bound: int | None):
    """All Weyl group elements as (sign, integer matrix on fundamental
    coordinates), cached on the system."""
    if "signed_matrices" in rs._cache:
        return rs._cache["signed_matrices"]
    elements = enumerate_group(rs, bound)
    data = tuple((w.sign(), w._fund_matrix()) for w in elements)
    rs._cache["signed_matrices"] = data
    return data


def graded_multiplicity(rs: RootSystem, lam, mu, max_degree: int,
                        bound: int | None = None) -> QPoly:
    """Alternating Weyl sum of the q-partition function: the graded
    multiplicity polynomial of the simple module with highest weight lam
    inside the coordinate ring slice selected by mu.

    Refuses if the Weyl group order exceeds the enumeration bound."""
    lam = lam if isinstance(lam, Weight) else Weight.of(lam)
    mu = mu if isinstance(mu, Weight) else Weight.of(mu)
    for w in (lam, mu):
        if not (w.is_dominant and w.is_integral):
            raise ValueError(f"{w} is not dominant integral")
    limit = bound if bound is not None else current_limits().max_weyl_order
    if rs.weyl_order > limit:
        raise SizeLimitExceeded(
            f"|W({rs.spec})| = {rs.weyl_order} exceeds the bound {limit}"
        )
    tables = _dp_tables(rs, "short", max_degree)
    n = rs.rank
    lam_rho = tuple(int(c) + 1 for c in lam.fund)
    mu_rho = tuple(int(c) + 1 for c in mu.fund)
    acc = [0] * (max_degree + 1)
    for sign, rows in _signed_matrices(rs, limit):
        img = tuple(sum(rows[i][j] * lam_rho[j] for j in range(n)) for i in range(n))
        v = tuple(a - b for a, b in zip(img, mu_rho))
        # a miss in the table is exactly the outside-the-cone short circuit
        for k in range(max_degree + 1):
            c = tables[k].get(v)
            if c:
                acc[k] += sign * c
    return QPoly(dict(enumerate(acc)), max_degree)


class GradedCharacter:
    """Truncated graded character: dominant weights mapped to graded
    multiplicity polynomials, zero polynomials omitted."""

    def __init__(self, rs: RootSystem, entries: dict, truncation: int):
        self.rs = rs
        self.entries = entries
        self.truncation = truncation

    def multiplicity(self, weight) -> QPoly:
        key = weight if isinstance(weight, Weight) else Weight.of(weight)
        return self.entries.get(key, QPoly.zero(self.truncation))

    def weights(self):
        return sorted(self.entries, key=lambda w: w.fund)

    def negative_terms(self):
        """Observed negative coefficients, reported rather than asserted."""
        bad = []
        for w, p in self.entries.items():
            for k, v in p.terms():
                if v < 0:
                    bad.append((w, k, v))
        return bad

    def __len__(self):
        return len(self.entries)


def nullcone_character(rs: RootSystem, max_degree: int,
                       bound: int | None = None) -> GradedCharacter:
    """Graded character of the nullcone coordinate ring, truncated at the
    given degree.

    Candidate highest weights are the strictly dominant conjugates of
    (partition support + rho) shifted back by rho; this catches every
    weight any Weyl summand can contribute to."""
    limits = current_limits()
    if not rs.is_multiply_laced:
        raise UnsupportedRootSystem(f"{rs.spec} has a single root length")
    if rs.rank > limits.max_character_rank:
        raise SizeLimitExceeded(
            f"nullcone characters are capped at rank {limits.max_character_rank}, "
            f"{rs.spec} has rank {rs.rank}"
        )
    tables = _dp_tables(rs, "short", max_degree)
    ones = (1,) * rs.rank
    candidates = set()
    for k in range(max_degree + 1):
        for v in tables[k]:
            shifted = tuple(a + b for a, b in zip(v, ones))
            dom, sign = rs.dominant_representative(shifted)
            if sign == 0:
                continue
            candidates.add(tuple(a - b for a, b in zip(dom, ones)))
    zero = Weight.zero(rs.rank)
    entries = {}
    for fund in sorted(candidates):
        lam = Weight.of(fund)
        poly = graded_multiplicity(rs, lam, zero, max_degree, bound)
        if not poly.is_zero:
            entries[lam] = poly
    if entries.get(zero) != QPoly.one(max_degree):
        raise AssertionError("the trivial entry of the nullcone character must be 1")
    return GradedCharacter(rs, entries, max_degree)


@dataclass(frozen=True)
class HilbertReport:
    ok: bool
    dimension_series: QPoly      # sum over entries of dim * multiplicity
    expected_series: QPoly       # complete intersection Hilbert series
    first_mismatch: int | None
    character: GradedCharacter

    def __bool__(self):
        return self.ok


def complete_intersection_series(ambient_dim: int, degrees, max_degree: int) -> QPoly:
    """Hilbert series of a polynomial ring in ambient_dim variables modulo a
    regular sequence of the given degrees, truncated."""
    numerator = QPoly.one(max_degree)
    for dd in degrees:
        numerator = numerator * QPoly({0: 1, dd: -1}, max_degree)
    series = QPoly(
        {k: math.comb(ambient_dim - 1 + k, k) for k in range(max_degree + 1)},
        max_degree,
    )
    return numerator * series


def hilbert_check(rs: RootSystem, max_degree: int,
                  bound: int | None = None) -> HilbertReport:
    """Compare the dimension series of the nullcone character with the
    complete intersection Hilbert series determined by the basic invariant
    degrees.  The module dimension enters by weight count, independent of
    the character computation."""
    char = nullcone_character(rs, max_degree, bound)
    total = QPoly.zero(max_degree)
    for w, poly in char.entries.items():
        total = total + weyl_dim(rs, w) * poly
    module_dim = 2 * len(rs.short_positives) + len(rs.short_simple_indices)
    expected = complete_intersection_series(module_dim, invariant_degrees(rs), max_degree)
    first_bad = None
    for k in range(max_degree + 1):
        if total.coeff(k) != expected.coeff(k):
            first_bad = k
            break
    return HilbertReport(
        ok=first_bad is None,
        dimension_series=total,
        expected_series=expected,
        first_mismatch=first_bad,
        character=char,
    )
