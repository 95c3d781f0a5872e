"""Exact root systems for the simple Lie types A..G.

Roots are integer coefficient vectors over the simple roots; weights are
rational coordinate vectors over the fundamental weights.  The invariant
inner product is normalised so that short roots have squared length 2,
which keeps every pairing against a coroot integral.  All arithmetic is
rational; nothing here touches floating point.

Simple roots follow the Bourbaki numbering: the short simple root of
type B sits at the end of the chain, those of type C at the start, those
of F4 at positions 3 and 4, and that of G2 at position 1.  In a
simply-laced system every root is tagged "short", so that the short
dominant root coincides with the highest root.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import NotFiniteType

__all__ = [
    "RootSystemSpec",
    "Root",
    "Weight",
    "RootSystem",
    "build",
    "cartan_matrix",
    "classify_cartan",
    "dual_coxeter_of_dual",
]

_RANK_BOUNDS = {
    "A": (1, None),
    "B": (2, None),
    "C": (2, None),
    "D": (3, None),
    "E": (6, 8),
    "F": (4, 4),
    "G": (2, 2),
}

SHORT = "short"
LONG = "long"


@dataclass(frozen=True, order=True)
class RootSystemSpec:
    """A simple type: family letter plus rank, e.g. ('C', 4)."""

    family: str
    rank: int

    def __post_init__(self):
        bounds = _RANK_BOUNDS.get(self.family)
        if bounds is None:
            raise ValueError(f"unknown family {self.family!r}, expected one of A..G")
        lo, hi = bounds
        if not isinstance(self.rank, int) or self.rank < lo or (hi is not None and self.rank > hi):
            raise ValueError(f"rank {self.rank} is not valid for type {self.family}")

    def __str__(self):
        return f"{self.family}{self.rank}"


@dataclass(frozen=True)
class Root:
    """A root, stored by its integer coefficients over the simple roots."""

    coeffs: tuple[int, ...]
    length_class: str

    @property
    def height(self) -> int:
        return sum(self.coeffs)

    @property
    def is_positive(self) -> bool:
        return self.height > 0

    @property
    def is_short(self) -> bool:
        return self.length_class == SHORT

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(i for i, c in enumerate(self.coeffs) if c)

    def __neg__(self) -> "Root":
        return Root(tuple(-c for c in self.coeffs), self.length_class)

    def __str__(self):
        return "(" + ",".join(str(c) for c in self.coeffs) + ")"


@dataclass(frozen=True)
class Weight:
    """A weight, stored by rational coordinates over the fundamental weights."""

    fund: tuple[Fraction, ...]

    @staticmethod
    def of(coords) -> "Weight":
        return Weight(tuple(Fraction(c) for c in coords))

    @staticmethod
    def zero(rank: int) -> "Weight":
        return Weight((Fraction(0),) * rank)

    @property
    def is_zero(self) -> bool:
        return all(c == 0 for c in self.fund)

    @property
    def is_dominant(self) -> bool:
        return all(c >= 0 for c in self.fund)

    @property
    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.fund)

    def __add__(self, other: "Weight") -> "Weight":
        return Weight(tuple(a + b for a, b in zip(self.fund, other.fund)))

    def __sub__(self, other: "Weight") -> "Weight":
        return Weight(tuple(a - b for a, b in zip(self.fund, other.fund)))

    def __neg__(self) -> "Weight":
        return Weight(tuple(-a for a in self.fund))

    def __rmul__(self, scalar) -> "Weight":
        s = Fraction(scalar)
        return Weight(tuple(s * a for a in self.fund))

    def __str__(self):
        return "[" + ",".join(str(c) for c in self.fund) + "]"


def cartan_matrix(spec: RootSystemSpec) -> tuple[tuple[int, ...], ...]:
    """Cartan matrix with entry [i][j] the pairing of alpha_j against the
    coroot of alpha_i."""
    n = spec.rank
    A = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def bond(i, j):
        A[i][j] = A[j][i] = -1

    f = spec.family
    if f in "ABCF":
        for i in range(n - 1):
            bond(i, i + 1)
        if f == "B":
            A[n - 1][n - 2] = -2  # last simple root is short
        elif f == "C":
            A[n - 2][n - 1] = -2  # last simple root is long
        elif f == "F":
            A[2][1] = -2  # third and fourth simple roots are short
    elif f == "D":
        for i in range(n - 2):
            bond(i, i + 1)
        bond(n - 3, n - 1)
    elif f == "E":
        for i, j in [(0, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7)][: n - 2]:
            bond(i, j)
        bond(1, 3)
    elif f == "G":
        A[0][1] = -3  # first simple root is short
        A[1][0] = -1
    return tuple(tuple(row) for row in A)


def _symmetrizers(A, nodes=None) -> tuple[int, ...]:
    """Positive integers d_i with d_i*A[i][j] symmetric, normalised to min 1.

    d_i is half the squared length of alpha_i.  Works on any tree-shaped
    generalized Cartan matrix; raises NotFiniteType if the entries do not
    admit an integral symmetrization."""
    n = len(A)
    if nodes is None:
        nodes = list(range(n))
    d: dict[int, Fraction] = {}
    for start in nodes:
        if start in d:
            continue
        d[start] = Fraction(1)
        stack = [start]
        while stack:
            i = stack.pop()
            for j in nodes:
                if j == i or A[i][j] == 0 or j in d:
                    continue
                # d_j A[j][i] = d_i A[i][j]
                d[j] = d[i] * A[i][j] / A[j][i]
                stack.append(j)
    lo = min(d.values())
    out = []
    for i in nodes:
        v = d[i] / lo
        if v.denominator != 1:
            raise NotFiniteType("Cartan matrix is not symmetrizable over the integers")
        out.append(int(v))
    return tuple(out)


def _invert(rows):
    """Exact inverse of a square Fraction matrix by Gauss-Jordan."""
    n = len(rows)
    m = [[Fraction(rows[i][j]) for j in range(n)] + [Fraction(int(i == j)) for j in range(n)]
         for i in range(n)]
    for col in range(n):
        piv = next(r for r in range(col, n) if m[r][col] != 0)
        m[col], m[piv] = m[piv], m[col]
        inv = 1 / m[col][col]
        m[col] = [x * inv for x in m[col]]
        for r in range(n):
            if r != col and m[r][col] != 0:
                f = m[r][col]
                m[r] = [a - f * b for a, b in zip(m[r], m[col])]
    return tuple(tuple(m[i][n:]) for i in range(n))


class RootSystem:
    """Everything derived from one Cartan matrix.

    Instances are immutable after construction and safe to share between
    threads; use :func:`build` (which caches per spec) instead of calling
    the constructor."""

    def __init__(self, spec: RootSystemSpec):
        self.spec = spec
        n = spec.rank
        self.rank = n
        A = cartan_matrix(spec)
        self.cartan = A
        self.symmetrizers = _symmetrizers(A)
        self.bilinear = tuple(
            tuple(self.symmetrizers[i] * A[i][j] for j in range(n)) for i in range(n)
        )
        self._cartan_inverse = _invert(A)
        self._cache: dict = {}

        coeff_set = self._close_under_reflections()
        positives = sorted((c for c in coeff_set if sum(c) > 0), key=lambda c: (sum(c), c))
        if 2 * len(positives) != len(coeff_set):
            raise NotFiniteType(f"root closure of {spec} is not symmetric")
        for c in coeff_set:
            signs = {x > 0 for x in c if x}
            if len(signs) != 1:
                raise NotFiniteType(f"mixed-sign root {c} in closure of {spec}")

        def classify(c):
            return SHORT if self._sq_from_coeffs(c) == 2 else LONG

        if min(self._sq_from_coeffs(c) for c in positives) != 2:
            raise NotFiniteType(f"normalisation failure for {spec}")
        pos_roots = [Root(c, classify(c)) for c in positives]
        self.roots: tuple[Root, ...] = tuple(pos_roots + [-r for r in pos_roots])
        self.num_positive = len(pos_roots)
        self.root_index = {r.coeffs: i for i, r in enumerate(self.roots)}
        self.positives = tuple(range(self.num_positive))
        self.short_positives = tuple(i for i in self.positives if self.roots[i].is_short)
        self.long_positives = tuple(i for i in self.positives if not self.roots[i].is_short)
        self.short_simple_indices = tuple(
            i for i in range(n) if self.simple_root(i).is_short
        )

        heights = [r.height for r in pos_roots]
        if heights.count(heights[-1]) != 1:
            raise NotFiniteType(f"highest root of {spec} is not unique")
        self.theta = pos_roots[-1]
        dominant_short = [
            r for r in pos_roots if r.is_short and self.weight_of(r).is_dominant
        ]
        if len(dominant_short) != 1:
            raise NotFiniteType(f"{spec} has {len(dominant_short)} dominant short roots")
        self.theta_short = dominant_short[0]

        self.coxeter_number = self.theta.height + 1
        if len(self.roots) != n * self.coxeter_number:
            raise NotFiniteType(f"{spec}: {len(self.roots)} roots != rank * h")

        self.rho = Weight.of([1] * n)
        self.sigma = self._half_sum_of_coroots()
        self.exponents = self._exponents_from_heights(heights)
        self.weyl_order = 1
        for m in self.exponents:
            self.weyl_order *= m + 1
        self.dual_coxeter_number = 1 + int(self.pairing(self.rho, self.theta))
        self.dynkin_adjacency = {
            i: tuple(j for j in range(n) if j != i and A[i][j] != 0) for i in range(n)
        }

    # -- construction pieces -------------------------------------------------

    def _close_under_reflections(self):
        n = self.rank
        A = self.cartan
        simples = [tuple(int(i == j) for j in range(n)) for i in range(n)]
        seen = set(simples)
        frontier = list(simples)
        while frontier:
            fresh = []
            for c in frontier:
                for i in range(n):
                    p = sum(A[i][j] * c[j] for j in range(n))
                    img = list(c)
                    img[i] -= p
                    t = tuple(img)
                    if t not in seen:
                        seen.add(t)
                        fresh.append(t)
            frontier = fresh
        return seen

    def _sq_from_coeffs(self, c) -> int:
        B = self.bilinear
        n = self.rank
        return sum(c[i] * B[i][j] * c[j] for i in range(n) for j in range(n))

    def _half_sum_of_coroots(self) -> Weight:
        n = self.rank
        total = [Fraction(0)] * n
        for i in self.positives:
            r = self.roots[i]
            sq = self._sq_from_coeffs(r.coeffs)
            for j, c in enumerate(r.coeffs):
                total[j] += Fraction(c, sq)
        return Weight(tuple(
            sum(self.cartan[i][j] * total[j] for j in range(n)) for i in range(n)
        ))

    @staticmethod
    def _exponents_from_heights(heights) -> tuple[int, ...]:
        # conjugate partition of the height distribution of positive roots
        dist: dict[int, int] = {}
        for h in heights:
            dist[h] = dist.get(h, 0) + 1
        out = []
        level = 1
        while True:
            m = sum(1 for k, v in dist.items() if v >= level)
            if m == 0:
                break
            out.append(m)
            level += 1
        return tuple(sorted(out))

    # -- lookups -------------------------------------------------------------

    def index(self, root) -> int:
        coeffs = root.coeffs if isinstance(root, Root) else tuple(root)
        try:
            return self.root_index[coeffs]
        except KeyError:
            raise ValueError(f"{coeffs} is not a root of {self.spec}") from None

    def root_at(self, i: int) -> Root:
        return self.roots[i]

    def is_root(self, coeffs) -> bool:
        return tuple(coeffs) in self.root_index

    def negation(self, i: int) -> int:
        p = self.num_positive
        return i + p if i < p else i - p

    def simple_root(self, i: int) -> Root:
        coeffs = tuple(int(i == j) for j in range(self.rank))
        return self.roots[self.root_index[coeffs]]

    def positive_roots(self):
        return [self.roots[i] for i in self.positives]

    def short_positive_roots(self):
        return [self.roots[i] for i in self.short_positives]

    def long_positive_roots(self):
        return [self.roots[i] for i in self.long_positives]

    @property
    def is_multiply_laced(self) -> bool:
        return bool(self.long_positives)

    @property
    def length_ratio(self) -> int:
        """Ratio of the two squared root lengths: 1, 2 or 3."""
        if not self.is_multiply_laced:
            return 1
        return self._sq_from_coeffs(self.roots[self.long_positives[0]].coeffs) // 2

    # -- coordinates and the invariant form -----------------------------------

    def weight_of(self, root: Root) -> Weight:
        A = self.cartan
        n = self.rank
        c = root.coeffs
        return Weight.of([sum(A[i][j] * c[j] for j in range(n)) for i in range(n)])

    def root_coords(self, weight: Weight) -> tuple[Fraction, ...]:
        inv = self._cartan_inverse
        n = self.rank
        f = weight.fund
        return tuple(sum(inv[i][j] * f[j] for j in range(n)) for i in range(n))

    def _as_root_coords(self, x) -> tuple[Fraction, ...]:
        if isinstance(x, Root):
            return tuple(Fraction(c) for c in x.coeffs)
        return self.root_coords(x)

    def inner(self, x, y) -> Fraction:
        """W-invariant inner product; arguments may be Root or Weight."""
        a = self._as_root_coords(x)
        b = self._as_root_coords(y)
        B = self.bilinear
        n = self.rank
        return sum(a[i] * B[i][j] * b[j] for i in range(n) for j in range(n))

    def coroot(self, root: Root) -> Weight:
        """The coroot 2*root/(root|root), as a Weight."""
        coeffs = root.coeffs if isinstance(root, Root) else tuple(root)
        if not any(coeffs):
            raise ValueError("the zero vector has no coroot")
        if coeffs not in self.root_index:
            raise ValueError(f"{coeffs} is not a root of {self.spec}")
        sq = self._sq_from_coeffs(coeffs)
        fund = self.weight_of(self.roots[self.root_index[coeffs]]).fund
        return Weight(tuple(Fraction(2 * f, sq) for f in fund))

    def pairing(self, x, root: Root) -> Fraction:
        """Pairing of x against the coroot of the given root."""
        sq = self._sq_from_coeffs(root.coeffs)
        return 2 * self.inner(x, root) / sq

    def fundamental_weight(self, i: int) -> Weight:
        return Weight.of([int(i == j) for j in range(self.rank)])

    # -- dominance ------------------------------------------------------------

    def dominant_representative(self, fund):
        """Dominant Weyl conjugate of a weight given by fundamental coords.

        Returns (coords, sign) where sign is the determinant (-1)^steps of
        the conjugating element, or 0 when the weight is singular (fixed by
        some reflection).  Accepts and returns plain tuples."""
        A = self.cartan
        n = self.rank
        v = list(fund)
        sign = 1
        while True:
            i = next((k for k in range(n) if v[k] < 0), None)
            if i is None:
                break
            c = v[i]
            for j in range(n):
                v[j] -= c * A[j][i]
            sign = -sign
        if any(x == 0 for x in v):
            sign = 0
        return tuple(v), sign


@lru_cache(maxsize=None)
def _build_cached(spec: RootSystemSpec) -> RootSystem:
    return RootSystem(spec)


def build(family, rank: int | None = None) -> RootSystem:
    """Construct (and cache) the root system of the given type.

    Accepts build('C', 3), build(RootSystemSpec('C', 3)) or build('C3')."""
    if isinstance(family, RootSystemSpec):
        spec = family
    elif rank is None:
        s = str(family).strip()
        if len(s) < 2:
            raise ValueError(f"cannot parse root system type {family!r}")
        spec = RootSystemSpec(s[0].upper(), int(s[1:]))
    else:
        spec = RootSystemSpec(str(family).upper(), int(rank))
    return _build_cached(spec)


def dual_coxeter_of_dual(rs: RootSystem) -> int:
    """Dual Coxeter number of the dual root system: 1 + height of the short
    dominant root."""
    return 1 + rs.theta_short.height


# -- classification of Cartan matrices ----------------------------------------


def classify_cartan(matrix) -> list[RootSystemSpec]:
    """Classify a (possibly reducible) finite-type Cartan matrix.

    Returns the list of irreducible component types, ordered by smallest
    participating index.  Raises NotFiniteType for anything that is not a
    generalized Cartan matrix of finite type.  Isomorphic labels are
    canonicalised: a rank-2 double bond reports as B2, a simply-laced
    3-chain as A3."""
    A = [list(row) for row in matrix]
    n = len(A)
    if n == 0 or any(len(row) != n for row in A):
        raise NotFiniteType("matrix is not square")
    for i in range(n):
        if A[i][i] != 2:
            raise NotFiniteType("diagonal entries must equal 2")
        for j in range(n):
            if not isinstance(A[i][j], int):
                raise NotFiniteType("entries must be integers")
            if i != j:
                if A[i][j] > 0:
                    raise NotFiniteType("off-diagonal entries must be non-positive")
                if (A[i][j] == 0) != (A[j][i] == 0):
                    raise NotFiniteType("zero pattern must be symmetric")

    unvisited = set(range(n))
    components = []
    while unvisited:
        start = min(unvisited)
        comp = [start]
        unvisited.discard(start)
        queue = [start]
        while queue:
            i = queue.pop()
            for j in list(unvisited):
                if A[i][j] != 0:
                    unvisited.discard(j)
                    comp.append(j)
                    queue.append(j)
        components.append(sorted(comp))
    return [_classify_component(A, comp) for comp in components]


def _classify_component(A, nodes) -> RootSystemSpec:
    m = len(nodes)
    if m == 1:
        return RootSystemSpec("A", 1)
    edges = []
    for a in range(m):
        for b in range(a + 1, m):
            i, j = nodes[a], nodes[b]
            if A[i][j] != 0:
                p = A[i][j] * A[j][i]
                if p not in (1, 2, 3):
                    raise NotFiniteType(f"bond multiplicity {p} is not of finite type")
                edges.append((a, b, p))
    if len(edges) != m - 1:
        raise NotFiniteType("diagram contains a cycle")
    degree = [0] * m
    for a, b, _ in edges:
        degree[a] += 1
        degree[b] += 1
    if max(degree) > 3:
        raise NotFiniteType("diagram has a vertex of degree > 3")
    branches = [a for a in range(m) if degree[a] == 3]
    multi = [(a, b, p) for a, b, p in edges if p > 1]
    if len(multi) > 1:
        raise NotFiniteType("diagram has more than one multiple bond")

    if multi:
        if branches:
            raise NotFiniteType("multiple bond plus branch point is not of finite type")
        a, b, p = multi[0]
        if p == 3:
            if m != 2:
                raise NotFiniteType("a triple bond only occurs in rank 2")
            return RootSystemSpec("G", 2)
        if m == 2:
            return RootSystemSpec("B", 2)  # canonical label for the B2=C2 diagram
        sub = [[A[i][j] for j in nodes] for i in nodes]
        d = _symmetrizers(sub)
        shorts = [a for a in range(m) if d[a] == 1]
        s = len(shorts)
        if s == 1 and degree[shorts[0]] == 1 and shorts[0] in (a, b):
            return RootSystemSpec("B", m)
        longs = [a for a in range(m) if d[a] > 1]
        if s == m - 1 and degree[longs[0]] == 1 and longs[0] in (a, b):
            return RootSystemSpec("C", m)
        if m == 4 and s == 2 and degree[a] == 2 and degree[b] == 2:
            return RootSystemSpec("F", 4)
        raise NotFiniteType("double-laced diagram is not of finite type")

    if not branches:
        return RootSystemSpec("A", m)
    adj = {a: [] for a in range(m)}
    for a, b, _ in edges:
        adj[a].append(b)
        adj[b].append(a)
    centre = branches[0]
    arms = []
    for first in adj[centre]:
        length = 1
        prev, cur = centre, first
        while degree[cur] == 2:
            nxt = next(x for x in adj[cur] if x != prev)
            prev, cur = cur, nxt
            length += 1
        if degree[cur] == 3:
            raise NotFiniteType("diagram has two branch points")
        arms.append(length)
    arms.sort()
    if arms[0] == 1 and arms[1] == 1:
        return RootSystemSpec("D", m)
    if arms == [1, 2, 2]:
        return RootSystemSpec("E", 6)
    if arms == [1, 2, 3]:
        return RootSystemSpec("E", 7)
    if arms == [1, 2, 4]:
        return RootSystemSpec("E", 8)
    raise NotFiniteType("branched diagram is not of finite type")
