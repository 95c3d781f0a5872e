"""Weyl groups acting as permutations of the indexed root set.

An element stores the permutation it induces on the roots and, when it
came out of the breadth-first enumeration, one reduced word.  Membership
in the subgroup generated by long-root reflections, and the matching
factorisation of the whole group, are decided by a descent through the
long-root subsystem; nothing is materialised unless a test asks for it.
"""

from __future__ import annotations

from dataclasses import dataclass

from .config import current_limits
from .errors import SizeLimitExceeded, UnsupportedRootSystem
from .rootsystem import Root, RootSystem, Weight

__all__ = [
    "WeylElement",
    "identity",
    "simple_reflection",
    "reflection",
    "enumerate_group",
    "coxeter_element",
    "coxeter_orbits",
    "long_root_base",
    "decompose_semidirect",
    "is_in_long_subgroup",
    "Subgroup",
    "closure",
    "long_subgroup",
    "short_parabolic",
]


class WeylElement:
    """A Weyl group element as a permutation of the root indices."""

    __slots__ = ("rs", "perm", "word", "_fund_rows")

    def __init__(self, rs: RootSystem, perm: tuple[int, ...], word=None):
        self.rs = rs
        self.perm = perm
        self.word = word
        self._fund_rows = None

    def __eq__(self, other):
        return isinstance(other, WeylElement) and self.rs is other.rs and self.perm == other.perm

    def __hash__(self):
        return hash(self.perm)

    def __repr__(self):
        if self.word is not None:
            body = "*".join(f"r{i + 1}" for i in self.word) or "e"
            return f"<WeylElement {body}>"
        return f"<WeylElement on {len(self.perm)} roots>"

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        # (w*v)(x) = w(v(x))
        p = self.perm
        word = None
        if self.word is not None and other.word is not None:
            word = self.word + other.word
        return WeylElement(self.rs, tuple(p[j] for j in other.perm), word)

    def __pow__(self, k: int) -> "WeylElement":
        out = identity(self.rs)
        base = self if k >= 0 else self.inverse()
        for _ in range(abs(k)):
            out = out * base
        return out

    def inverse(self) -> "WeylElement":
        inv = [0] * len(self.perm)
        for i, j in enumerate(self.perm):
            inv[j] = i
        word = tuple(reversed(self.word)) if self.word is not None else None
        return WeylElement(self.rs, tuple(inv), word)

    def __call__(self, index: int) -> int:
        return self.perm[index]

    @property
    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.perm))

    def act_root(self, root: Root) -> Root:
        return self.rs.root_at(self.perm[self.rs.index(root)])

    def act_fund(self, fund):
        """Apply to a weight given by fundamental coordinates (tuple in,
        tuple out).  Integral weights stay integral."""
        rows = self._fund_matrix()
        return tuple(sum(row[j] * fund[j] for j in range(len(fund))) for row in rows)

    def act_weight(self, weight: Weight) -> Weight:
        return Weight.of(self.act_fund(weight.fund))

    def _fund_matrix(self):
        if self._fund_rows is None:
            rs = self.rs
            n = rs.rank
            cols = [self.act_root(rs.simple_root(j)).coeffs for j in range(n)]
            A = rs.cartan
            inv = rs._cartan_inverse
            am = [[sum(A[i][k] * cols[j][k] for k in range(n)) for j in range(n)]
                  for i in range(n)]
            rows = []
            for i in range(n):
                row = []
                for j in range(n):
                    v = sum(am[i][k] * inv[k][j] for k in range(n))
                    if v.denominator != 1:
                        raise AssertionError("weight action matrix must be integral")
                    row.append(int(v))
                rows.append(tuple(row))
            self._fund_rows = tuple(rows)
        return self._fund_rows

    def length(self) -> int:
        p = self.rs.num_positive
        return sum(1 for i in range(p) if self.perm[i] >= p)

    def inversions(self) -> tuple[Root, ...]:
        """Positive roots sent to negative ones."""
        rs = self.rs
        p = rs.num_positive
        return tuple(rs.roots[i] for i in range(p) if self.perm[i] >= p)

    def sign(self) -> int:
        if self.word is not None:
            return -1 if len(self.word) % 2 else 1
        return -1 if self.length() % 2 else 1

    def order(self) -> int:
        k = 1
        w = self
        while not w.is_identity:
            w = w * self
            k += 1
        return k


def identity(rs: RootSystem) -> WeylElement:
    return WeylElement(rs, tuple(range(len(rs.roots))), ())


def simple_reflection(rs: RootSystem, i: int) -> WeylElement:
    A = rs.cartan
    n = rs.rank
    perm = []
    for r in rs.roots:
        c = r.coeffs
        p = sum(A[i][j] * c[j] for j in range(n))
        img = list(c)
        img[i] -= p
        perm.append(rs.root_index[tuple(img)])
    return WeylElement(rs, tuple(perm), (i,))


def reflection(rs: RootSystem, root: Root) -> WeylElement:
    """Reflection in the hyperplane orthogonal to an arbitrary root."""
    coeffs = root.coeffs if isinstance(root, Root) else tuple(root)
    if coeffs not in rs.root_index:
        raise ValueError(f"{coeffs} is not a root of {rs.spec}")
    n = rs.rank
    B = rs.bilinear
    sq = rs._sq_from_coeffs(coeffs)
    word = None
    if sum(abs(c) for c in coeffs) == 1 and sum(coeffs) == 1:
        word = (coeffs.index(1),)
    perm = []
    for r in rs.roots:
        c = r.coeffs
        num = 2 * sum(c[a] * B[a][b] * coeffs[b] for a in range(n) for b in range(n))
        q, rem = divmod(num, sq)
        if rem:
            raise AssertionError("coroot pairing of two roots must be integral")
        img = tuple(c[a] - q * coeffs[a] for a in range(n))
        perm.append(rs.root_index[img])
    return WeylElement(rs, tuple(perm), word)


def enumerate_group(rs: RootSystem, bound: int | None = None, generator_order=None):
    """All Weyl group elements, each with one reduced word, in breadth-first
    order.  Refuses (SizeLimitExceeded) when the known order exceeds the
    bound; never truncates silently."""
    limit = bound if bound is not None else current_limits().max_weyl_order
    if rs.weyl_order > limit:
        raise SizeLimitExceeded(
            f"|W({rs.spec})| = {rs.weyl_order} exceeds the enumeration bound {limit}"
        )
    order = tuple(generator_order) if generator_order is not None else tuple(range(rs.rank))
    key = ("weyl_elements", order)
    if key in rs._cache:
        return rs._cache[key]
    gens = [(i, simple_reflection(rs, i)) for i in order]
    e = identity(rs)
    found = {e.perm: e}
    layer = [e]
    out = [e]
    while layer:
        fresh = []
        for w in layer:
            for i, g in gens:
                perm = tuple(w.perm[j] for j in g.perm)
                if perm not in found:
                    elem = WeylElement(rs, perm, w.word + (i,))
                    found[perm] = elem
                    fresh.append(elem)
                    out.append(elem)
        layer = fresh
    if len(out) != rs.weyl_order:
        raise AssertionError(f"enumerated {len(out)} elements, expected {rs.weyl_order}")
    result = tuple(out)
    rs._cache[key] = result
    return result


def coxeter_element(rs: RootSystem, ordering=None) -> WeylElement:
    """Product of all simple reflections in the given order (natural order
    by default)."""
    order = tuple(ordering) if ordering is not None else tuple(range(rs.rank))
    if sorted(order) != list(range(rs.rank)):
        raise ValueError(f"{order} is not an ordering of the {rs.rank} simple roots")
    w = identity(rs)
    for i in order:
        w = w * simple_reflection(rs, i)
    return w


def coxeter_orbits(rs: RootSystem, c: WeylElement):
    """Orbits of the cyclic group generated by c on the root indices,
    ordered by smallest member."""
    seen = [False] * len(rs.roots)
    orbits = []
    for start in range(len(rs.roots)):
        if seen[start]:
            continue
        orbit = []
        i = start
        while not seen[i]:
            seen[i] = True
            orbit.append(i)
            i = c.perm[i]
        orbits.append(tuple(orbit))
    return orbits


# -- the long-root subsystem ---------------------------------------------------


def long_root_base(rs: RootSystem):
    """Indecomposable positive long roots: the simple system of the long
    subsystem determined by the ambient positive roots."""
    if not rs.is_multiply_laced:
        raise UnsupportedRootSystem(f"{rs.spec} has a single root length")
    if "long_base" in rs._cache:
        return rs._cache["long_base"]
    longs = rs.long_positive_roots()
    long_set = {r.coeffs for r in longs}
    base = []
    for r in longs:
        decomposable = any(
            tuple(a - b for a, b in zip(r.coeffs, s)) in long_set
            for s in long_set
            if s != r.coeffs
        )
        if not decomposable:
            base.append(r)
    rs._cache["long_base"] = tuple(base)
    return rs._cache["long_base"]


def decompose_semidirect(rs: RootSystem, w: WeylElement):
    """Factor w = ws * wl with ws preserving the positive long roots and wl
    a product of long-root reflections.  The pair is unique.

    Works by descent: while some member of the long-root base is sent
    negative, strip one long reflection off the right."""
    base = long_root_base(rs)  # raises on simply-laced input
    refl_key = "long_base_reflections"
    if refl_key not in rs._cache:
        rs._cache[refl_key] = tuple(reflection(rs, b) for b in base)
    base_idx = [rs.index(b) for b in base]
    refls = rs._cache[refl_key]
    p = rs.num_positive
    v = w
    while True:
        neg = next((k for k, i in enumerate(base_idx) if v.perm[i] >= p), None)
        if neg is None:
            break
        v = v * refls[neg]
    ws = WeylElement(rs, v.perm)
    wl = ws.inverse() * w
    return ws, wl


def is_in_long_subgroup(rs: RootSystem, w: WeylElement) -> bool:
    ws, _ = decompose_semidirect(rs, w)
    return ws.is_identity


# -- subgroups (mostly used as test oracles) ------------------------------------


@dataclass(frozen=True)
class Subgroup:
    tag: str
    generators: tuple[WeylElement, ...]


def closure(rs: RootSystem, generators, bound: int | None = None) -> frozenset:
    """Materialise the subgroup generated by the given elements, refusing
    past the configured size bound."""
    limit = bound if bound is not None else current_limits().max_closure_size
    gens = tuple(generators)
    e = identity(rs)
    found = {e.perm: e}
    layer = [e]
    while layer:
        fresh = []
        for w in layer:
            for g in gens:
                perm = tuple(w.perm[j] for j in g.perm)
                if perm not in found:
                    if len(found) >= limit:
                        raise SizeLimitExceeded(
                            f"subgroup closure exceeded the bound {limit}"
                        )
                    elem = WeylElement(rs, perm)
                    found[perm] = elem
                    fresh.append(elem)
        layer = fresh
    return frozenset(found.values())


def long_subgroup(rs: RootSystem) -> Subgroup:
    """The normal subgroup generated by reflections in long roots, presented
    by reflections in the long-root base."""
    return Subgroup("W_l", tuple(reflection(rs, b) for b in long_root_base(rs)))


def short_parabolic(rs: RootSystem) -> Subgroup:
    """The parabolic subgroup generated by the short simple reflections."""
    if not rs.is_multiply_laced:
        raise UnsupportedRootSystem(f"{rs.spec} has a single root length")
    return Subgroup(
        "W(Pi_s)", tuple(simple_reflection(rs, i) for i in rs.short_simple_indices)
    )
