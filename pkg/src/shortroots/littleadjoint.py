"""Weight systems of simple modules and the counting identities of the
module with short-dominant highest weight.

The multiplicity engine is the Freudenthal recursion, run entirely in
integer arithmetic on fundamental coordinates.  The Weyl dimension
formula provides an independent route to the dimension.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import UnsupportedRootSystem
from .rootsystem import Root, RootSystem, Weight

__all__ = [
    "WeightSystem",
    "freudenthal",
    "weyl_dim",
    "LittleAdjointDims",
    "little_adjoint_dims",
    "DeltaPartition",
    "delta_partition",
    "hw_orbit_dim",
]


class WeightSystem:
    """All weights of a simple module with their multiplicities."""

    def __init__(self, rs: RootSystem, highest: Weight, entries: dict):
        self.rs = rs
        self.highest = highest
        self.entries = entries

    def multiplicity(self, weight) -> int:
        if isinstance(weight, Weight):
            key = weight
        elif weight == 0:
            key = Weight.zero(self.rs.rank)
        else:
            key = Weight.of(weight)
        return self.entries.get(key, 0)

    @property
    def zero_multiplicity(self) -> int:
        return self.multiplicity(0)

    @property
    def dimension(self) -> int:
        return sum(self.entries.values())

    def weights(self):
        return sorted(self.entries, key=lambda w: w.fund)

    def __len__(self):
        return len(self.entries)


def _fund_ints(rs: RootSystem, weight) -> tuple[int, ...]:
    w = weight if isinstance(weight, Weight) else Weight.of(weight)
    if len(w.fund) != rs.rank:
        raise ValueError("weight has the wrong rank")
    if not w.is_integral:
        raise ValueError(f"{w} is not an integral weight")
    if not w.is_dominant:
        raise ValueError(f"{w} is not dominant")
    return tuple(int(c) for c in w.fund)


def _root_coords_int(rs: RootSystem, fund):
    inv = rs._cartan_inverse
    n = rs.rank
    out = []
    for i in range(n):
        v = sum(inv[i][j] * fund[j] for j in range(n))
        if v.denominator != 1:
            return None
        out.append(int(v))
    return tuple(out)


def _in_hull(rs: RootSystem, lam, fund) -> bool:
    # fund lies in the support iff its dominant conjugate sits below lam
    # in the root order
    dom, _ = rs.dominant_representative(fund)
    diff = tuple(a - b for a, b in zip(lam, dom))
    rc = _root_coords_int(rs, diff)
    return rc is not None and all(c >= 0 for c in rc)


def _support(rs: RootSystem, lam):
    """All weights of the module with highest weight lam, as fundamental
    coordinate tuples.  Walks down by simple roots; every weight of the
    module is reachable that way."""
    n = rs.rank
    alpha_f = [tuple(rs.cartan[i][j] for i in range(n)) for j in range(n)]
    seen = {lam}
    layer = [lam]
    while layer:
        nxt = []
        for mu in layer:
            for j in range(n):
                nu = tuple(a - b for a, b in zip(mu, alpha_f[j]))
                if nu in seen:
                    continue
                if _in_hull(rs, lam, nu):
                    seen.add(nu)
                    nxt.append(nu)
        layer = nxt
    return seen


def freudenthal(rs: RootSystem, highest) -> WeightSystem:
    """Weight system of the simple module with the given dominant integral
    highest weight, multiplicities by the Freudenthal recursion."""
    lam = _fund_ints(rs, highest)
    n = rs.rank
    d = rs.symmetrizers
    support = _support(rs, lam)

    dominant = []
    for mu in support:
        if all(x >= 0 for x in mu):
            rc = _root_coords_int(rs, tuple(a - b for a, b in zip(lam, mu)))
            dominant.append((sum(rc), mu))
    dominant.sort()

    pos_data = []
    for r in rs.positive_roots():
        fund = tuple(int(c) for c in rs.weight_of(r).fund)
        weighted = tuple(d[j] * r.coeffs[j] for j in range(n))
        pos_data.append((fund, weighted))

    mults = {lam: 1}
    rep_memo: dict = {}

    def mult_at(nu):
        m = rep_memo.get(nu)
        if m is None:
            dom, _ = rs.dominant_representative(nu)
            m = mults[dom]
            rep_memo[nu] = m
        return m

    for level, mu in dominant:
        if level == 0:
            continue
        total = 0
        for alpha_f, weighted in pos_data:
            nu = mu
            while True:
                nu = tuple(a + b for a, b in zip(nu, alpha_f))
                if nu not in support:
                    break
                # (nu | alpha) in the short-normalised form
                total += mult_at(nu) * sum(w * f for w, f in zip(weighted, nu))
        diff_rc = _root_coords_int(rs, tuple(a - b for a, b in zip(lam, mu)))
        shifted = tuple(a + b + 2 for a, b in zip(lam, mu))
        den = sum(d[j] * diff_rc[j] * shifted[j] for j in range(n))
        q, rem = divmod(2 * total, den)
        if rem or q <= 0:
            raise AssertionError("Freudenthal recursion produced a non-multiplicity")
        mults[mu] = q

    entries = {}
    for mu in support:
        entries[Weight.of(mu)] = mult_at(mu)
    return WeightSystem(rs, Weight.of(lam), entries)


def weyl_dim(rs: RootSystem, highest) -> int:
    """Dimension of the simple module with the given highest weight, by the
    product formula over positive roots."""
    lam = _fund_ints(rs, highest)
    n = rs.rank
    d = rs.symmetrizers
    lam_rho = tuple(x + 1 for x in lam)
    num = 1
    den = 1
    for r in rs.positive_roots():
        weighted = [d[j] * r.coeffs[j] for j in range(n)]
        num *= sum(w * f for w, f in zip(weighted, lam_rho))
        den *= sum(weighted)
    q, rem = divmod(num, den)
    if rem:
        raise AssertionError("Weyl dimension must be an integer")
    return q


@dataclass(frozen=True)
class LittleAdjointDims:
    dim: int
    zero_mult: int
    short_count: int


def little_adjoint_dims(rs: RootSystem) -> LittleAdjointDims:
    """Dimension data of the module with highest weight the short dominant
    root, computed three independent ways and cross-checked."""
    if not rs.is_multiply_laced:
        raise UnsupportedRootSystem(
            f"{rs.spec} is simply laced; its short-dominant module is the adjoint "
            "module, use the adjoint conventions instead"
        )
    ws = freudenthal(rs, rs.weight_of(rs.theta_short))
    zero_mult = ws.zero_multiplicity
    short_count = 2 * len(rs.short_positives)
    dim = ws.dimension
    if dim != weyl_dim(rs, rs.weight_of(rs.theta_short)):
        raise AssertionError("multiplicity sum disagrees with the dimension formula")
    if dim != short_count + zero_mult:
        raise AssertionError("weight count disagrees with the dimension")
    return LittleAdjointDims(dim=dim, zero_mult=zero_mult, short_count=short_count)


@dataclass(frozen=True)
class DeltaPartition:
    """Roots not orthogonal to a fixed root, split by the sign of the root
    and the sign of the inner product."""

    pos_pos: tuple[Root, ...]
    pos_neg: tuple[Root, ...]
    neg_pos: tuple[Root, ...]
    neg_neg: tuple[Root, ...]

    @property
    def size(self) -> int:
        return len(self.pos_pos) + len(self.pos_neg) + len(self.neg_pos) + len(self.neg_neg)


def delta_partition(rs: RootSystem, mu: Root) -> DeltaPartition:
    if not isinstance(mu, Root) or mu.coeffs not in rs.root_index:
        raise ValueError("expected a root of the system")
    pp, pn, np_, nn = [], [], [], []
    for r in rs.roots:
        v = rs.inner(r, mu)
        if v == 0:
            continue
        if r.is_positive:
            (pp if v > 0 else pn).append(r)
        else:
            (np_ if v > 0 else nn).append(r)
    part = DeltaPartition(tuple(pp), tuple(pn), tuple(np_), tuple(nn))
    if len(part.pos_pos) != len(part.neg_neg) or len(part.pos_neg) != len(part.neg_pos):
        raise AssertionError("sign partition lost its negation symmetry")
    return part


def hw_orbit_dim(rs: RootSystem) -> int:
    """Dimension of the closure of the highest weight orbit in the
    short-dominant module: one plus the number of positive roots not
    orthogonal to the short dominant root."""
    if not rs.is_multiply_laced:
        raise UnsupportedRootSystem(f"{rs.spec} has a single root length")
    theta_s = rs.theta_short
    count = sum(1 for r in rs.positive_roots() if rs.inner(r, theta_s) > 0)
    dim = 1 + count
    if dim != 2 * theta_s.height:
        raise AssertionError("orbit dimension disagrees with twice the height")
    return dim
