"""The simple reduction of a multiply-laced system: the subsystem spanned
by the short simple roots, its Coxeter data, the transition factor, the
kernel-hyperplane combinatorics, dimension bookkeeping and the summary
registry for all four multiply-laced families."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import UnsupportedRootSystem
from .littleadjoint import little_adjoint_dims
from .rootsystem import Root, RootSystem, RootSystemSpec, build, classify_cartan
from .weyl import coxeter_element, is_in_long_subgroup

__all__ = [
    "SimpleReduction",
    "simple_reduction",
    "check_coxeter_power",
    "TransitionIdentities",
    "transition_identities",
    "HyperplaneClasses",
    "hyperplane_classes",
    "OneStepEntry",
    "one_step_strings",
    "DimensionLedger",
    "dimension_ledger",
    "partition_count",
    "orbit_count",
    "invariant_degrees",
    "SummaryRow",
    "summary_row",
]


@dataclass(frozen=True)
class SimpleReduction:
    short_simple_indices: tuple[int, ...]
    subsystem: tuple[Root, ...]          # roots supported on the short simples
    sub_spec: RootSystemSpec
    sub_coxeter_number: int
    sub_exponents: tuple[int, ...]
    transition_factor: int


def _require_two_lengths(rs: RootSystem):
    if not rs.is_multiply_laced:
        raise UnsupportedRootSystem(f"{rs.spec} has a single root length")


def simple_reduction(rs: RootSystem) -> SimpleReduction:
    _require_two_lengths(rs)
    if "simple_reduction" in rs._cache:
        return rs._cache["simple_reduction"]
    pis = rs.short_simple_indices
    pis_set = set(pis)
    subsystem = tuple(r for r in rs.roots if set(r.support) <= pis_set)
    submatrix = [[rs.cartan[i][j] for j in pis] for i in pis]
    components = classify_cartan(submatrix)
    if len(components) != 1:
        raise AssertionError("short simple roots must form a connected diagram")
    sub = build(components[0])
    if len(subsystem) != sub.rank * sub.coxeter_number:
        raise AssertionError("subsystem root count disagrees with its type")
    factor, rem = divmod(rs.coxeter_number, sub.coxeter_number)
    if rem:
        raise AssertionError("the Coxeter number ratio must be an integer")
    red = SimpleReduction(
        short_simple_indices=pis,
        subsystem=subsystem,
        sub_spec=sub.spec,
        sub_coxeter_number=sub.coxeter_number,
        sub_exponents=sub.exponents,
        transition_factor=factor,
    )
    rs._cache["simple_reduction"] = red
    return red


def check_coxeter_power(rs: RootSystem, ordering=None) -> bool:
    """Whether the h_s-th power of the Coxeter element built from the given
    ordering lands in the subgroup generated by long-root reflections."""
    red = simple_reduction(rs)
    c = coxeter_element(rs, ordering)
    return is_in_long_subgroup(rs, c ** red.sub_coxeter_number)


@dataclass(frozen=True)
class TransitionIdentities:
    """Three independent computations of the same integer."""

    factor: int            # h / h_s
    coxeter_gap: int       # h - ht(theta_s)
    height_gap: int        # ht(theta) - ht(theta_s) + 1


def transition_identities(rs: RootSystem) -> TransitionIdentities:
    _require_two_lengths(rs)
    red = simple_reduction(rs)
    t = TransitionIdentities(
        factor=red.transition_factor,
        coxeter_gap=rs.coxeter_number - rs.theta_short.height,
        height_gap=rs.theta.height - rs.theta_short.height + 1,
    )
    if not (t.factor == t.coxeter_gap == t.height_gap):
        raise AssertionError(f"transition identities disagree: {t}")
    return t


@dataclass(frozen=True)
class HyperplaneClasses:
    """Short positive roots grouped by the kernel hyperplane they induce on
    the zero weight space: two short roots agree when they differ, up to
    sign, by a long root; the classes carry exactly one representative
    inside the short-simple subsystem."""

    classes: tuple[tuple[Root, ...], ...]
    representatives: tuple[Root, ...]


def hyperplane_classes(rs: RootSystem) -> HyperplaneClasses:
    _require_two_lengths(rs)
    shorts = rs.short_positive_roots()
    pos = {r.coeffs: k for k, r in enumerate(shorts)}
    parent = list(range(len(shorts)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[rb] = ra

    def is_long(coeffs):
        i = rs.root_index.get(coeffs)
        return i is not None and not rs.roots[i].is_short

    items = list(pos.items())
    for a, (ca, ka) in enumerate(items):
        for cb, kb in items[a + 1:]:
            diff = tuple(x - y for x, y in zip(ca, cb))
            summ = tuple(x + y for x, y in zip(ca, cb))
            if is_long(diff) or is_long(summ):
                union(ka, kb)

    groups: dict[int, list[Root]] = {}
    for k, r in enumerate(shorts):
        groups.setdefault(find(k), []).append(r)
    classes = tuple(
        tuple(sorted(g, key=lambda r: (r.height, r.coeffs))) for g in groups.values()
    )
    classes = tuple(sorted(classes, key=lambda g: (g[0].height, g[0].coeffs)))

    red = simple_reduction(rs)
    sub_pos = {r.coeffs for r in red.subsystem if r.is_positive}
    reps = []
    for g in classes:
        inside = [r for r in g if r.coeffs in sub_pos]
        if len(inside) != 1:
            raise AssertionError(
                f"class {g} holds {len(inside)} subsystem representatives"
            )
        reps.append(inside[0])
    if len(classes) != len(sub_pos):
        raise AssertionError("class count disagrees with the subsystem positives")
    return HyperplaneClasses(classes=classes, representatives=tuple(reps))


@dataclass(frozen=True)
class OneStepEntry:
    """Ways of reaching the short-simple subsystem from one short positive
    root in a single long-root step."""

    pairs: tuple[tuple[Root, Root], ...]       # (long step, subsystem target)
    positive_target_steps: tuple[Root, ...]    # steps whose target is positive
    target_classes: tuple[Root, ...]           # distinct targets modulo sign
    sole: bool                                 # one target class only


def one_step_strings(rs: RootSystem) -> dict:
    """For each short positive root outside the short-simple subsystem, all
    long roots beta with root - beta inside the subsystem (either sign)."""
    _require_two_lengths(rs)
    red = simple_reduction(rs)
    sub = {r.coeffs: r for r in red.subsystem}
    out = {}
    for gamma in rs.short_positive_roots():
        if gamma.coeffs in sub:
            continue
        pairs = []
        for mu in red.subsystem:
            beta_coeffs = tuple(a - b for a, b in zip(gamma.coeffs, mu.coeffs))
            k = rs.root_index.get(beta_coeffs)
            if k is not None and not rs.roots[k].is_short:
                pairs.append((rs.roots[k], mu))
        pairs.sort(key=lambda p: (p[0].height, p[0].coeffs))
        positive = tuple(b for b, m in pairs if m.is_positive)
        seen = []
        for _, m in pairs:
            canon = m if m.is_positive else -m
            if canon not in seen:
                seen.append(canon)
        out[gamma] = OneStepEntry(
            pairs=tuple(pairs),
            positive_target_steps=positive,
            target_classes=tuple(seen),
            sole=len(seen) == 1,
        )
    return out


@dataclass(frozen=True)
class DimensionLedger:
    module_dim: int             # (h+1) * number of short simples
    module_nullcone_dim: int    # h * number of short simples
    reduction_dim: int          # (h_s+1) * number of short simples
    reduction_nullcone_dim: int  # h_s * number of short simples
    transition_factor: int


def dimension_ledger(rs: RootSystem) -> DimensionLedger:
    """The four dimensions tied together by the transition factor, each from
    an independent count."""
    red = simple_reduction(rs)
    dims = little_adjoint_dims(rs)
    k = dims.zero_mult
    module_null = dims.dim - k
    if module_null != rs.coxeter_number * len(rs.short_simple_indices):
        raise AssertionError("module nullcone dimension disagrees with h * #shorts")
    reduction_dim = len(red.short_simple_indices) + len(red.subsystem)
    if reduction_dim != (red.sub_coxeter_number + 1) * len(red.short_simple_indices):
        raise AssertionError("reduction dimension disagrees with (h_s+1) * #shorts")
    reduction_null = reduction_dim - len(red.short_simple_indices)
    ratio, rem = divmod(module_null, reduction_null)
    if rem or ratio != red.transition_factor:
        raise AssertionError("nullcone dimension ratio disagrees with the factor")
    return DimensionLedger(
        module_dim=dims.dim,
        module_nullcone_dim=module_null,
        reduction_dim=reduction_dim,
        reduction_nullcone_dim=reduction_null,
        transition_factor=ratio,
    )


def partition_count(n: int) -> int:
    """Number of integer partitions of n, by the parts-bounded recurrence."""
    if n < 0:
        raise ValueError("partitions of a negative integer")
    table = [1] + [0] * n
    for part in range(1, n + 1):
        for total in range(part, n + 1):
            table[total] += table[total - part]
    return table[n]


def orbit_count(rs: RootSystem) -> int:
    """Number of nilpotent orbits in the nullcone of the short-dominant
    module: partitions of n for type C, otherwise a small constant."""
    _require_two_lengths(rs)
    family = rs.spec.family
    if family == "C":
        return partition_count(rs.rank)
    if family == "B":
        return 2
    if family == "F":
        return 3
    if family == "G":
        return 2
    raise UnsupportedRootSystem(f"no orbit registry for {rs.spec}")


def invariant_degrees(rs: RootSystem):
    """Degrees of the basic invariants: the reflection degrees of the short
    parabolic, i.e. the reduction's exponents each plus one."""
    red = simple_reduction(rs)
    return tuple(sorted(m + 1 for m in red.sub_exponents))


_AMBIENT = {
    "B": lambda n: f"so_{2 * n + 2}",
    "C": lambda n: f"sl_{2 * n}",
    "F": lambda n: "e_6",
    "G": lambda n: "so_8",
}


@dataclass(frozen=True)
class SummaryRow:
    system: str
    module_dim: int
    theta_short_coeffs: tuple[int, ...]
    coxeter_number: int
    sub_type: str
    sub_coxeter_number: int
    orbit_count: int
    ambient_algebra: str   # registry metadata only, never computed from


def summary_row(rs: RootSystem) -> SummaryRow:
    _require_two_lengths(rs)
    red = simple_reduction(rs)
    dims = little_adjoint_dims(rs)
    return SummaryRow(
        system=str(rs.spec),
        module_dim=dims.dim,
        theta_short_coeffs=rs.theta_short.coeffs,
        coxeter_number=rs.coxeter_number,
        sub_type=str(red.sub_spec),
        sub_coxeter_number=red.sub_coxeter_number,
        orbit_count=orbit_count(rs),
        ambient_algebra=_AMBIENT[rs.spec.family](rs.rank),
    )
