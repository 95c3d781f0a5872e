"""The verification catalog: every identity the library claims, keyed by a
stable check id and runnable against any system.

Each runner returns (status, details) with status one of "pass", "fail"
or "skipped"; failures carry both computed values, skips carry the
reason.  The README lists the same ids; a test keeps the two in sync.
"""

from __future__ import annotations

import random

from . import antichains as ac
from . import gradedchar as gc
from . import littleadjoint as la
from . import reduction as red
from . import weyl
from .config import Limits
from .errors import SizeLimitExceeded, UnsupportedRootSystem
from .rootsystem import RootSystem, dual_coxeter_of_dual

__all__ = ["CHECK_IDS", "run_check", "run_all", "check_summaries"]

_ORDER_SAMPLE = 200
_ORDER_SEED = 20120523


def _orderings(rs: RootSystem):
    """All simple-root orderings for rank <= 4, a fixed-seed sample above."""
    import itertools

    n = rs.rank
    if n <= 4:
        return list(itertools.permutations(range(n)))
    rng = random.Random(_ORDER_SEED)
    out = []
    for _ in range(_ORDER_SAMPLE):
        perm = list(range(n))
        rng.shuffle(perm)
        out.append(tuple(perm))
    return out


def _fail(details, **values):
    details.update(values)
    return "fail", details


def _check_root_counts(rs: RootSystem, limits: Limits):
    n = rs.rank
    details = {
        "roots": len(rs.roots),
        "rank_times_h": n * rs.coxeter_number,
        "short_roots": 2 * len(rs.short_positives),
        "h_times_short_simples": rs.coxeter_number * len(rs.short_simple_indices),
        "exponent_sum": sum(rs.exponents),
        "positive_roots": rs.num_positive,
        "exponents": list(rs.exponents),
    }
    ok = (
        details["roots"] == details["rank_times_h"]
        and details["short_roots"] == details["h_times_short_simples"]
        and details["exponent_sum"] == details["positive_roots"]
    )
    return ("pass" if ok else "fail"), details


def _check_semidirect(rs: RootSystem, limits: Limits):
    group = weyl.enumerate_group(rs, limits.max_weyl_order)
    w_l = weyl.closure(rs, weyl.long_subgroup(rs).generators, limits.max_closure_size)
    w_s = weyl.closure(rs, weyl.short_parabolic(rs).generators, limits.max_closure_size)
    details = {
        "weyl_order": len(group),
        "long_subgroup_order": len(w_l),
        "short_parabolic_order": len(w_s),
    }
    if len(w_s) * len(w_l) != len(group):
        return _fail(details, product_order=len(w_s) * len(w_l))
    inter = w_l & w_s
    details["intersection_order"] = len(inter)
    if len(inter) != 1:
        return "fail", details
    long_reflections = [weyl.reflection(rs, r) for r in rs.long_positive_roots()]
    for i in range(rs.rank):
        g = weyl.simple_reflection(rs, i)
        gi = g.inverse()
        for r in long_reflections:
            if g * r * gi not in w_l:
                return _fail(details, normality="violated", generator=i)
    details["normal"] = True
    p = rs.num_positive
    long_pos = [rs.index(r) for r in rs.long_positive_roots()]
    stable = frozenset(
        w for w in group if all(w.perm[i] < p for i in long_pos)
    )
    if stable != w_s:
        return _fail(details, stable_set_order=len(stable))
    details["stable_set_matches_parabolic"] = True
    pairs = set()
    for w in group:
        ws, wl = weyl.decompose_semidirect(rs, w)
        if ws * wl != w or ws not in w_s or wl not in w_l:
            return _fail(details, roundtrip="violated")
        pairs.add((ws.perm, wl.perm))
    details["distinct_factor_pairs"] = len(pairs)
    if len(pairs) != len(group):
        return "fail", details
    return "pass", details


def _check_little_adjoint_dims(rs: RootSystem, limits: Limits):
    dims = la.little_adjoint_dims(rs)
    h = rs.coxeter_number
    k = len(rs.short_simple_indices)
    ws = la.freudenthal(rs, rs.weight_of(rs.theta_short))
    support_ok = len(ws) == dims.short_count + 1 and all(
        ws.multiplicity(rs.weight_of(r)) == 1 for r in rs.short_positive_roots()
    )
    details = {
        "dim": dims.dim,
        "expected_dim": (h + 1) * k,
        "zero_multiplicity": dims.zero_mult,
        "short_simple_count": k,
        "short_root_count": dims.short_count,
        "weight_support_is_short_roots_plus_zero": support_ok,
    }
    ok = dims.dim == (h + 1) * k and dims.zero_mult == k and support_ok
    return ("pass" if ok else "fail"), details


def _check_sign_partition(rs: RootSystem, limits: Limits):
    ht = rs.theta_short.height
    details = {"short_dominant_height": ht}
    for mu in rs.roots:
        part = la.delta_partition(rs, mu)
        if len(part.pos_pos) + len(part.pos_neg) != len(part.pos_pos) + len(part.neg_pos):
            return _fail(details, root=list(mu.coeffs))
    theta_part = la.delta_partition(rs, rs.theta_short)
    details["short_dominant_negative_part"] = len(theta_part.pos_neg)
    if theta_part.pos_neg:
        return "fail", details
    for i in rs.short_simple_indices:
        part = la.delta_partition(rs, rs.simple_root(i))
        if len(part.pos_pos) != ht or len(part.pos_neg) != ht - 1:
            return _fail(
                details,
                simple_index=i,
                positive_agreeing=len(part.pos_pos),
                positive_opposing=len(part.pos_neg),
            )
    details["per_simple_counts"] = [ht, ht - 1]
    return "pass", details


def _check_hw_orbit_dim(rs: RootSystem, limits: Limits):
    dim = la.hw_orbit_dim(rs)
    details = {
        "orbit_dim": dim,
        "twice_height": 2 * rs.theta_short.height,
        "from_dual_coxeter": 2 * dual_coxeter_of_dual(rs) - 2,
    }
    ok = dim == details["twice_height"] == details["from_dual_coxeter"]
    return ("pass" if ok else "fail"), details


def _check_dual_coxeter_dual(rs: RootSystem, limits: Limits):
    value = dual_coxeter_of_dual(rs)
    details = {"value": value, "one_plus_short_dominant_height": 1 + rs.theta_short.height}
    ok = value == details["one_plus_short_dominant_height"]
    if not rs.is_multiply_laced:
        details["self_dual_coxeter"] = rs.dual_coxeter_number
        ok = ok and value == rs.dual_coxeter_number
    return ("pass" if ok else "fail"), details


def _check_coxeter_orbits(rs: RootSystem, limits: Limits):
    h = rs.coxeter_number
    shorts = len(rs.short_simple_indices) or rs.rank
    orderings = _orderings(rs)
    details = {"orderings_tested": len(orderings), "coxeter_number": h,
               "expected_short_orbits": shorts}
    for ordering in orderings:
        c = weyl.coxeter_element(rs, ordering)
        orbits = weyl.coxeter_orbits(rs, c)
        if any(len(o) != h for o in orbits):
            return _fail(details, ordering=list(ordering),
                         orbit_sizes=sorted(len(o) for o in orbits))
        short_orbits = sum(1 for o in orbits if rs.roots[o[0]].is_short)
        if short_orbits != shorts:
            return _fail(details, ordering=list(ordering), short_orbits=short_orbits)
    return "pass", details


def _check_coxeter_power(rs: RootSystem, limits: Limits):
    reduction = red.simple_reduction(rs)
    orderings = _orderings(rs)
    details = {
        "orderings_tested": len(orderings),
        "sub_coxeter_number": reduction.sub_coxeter_number,
        "transition_factor": reduction.transition_factor,
    }
    for ordering in orderings:
        if not red.check_coxeter_power(rs, ordering):
            return _fail(details, ordering=list(ordering))
    if rs.coxeter_number % reduction.sub_coxeter_number:
        return _fail(details, coxeter_number=rs.coxeter_number)
    return "pass", details


def _check_transition_gap(rs: RootSystem, limits: Limits):
    t = red.transition_identities(rs)
    details = {
        "factor": t.factor,
        "coxeter_gap": t.coxeter_gap,
        "height_gap": t.height_gap,
    }
    ok = t.factor == t.coxeter_gap == t.height_gap
    return ("pass" if ok else "fail"), details


def _check_dimension_ledger(rs: RootSystem, limits: Limits):
    ledger = red.dimension_ledger(rs)
    details = {
        "module_dim": ledger.module_dim,
        "module_nullcone_dim": ledger.module_nullcone_dim,
        "reduction_dim": ledger.reduction_dim,
        "reduction_nullcone_dim": ledger.reduction_nullcone_dim,
        "transition_factor": ledger.transition_factor,
    }
    ok = (
        ledger.module_nullcone_dim * 1 == ledger.transition_factor * ledger.reduction_nullcone_dim
        and ledger.module_dim - ledger.module_nullcone_dim
        == ledger.reduction_dim - ledger.reduction_nullcone_dim
    )
    return ("pass" if ok else "fail"), details


def _check_hyperplane_classes(rs: RootSystem, limits: Limits):
    classes = red.hyperplane_classes(rs)
    reduction = red.simple_reduction(rs)
    sub_pos = sum(1 for r in reduction.subsystem if r.is_positive)
    details = {
        "classes": len(classes.classes),
        "subsystem_positives": sub_pos,
        "representatives": [list(r.coeffs) for r in classes.representatives],
    }
    ok = len(classes.classes) == sub_pos == len(classes.representatives)
    return ("pass" if ok else "fail"), details


def _check_one_step(rs: RootSystem, limits: Limits):
    strings = red.one_step_strings(rs)
    details = {"roots_outside_subsystem": len(strings)}
    empty = [g for g, e in strings.items() if not e.pairs]
    not_sole = [g for g, e in strings.items() if not e.sole]
    details["empty"] = [list(g.coeffs) for g in empty]
    details["multiple_target_classes"] = [list(g.coeffs) for g in not_sole]
    ok = not empty and not not_sole
    return ("pass" if ok else "fail"), details


_REGISTRY_DIM = {"B": lambda n: 2 * n + 1, "C": lambda n: 2 * n * n - n - 1,
                 "F": lambda n: 26, "G": lambda n: 7}
_REGISTRY_H = {"B": lambda n: 2 * n, "C": lambda n: 2 * n, "F": lambda n: 12,
               "G": lambda n: 6}
_REGISTRY_SUB = {"B": lambda n: "A1", "C": lambda n: f"A{n - 1}", "F": lambda n: "A2",
                 "G": lambda n: "A1"}
_REGISTRY_HS = {"B": lambda n: 2, "C": lambda n: n, "F": lambda n: 3, "G": lambda n: 2}


def _check_table_row(rs: RootSystem, limits: Limits):
    row = red.summary_row(rs)
    f, n = rs.spec.family, rs.rank
    expected_orbits = red.partition_count(n) if f == "C" else {"B": 2, "F": 3, "G": 2}[f]
    expected = {
        "module_dim": _REGISTRY_DIM[f](n),
        "coxeter_number": _REGISTRY_H[f](n),
        "sub_type": _REGISTRY_SUB[f](n),
        "sub_coxeter_number": _REGISTRY_HS[f](n),
        "orbit_count": expected_orbits,
    }
    computed = {
        "module_dim": row.module_dim,
        "coxeter_number": row.coxeter_number,
        "sub_type": row.sub_type,
        "sub_coxeter_number": row.sub_coxeter_number,
        "orbit_count": row.orbit_count,
    }
    details = {"computed": computed, "registry": expected,
               "theta_short_coeffs": list(row.theta_short_coeffs)}
    return ("pass" if computed == expected else "fail"), details


def _check_antichains(rs: RootSystem, limits: Limits):
    poset = ac.short_root_poset(rs)
    brute = ac.count_antichains(poset, limits.max_poset_size)
    formula = ac.count_antichains_formula(rs)
    details = {"brute_force": brute, "formula": formula, "poset_size": len(poset)}
    if rs.length_ratio == 2:
        details["alt_formula"] = ac.count_antichains_formula_alt(rs)
        if details["alt_formula"] != formula:
            return "fail", details
    return ("pass" if brute == formula else "fail"), details


def _check_nullcone_hilbert(rs: RootSystem, limits: Limits):
    degree = min(limits.max_series_degree, 4 if rs.rank >= 4 else 8)
    report = gc.hilbert_check(rs, degree, limits.max_weyl_order)
    trivial = gc.graded_multiplicity(
        rs, [0] * rs.rank, [0] * rs.rank, degree, limits.max_weyl_order
    )
    details = {
        "degree": degree,
        "dimension_series": [report.dimension_series.coeff(k) for k in range(degree + 1)],
        "expected_series": [report.expected_series.coeff(k) for k in range(degree + 1)],
        "first_mismatch": report.first_mismatch,
        "trivial_multiplicity_is_one": trivial == gc.QPoly.one(degree),
        "entries": len(report.character),
        "negative_coefficients": [
            [list(int(c) for c in w.fund), k, v]
            for w, k, v in report.character.negative_terms()
        ],
    }
    ok = report.ok and details["trivial_multiplicity_is_one"]
    return ("pass" if ok else "fail"), details


_CHECKS = {
    "root-counts": (
        "root count equals rank times Coxeter number; short roots count h per "
        "short simple root; exponents sum to the number of positive roots",
        False,
        _check_root_counts,
    ),
    "semidirect-product": (
        "the long-reflection subgroup is normal, meets the short parabolic "
        "trivially, and every element factors uniquely as (parabolic) * (long)",
        True,
        _check_semidirect,
    ),
    "little-adjoint-dims": (
        "zero weight multiplicity equals the number of short simple roots and "
        "the module dimension is (h+1) times that, by three independent routes",
        True,
        _check_little_adjoint_dims,
    ),
    "sign-partition": (
        "for each root, the positive/negative split of non-orthogonal roots is "
        "balanced; for short simple roots the counts are ht and ht-1",
        True,
        _check_sign_partition,
    ),
    "hw-orbit-dim": (
        "the highest weight orbit closure has dimension twice the height of "
        "the short dominant root",
        True,
        _check_hw_orbit_dim,
    ),
    "dual-coxeter-dual": (
        "the dual system's dual Coxeter number is one plus the height of the "
        "short dominant root",
        False,
        _check_dual_coxeter_dual,
    ),
    "coxeter-orbits": (
        "every Coxeter element orbit on the roots has size h and the number "
        "of short orbits equals the number of short simple roots",
        False,
        _check_coxeter_orbits,
    ),
    "coxeter-power": (
        "the h_s-th power of every tested Coxeter element lies in the "
        "long-reflection subgroup, and h_s divides h",
        True,
        _check_coxeter_power,
    ),
    "transition-gap": (
        "h/h_s equals h minus the short dominant height and the height gap "
        "plus one",
        True,
        _check_transition_gap,
    ),
    "dimension-ledger": (
        "module and reduction dimensions, their nullcone counterparts, and "
        "the transition-factor ratio between them",
        True,
        _check_dimension_ledger,
    ),
    "hyperplane-classes": (
        "short positive roots fall into kernel classes counted by the "
        "subsystem positives, one canonical representative each",
        True,
        _check_hyperplane_classes,
    ),
    "one-step-strings": (
        "every short positive root outside the subsystem reaches it by a "
        "single long-root step, with one target class up to sign",
        True,
        _check_one_step,
    ),
    "table-row": (
        "dimension, Coxeter data, reduction type and orbit count reproduce "
        "the registry row for the family",
        True,
        _check_table_row,
    ),
    "antichain-count": (
        "brute-force antichain counts in the short positive root poset match "
        "the exponent product formula (and its double-laced variant)",
        True,
        _check_antichains,
    ),
    "nullcone-hilbert": (
        "the dimension series of the graded nullcone character equals the "
        "complete intersection Hilbert series of the basic invariant degrees",
        True,
        _check_nullcone_hilbert,
    ),
}

CHECK_IDS = tuple(sorted(_CHECKS))


def check_summaries():
    return {cid: _CHECKS[cid][0] for cid in CHECK_IDS}


def run_check(check_id: str, rs: RootSystem, limits: Limits):
    """Run one check; returns (status, details)."""
    if check_id not in _CHECKS:
        raise KeyError(check_id)
    _, needs_two_lengths, runner = _CHECKS[check_id]
    if needs_two_lengths and not rs.is_multiply_laced:
        return "skipped", {"reason": f"{rs.spec} has a single root length"}
    try:
        return runner(rs, limits)
    except SizeLimitExceeded as exc:
        return "skipped", {"reason": str(exc)}
    except UnsupportedRootSystem as exc:
        return "skipped", {"reason": str(exc)}


def run_all(rs: RootSystem, limits: Limits, only=None):
    """Run the catalog (or the given subset) against one system, in id
    order.  Unknown ids raise KeyError."""
    ids = CHECK_IDS if only is None else tuple(only)
    for cid in ids:
        if cid not in _CHECKS:
            raise KeyError(cid)
    results = []
    for cid in ids:
        status, details = run_check(cid, rs, limits)
        results.append({"id": cid, "status": status, "details": details})
    return results
