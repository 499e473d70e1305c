"""Named verifiers for the structural claims this library machine-checks on
concrete instances: connectivity criteria, diameter and girth bounds, the
completeness classifier, tournament exclusion, and matrix-ring bounds.

Every verifier returns a CheckResult with status pass / fail / not-applicable.
Failures always carry a concrete counterexample witness; not-applicable names
the unmet hypothesis.  A constructive path builder mirrors the connectivity
arguments case by case and is cross-checked against BFS distances in tests.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .graphs import (
    INF,
    ZdGraph,
    compute_graph_metrics,
    directed_connectivity,
    directed_zd_graph,
    girth_with_cycle,
    is_complete,
    is_tournament,
    undirected_diameter,
)
from .ideals import (
    OneSidedIdeal,
    additive_closure,
    enumerate_one_sided_ideals,
    ideal_product,
    left_annihilator,
)
from .rings import (
    FiniteRing,
    central_idempotents,
    element_zero_divisors,
    is_local_ring,
    make_matrix_ring,
)
from .report import AnalysisReport, CheckResult, serialize_extent
from .semigroups import AnnSets, FiniteSemigroupWithZero, ann_sets, build_ipo

PASS = "pass"
FAIL = "fail"
NOT_APPLICABLE = "not-applicable"


@dataclass
class RingAnalysis:
    """One ring's ideal/semigroup/graph artifacts, built once and shared."""

    ring: FiniteRing
    left: list[OneSidedIdeal]
    right: list[OneSidedIdeal]
    ipo: FiniteSemigroupWithZero
    ann: AnnSets
    graph: ZdGraph


def prepare_ring_analysis(r: FiniteRing) -> RingAnalysis:
    left = enumerate_one_sided_ideals(r, "left")
    right = enumerate_one_sided_ideals(r, "right")
    ipo = build_ipo(r)
    return RingAnalysis(
        ring=r,
        left=left,
        right=right,
        ipo=ipo,
        ann=ann_sets(ipo),
        graph=directed_zd_graph(ipo),
    )


def _labels(g: ZdGraph, vertices) -> list[str]:
    return [g.label_of(v) for v in sorted(vertices)]


# -- semigroup-level checks ----------------------------------------------------


def check_directed_connectivity_iff(
    s: FiniteSemigroupWithZero, *, graph: ZdGraph | None = None
) -> CheckResult:
    """Directed graph is connected exactly when the left and right
    annihilator sets coincide, and connected instances have diameter <= 3."""
    g = graph if graph is not None else directed_zd_graph(s)
    ann = ann_sets(s)
    sides_equal = ann.a_left == ann.a_right
    connected, diam = directed_connectivity(g)
    witness = {
        "ann_sides_equal": sides_equal,
        "connected": connected,
        "diameter": serialize_extent(diam),
    }
    if connected != sides_equal:
        witness["left_only"] = _labels(g, ann.a_left - ann.a_right)
        witness["right_only"] = _labels(g, ann.a_right - ann.a_left)
        return CheckResult("directed_connectivity_iff", FAIL, witness)
    if connected and diam is not None and diam > 3:
        return CheckResult("directed_connectivity_iff", FAIL, witness)
    return CheckResult("directed_connectivity_iff", PASS, witness)


def check_undirected_connectivity(
    s: FiniteSemigroupWithZero, *, graph: ZdGraph | None = None
) -> CheckResult:
    """Undirected graph is connected (vacuously below 2 vertices) with
    diameter <= 3."""
    g = graph if graph is not None else directed_zd_graph(s)
    diam = undirected_diameter(g)
    witness = {"diameter": serialize_extent(diam)}
    if diam is INF or (diam is not None and diam > 3):
        return CheckResult("undirected_connectivity", FAIL, witness)
    return CheckResult("undirected_connectivity", PASS, witness)


def check_girth_bound(
    s: FiniteSemigroupWithZero, *, graph: ZdGraph | None = None
) -> CheckResult:
    """If the undirected graph has a cycle at all, its girth is 3 or 4."""
    g = graph if graph is not None else directed_zd_graph(s)
    value, cycle = girth_with_cycle(g)
    witness: dict = {"girth": serialize_extent(value)}
    if cycle is not None:
        witness["cycle"] = [g.label_of(v) for v in cycle]
    status = PASS if value is INF or value <= 4 else FAIL
    return CheckResult("girth_bound", status, witness)


# -- constructive path builder --------------------------------------------------


def _assert_path(s: FiniteSemigroupWithZero, path: list[int], mode: str) -> None:
    t = s.table
    if len(path) != len(set(path)) or not 2 <= len(path) <= 4:
        raise RuntimeError(f"internal: constructed path {path} is degenerate")
    d_star = ann_sets(s).d_star
    if any(v not in d_star for v in path):
        raise RuntimeError(f"internal: constructed path {path} leaves the vertex set")
    for x, y in zip(path, path[1:]):
        ok = t[x, y] == 0 if mode == "directed" else (t[x, y] == 0 or t[y, x] == 0)
        if not ok:
            raise RuntimeError(f"internal: consecutive pair ({x},{y}) does not annihilate")


def _first(iterable, reason: str) -> int:
    for x in iterable:
        return x
    raise RuntimeError(f"internal: {reason}")


def _directed_path(s: FiniteSemigroupWithZero, a: int, b: int) -> list[int]:
    t = s.table
    m = s.order
    if t[a, b] == 0:
        return [a, b]
    c = _first((x for x in range(1, m) if t[a, x] == 0), f"no right annihilator for {a}")
    d = _first((x for x in range(1, m) if t[x, b] == 0), f"no left annihilator for {b}")
    if c == d:
        return [a, c, b]
    if t[c, d] == 0:
        if c == a:
            return [a, d, b]
        if d == b:
            return [a, c, b]
        return [a, c, d, b]
    return [a, int(t[c, d]), b]


def _bridge_from_square_zero(s: FiniteSemigroupWithZero, a: int, b: int) -> list[int]:
    """Path a..b when a*a = 0, b*b != 0 and a, b are not adjacent."""
    t = s.table
    m = s.order

    def adj(x, y):
        return t[x, y] == 0 or t[y, x] == 0

    c = _first(
        (x for x in range(1, m) if x not in (a, b) and adj(b, x)),
        f"no annihilating partner besides {a} for {b}",
    )
    if adj(a, c):
        return [a, c, b]
    if t[b, c] == 0:
        return [a, int(t[c, a]), b]
    return [a, int(t[a, c]), b]


def _undirected_path(s: FiniteSemigroupWithZero, a: int, b: int) -> list[int]:
    t = s.table
    m = s.order

    def adj(x, y):
        return t[x, y] == 0 or t[y, x] == 0

    if adj(a, b):
        return [a, b]
    a_sq_zero = t[a, a] == 0
    b_sq_zero = t[b, b] == 0
    if a_sq_zero and b_sq_zero:
        return [a, int(t[a, b]), b]
    if a_sq_zero:
        return _bridge_from_square_zero(s, a, b)
    if b_sq_zero:
        return list(reversed(_bridge_from_square_zero(s, b, a)))

    c = _first(
        (x for x in range(1, m) if x not in (a, b) and adj(a, x)),
        f"no annihilating partner besides {b} for {a}",
    )
    d = _first(
        (x for x in range(1, m) if x not in (a, b) and adj(b, x)),
        f"no annihilating partner besides {a} for {b}",
    )
    if adj(c, b):
        return [a, c, b]
    if adj(a, d):
        return [a, d, b]
    if adj(c, d):
        return [a, c, d, b]
    ac0 = t[a, c] == 0
    ca0 = t[c, a] == 0
    db0 = t[d, b] == 0
    bd0 = t[b, d] == 0
    if ac0 and db0:
        return [a, int(t[c, d]), b]
    if ac0 and bd0:
        return [a, int(t[c, b]), d, b]
    if ca0 and bd0:
        return [a, int(t[d, c]), b]
    return [a, int(t[b, c]), d, b]


def constructive_path(
    s: FiniteSemigroupWithZero, a: int, b: int, mode: str = "directed"
) -> list[int]:
    """A length <= 3 path from vertex a to vertex b built by replaying the
    connectivity argument case by case (never by search).

    Directed mode requires the left and right annihilator sets to coincide;
    undirected mode is unconditional.  Consecutive products along the result
    are zero (in the appropriate direction for the mode).
    """
    if mode not in ("directed", "undirected"):
        raise ValueError("mode must be 'directed' or 'undirected'")
    ann = ann_sets(s)
    if a == b or a not in ann.d_star or b not in ann.d_star:
        raise ValueError("endpoints must be distinct graph vertices")
    if mode == "directed":
        if ann.a_left != ann.a_right:
            raise ValueError(
                "directed path construction requires matching left/right annihilator sets"
            )
        path = _directed_path(s, a, b)
    else:
        path = _undirected_path(s, a, b)
    _assert_path(s, path, mode)
    return path


# -- ring-level checks -----------------------------------------------------------


def _zero_ring_na(name: str) -> CheckResult:
    return CheckResult(name, NOT_APPLICABLE, {"unmet": "ring has one == zero"})


def check_duo_ann_sets(r: FiniteRing, *, analysis: RingAnalysis | None = None) -> CheckResult:
    """On rings whose one-sided ideals are all two-sided, both annihilator
    sets equal everything except the zero ideal and the full ring."""
    name = "duo_ann_sets"
    if r.is_zero_ring():
        return _zero_ring_na(name)
    a = analysis if analysis is not None else prepare_ring_analysis(r)
    for ideal in a.left + a.right:
        if not (ideal.is_left and ideal.is_right):
            return CheckResult(
                name,
                NOT_APPLICABLE,
                {"unmet": "ring is not Duo", "one_sided_ideal": str(ideal.set)},
            )
    full_bits = (1 << r.order) - 1
    expected = frozenset(
        i for i, lab in enumerate(a.ipo.labels) if lab.bits not in (1, full_bits)
    )
    witness = {
        "ipo_size": a.ipo.order,
        "expected_vertices": _labels(a.graph, expected) if expected else [],
    }
    if a.ann.a_left == a.ann.a_right == expected:
        return CheckResult(name, PASS, witness)
    witness["a_left"] = [str(a.ipo.labels[i]) for i in sorted(a.ann.a_left)]
    witness["a_right"] = [str(a.ipo.labels[i]) for i in sorted(a.ann.a_right)]
    return CheckResult(name, FAIL, witness)


def _division_subring(r: FiniteRing, e: int) -> bool:
    """Is e*R*e a division ring with identity e?"""
    mul = r.mul_table
    sub = np.unique(mul[mul[e, :], e])
    sub = sub[sub != 0]
    if len(sub) == 0:
        return False
    tbl = mul[np.ix_(sub, sub)]
    return bool((((tbl == e) & (tbl.T == e)).any(axis=1)).all())


def _zero_divisor_products_vanish(r: FiniteRing) -> bool:
    didx = np.nonzero(element_zero_divisors(r).mask())[0]
    if len(didx) == 0:
        return True
    step = max(1, 4_000_000 // len(didx))
    for lo in range(0, len(didx), step):
        rows = didx[lo : lo + step]
        if (r.mul_table[np.ix_(rows, didx)] != 0).any():
            return False
    return True


def _completeness_branches(r: FiniteRing, a: RingAnalysis) -> tuple[list[str], dict]:
    branches: list[str] = []
    detail: dict = {}
    mul = r.mul_table

    if _zero_divisor_products_vanish(r):
        branches.append("zero_divisor_products_vanish")

    for e in central_idempotents(r):
        if e in (0, r.one):
            continue
        f = r.sub(r.one, e)
        e_r_f = mul[mul[e, :], f]
        f_r_e = mul[mul[f, :], e]
        if not ((e_r_f == 0).all() and (f_r_e == 0).all()):
            continue
        if _division_subring(r, e) and _division_subring(r, f):
            branches.append("two_division_rings")
            detail["central_idempotent"] = int(e)
            break

    local, maximal = is_local_ring(r)
    if local:
        m_sq = ideal_product(r, maximal, maximal)
        detail["maximal_ideal"] = str(maximal)
        detail["maximal_ideal_squared"] = str(m_sq)
        full_bits = (1 << r.order) - 1
        target = {1, maximal.bits, m_sq.bits, full_bits}
        if {lab.bits for lab in a.ipo.labels} == target:
            branches.append("local_ideal_chain")
    return branches, detail


def classify_completeness(r: FiniteRing, *, analysis: RingAnalysis | None = None) -> CheckResult:
    """The undirected graph is complete exactly when one of three structural
    branches holds: all zero-divisor products vanish, the ring splits into two
    division rings, or it is local and its ideal products stop at the square
    of the maximal ideal."""
    name = "completeness_classifier"
    if r.is_zero_ring():
        return _zero_ring_na(name)
    a = analysis if analysis is not None else prepare_ring_analysis(r)
    branches, detail = _completeness_branches(r, a)
    complete = is_complete(a.graph)
    witness = {"complete": complete, "branches": branches, **detail}
    status = PASS if bool(branches) == complete else FAIL
    return CheckResult(name, status, witness)


def check_not_tournament(r: FiniteRing, *, analysis: RingAnalysis | None = None) -> CheckResult:
    """When no nonzero ideal product squares to zero and the annihilator sides
    overlap, the directed graph cannot be a tournament."""
    name = "not_tournament"
    if r.is_zero_ring():
        return _zero_ring_na(name)
    a = analysis if analysis is not None else prepare_ring_analysis(r)
    tbl = a.ipo.table
    for i in range(1, a.ipo.order):
        if tbl[i, i] == 0:
            return CheckResult(
                name,
                NOT_APPLICABLE,
                {"unmet": "some nonzero ideal product squares to zero",
                 "witness_element": str(a.ipo.labels[i])},
            )
    overlap = a.ann.a_left & a.ann.a_right
    if not overlap:
        return CheckResult(
            name, NOT_APPLICABLE, {"unmet": "left and right annihilator sets are disjoint"}
        )
    g = a.graph
    if is_tournament(g):
        return CheckResult(name, FAIL, {"tournament": True})
    for x in g.vertices:
        for y in g.vertices:
            if x < y and (y in g.out_adj[x]) == (x in g.out_adj[y]):
                kind = "mutual_pair" if y in g.out_adj[x] else "non_adjacent_pair"
                return CheckResult(
                    name, PASS, {kind: [g.label_of(x), g.label_of(y)]}
                )
    raise RuntimeError("internal: tournament test and witness scan disagree")


# -- matrix-ring checks -----------------------------------------------------------


def annihilating_ideal_graph(r: FiniteRing) -> ZdGraph:
    """Commutative annihilating-ideal graph: nonzero ideals with a nonzero
    annihilator, adjacent when their product is the zero ideal."""
    if not r.is_commutative():
        raise ValueError("the annihilating-ideal graph is defined for commutative rings")
    ideals = [i.set for i in enumerate_one_sided_ideals(r, "left")]
    vsets = [
        s for s in ideals if s.bits != 1 and left_annihilator(r, s).bits != 1
    ]
    m = len(vsets)
    adj = np.zeros((m, m), dtype=bool)
    for i, x in enumerate(vsets):
        for j, y in enumerate(vsets):
            if i != j:
                adj[i, j] = ideal_product(r, x, y).bits == 1
    return ZdGraph(range(m), vsets, adj)


def _require_matrix_args(r: FiniteRing, k: int) -> None:
    if not r.is_commutative():
        raise ValueError("matrix checks require a commutative base ring")
    if k < 2:
        raise ValueError("matrix checks require dimension k >= 2")


def _matrix_graph(r: FiniteRing, k: int, cap, matrix_ring):
    m = matrix_ring if matrix_ring is not None else make_matrix_ring(r, k, cap)
    ipo = build_ipo(m)
    return m, ipo, directed_zd_graph(ipo)


def check_matrix_diam_lower(
    r: FiniteRing, k: int, cap: int | None = None, *, matrix_ring: FiniteRing | None = None
) -> CheckResult:
    """diam of the undirected graph of a k-by-k matrix ring is at least 2;
    also verifies the witness pair of column/row ideals at the corner unit."""
    name = "matrix_diam_lower"
    _require_matrix_args(r, k)
    m, ipo, g = _matrix_graph(r, k, cap, matrix_ring)
    diam = undirected_diameter(g)
    witness: dict = {"diameter": serialize_extent(diam)}

    # the column and row ideals at the corner unit: their product is nonzero,
    # so they realise a non-adjacent vertex pair
    e11 = r.one * (r.order ** (k * k - 1))
    col = additive_closure(m, np.unique(m.mul_table[:, e11]))
    row = additive_closure(m, np.unique(m.mul_table[e11, :]))
    label_bits = {g.label_value(v).bits for v in g.vertices}
    both_vertices = col.bits in label_bits and row.bits in label_bits
    product_nonzero = ideal_product(m, col, row).bits != 1
    witness["corner_pair_present"] = both_vertices
    witness["corner_product_nonzero"] = product_nonzero
    ok = (
        (diam is INF or (diam is not None and diam >= 2))
        and both_vertices
        and product_nonzero
    )
    return CheckResult(name, PASS if ok else FAIL, witness)


def check_matrix_diam_monotone(
    r: FiniteRing, k: int, cap: int | None = None, *, matrix_ring: FiniteRing | None = None
) -> CheckResult:
    """diam over the matrix ring dominates diam over the base ring, and the
    base-ring graph agrees with the directly built annihilating-ideal graph."""
    name = "matrix_diam_monotone"
    _require_matrix_args(r, k)
    base_graph = directed_zd_graph(build_ipo(r))
    diam_base = undirected_diameter(base_graph)
    diam_ag = undirected_diameter(annihilating_ideal_graph(r))
    _, _, g = _matrix_graph(r, k, cap, matrix_ring)
    diam_matrix = undirected_diameter(g)
    witness = {
        "matrix_diameter": serialize_extent(diam_matrix),
        "base_diameter": serialize_extent(diam_base),
        "base_ag_diameter": serialize_extent(diam_ag),
    }

    def rank(d):
        return -math.inf if d is None else d

    ok = diam_ag == diam_base and rank(diam_matrix) >= rank(diam_base)
    return CheckResult(name, PASS if ok else FAIL, witness)


def check_matrix_girth(
    r: FiniteRing, k: int, cap: int | None = None, *, matrix_ring: FiniteRing | None = None
) -> CheckResult:
    """Girth of the undirected graph of a k-by-k matrix ring is exactly 3."""
    name = "matrix_girth"
    _require_matrix_args(r, k)
    _, _, g = _matrix_graph(r, k, cap, matrix_ring)
    value, cycle = girth_with_cycle(g)
    witness: dict = {"girth": serialize_extent(value)}
    if cycle is not None:
        witness["cycle"] = [g.label_of(v) for v in cycle]
    return CheckResult(name, PASS if value == 3 else FAIL, witness)


# -- full analysis ------------------------------------------------------------------


def run_all(
    r: FiniteRing,
    expr: str | None = None,
    *,
    matrix_base: FiniteRing | None = None,
    matrix_k: int | None = None,
    cap: int | None = None,
    analysis: RingAnalysis | None = None,
) -> AnalysisReport:
    """Build ideals, the ideal-product semigroup, both graph views, all
    metrics, and every applicable check for one ring.

    When the ring is a k-by-k matrix ring over a known base (the CLI passes
    this for matrix expressions), the matrix-specific checks run as well,
    reusing the already-built ring.
    """
    a = analysis if analysis is not None else prepare_ring_analysis(r)
    metrics = compute_graph_metrics(a.graph)
    checks = [
        check_directed_connectivity_iff(a.ipo, graph=a.graph),
        check_undirected_connectivity(a.ipo, graph=a.graph),
        check_girth_bound(a.ipo, graph=a.graph),
        check_duo_ann_sets(r, analysis=a),
        classify_completeness(r, analysis=a),
        check_not_tournament(r, analysis=a),
    ]
    if matrix_base is not None and matrix_k is not None:
        if not matrix_base.is_commutative():
            na = {"unmet": "base ring is not commutative"}
            checks += [
                CheckResult("matrix_diam_lower", NOT_APPLICABLE, na),
                CheckResult("matrix_diam_monotone", NOT_APPLICABLE, na),
                CheckResult("matrix_girth", NOT_APPLICABLE, na),
            ]
        elif matrix_k < 2:
            na = {"unmet": "matrix dimension below 2"}
            checks += [
                CheckResult("matrix_diam_lower", NOT_APPLICABLE, na),
                CheckResult("matrix_diam_monotone", NOT_APPLICABLE, na),
                CheckResult("matrix_girth", NOT_APPLICABLE, na),
            ]
        else:
            checks += [
                check_matrix_diam_lower(matrix_base, matrix_k, cap, matrix_ring=r),
                check_matrix_diam_monotone(matrix_base, matrix_k, cap, matrix_ring=r),
                check_matrix_girth(matrix_base, matrix_k, cap, matrix_ring=r),
            ]
    return AnalysisReport(
        expr=expr if expr is not None else r.name,
        ring_order=r.order,
        left_ideal_count=len(a.left),
        right_ideal_count=len(a.right),
        ipo_size=a.ipo.order,
        vertex_count=a.graph.n_vertices,
        directed_connected=metrics.directed_connected,
        directed_diameter=metrics.directed_diameter,
        undirected_diameter=metrics.undirected_diameter,
        girth=metrics.girth,
        complete=metrics.complete,
        tournament=metrics.tournament,
        checks=checks,
    )
