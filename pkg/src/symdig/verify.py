"""Claim checking on constructed instances.

Every check recomputes its measured value from the instance and records it
next to the expected value, so a report can be audited without rerunning.
"""

from __future__ import annotations

import json
import time
import warnings
from dataclasses import dataclass, field
from typing import Any, Callable

import numpy as np

from symdig import constructions as cons
from symdig.digraph import (
    Digraph,
    a2_sets,
    check_map_is_isomorphism,
    hamming,
    is_connected,
    neighbors,
    normal_quotient,
    opp,
)
from symdig.errors import InvalidParameterError
from symdig.finfield import FiniteField
from symdig.permaction import (
    GeneratedAction,
    VacuousTransitivityWarning,
    group_enumerate,
    is_transitive,
    is_transitive_on,
    orbit,
    pair_orbit,
    perm_order,
)

DEFAULT_SEED = 0x5EED
PAIR_SCAN_CAP = 10**6
SAMPLE_PAIRS = 10**5
ENUM_CAP = 10**6


@dataclass
class ClaimRecord:
    id: str
    anchor: str
    passed: bool
    measured: Any
    expected: Any
    millis: float = 0.0
    warning: str | None = None

    def to_dict(self, timings: bool = False) -> dict:
        return {
            "id": self.id,
            "anchor": self.anchor,
            "pass": self.passed,
            "measured": self.measured,
            "expected": self.expected,
            "millis": round(self.millis, 3) if timings else None,
            "warning": self.warning,
        }


@dataclass
class PropertyReport:
    family: str
    q: int | None = None
    m: int | None = None
    n: int | None = None
    seed: int = DEFAULT_SEED
    claims: list[ClaimRecord] = field(default_factory=list)
    info: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.claims)

    def claim(self, claim_id: str) -> ClaimRecord:
        for c in self.claims:
            if c.id == claim_id:
                return c
        raise KeyError(claim_id)

    def failures(self) -> list[str]:
        return [c.id for c in self.claims if not c.passed]

    def to_dict(self, timings: bool = False) -> dict:
        return {
            "instance": {"family": self.family, "q": self.q, "m": self.m, "n": self.n},
            "seed": self.seed,
            "claims": [c.to_dict(timings) for c in self.claims],
            "info": self.info,
            "pass": self.passed,
        }

    def to_json(self, timings: bool = False) -> str:
        return json.dumps(self.to_dict(timings), indent=2) + "\n"

    def summary_lines(self) -> list[str]:
        return [f"{'PASS' if c.passed else 'FAIL'}  {c.id}: {c.anchor}" for c in self.claims]


def _run(claim_id: str, anchor: str, fn: Callable[[], tuple]) -> ClaimRecord:
    """Time ``fn`` and wrap its (passed, measured, expected[, warning]) result."""
    start = time.perf_counter()
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always", VacuousTransitivityWarning)
        result = fn()
    millis = (time.perf_counter() - start) * 1000.0
    passed, measured, expected = result[:3]
    warning = result[3] if len(result) > 3 else None
    if warning is None and any(issubclass(w.category, VacuousTransitivityWarning) for w in caught):
        warning = "vacuous: the set is empty"
    return ClaimRecord(claim_id, anchor, bool(passed), measured, expected, millis, warning)


def _names(g: Digraph, vertices) -> list[str]:
    if g.labels is None:
        return [str(v) for v in vertices]
    return ["|".join(str(x) for x in g.labels[v]) for v in vertices]


def pair_orbit_count(action: GeneratedAction, pairs) -> int:
    """Number of orbits of ``action`` on a set of pairs (assumed invariant)."""
    remaining = set(pairs)
    count = 0
    while remaining:
        orb = pair_orbit(action, min(remaining))
        remaining -= orb
        count += 1
    return count


# Generic checks

def check_wedge_transitive(g: Digraph, action: GeneratedAction) -> list[ClaimRecord]:
    """Transitivity on the arcs and on A2+ (non-adjacent pairs with a common out-neighbour)."""
    if action.size != g.n:
        raise InvalidParameterError("action domain does not match the vertex set")
    plus, _, _ = a2_sets(g)

    def arcs():
        ok = bool(g.arcs) and is_transitive_on(action, g.arcs)
        return ok, {"arcs": len(g.arcs), "orbits": pair_orbit_count(action, g.arcs)}, {"orbits": 1}

    def a2plus():
        ok = is_transitive_on(action, plus.pairs)
        return ok, {"pairs": len(plus), "orbits": pair_orbit_count(action, plus.pairs)}, \
            {"orbits": 1 if plus.pairs else 0}

    return [
        _run("arc_transitive", "the group is transitive on arcs", arcs),
        _run("a2plus_transitive",
             "the group is transitive on non-adjacent pairs sharing an out-neighbour", a2plus),
    ]


def _label_codes(action: GeneratedAction) -> np.ndarray:
    if action.labels is None or not all(isinstance(t, tuple) for t in action.labels):
        raise InvalidParameterError("Hamming preservation needs tuple-labelled points")
    n = len(action.labels[0])
    codes = np.zeros((action.size, n), dtype=np.int64)
    for c in range(n):
        values = {}
        for i, t in enumerate(action.labels):
            codes[i, c] = values.setdefault(t[c], len(values))
    return codes


def check_hamming_preserved(action: GeneratedAction, seed: int = DEFAULT_SEED,
                            pair_cap: int = PAIR_SCAN_CAP,
                            sample: int = SAMPLE_PAIRS) -> ClaimRecord:
    """Every generator preserves the Hamming distance between point labels.

    Scans every ordered pair when there are at most ``pair_cap`` of them,
    otherwise a seeded random sample of ``sample`` pairs.
    """
    codes = _label_codes(action)
    N = action.size

    def fn():
        full = N * N <= pair_cap
        if full:
            dist = (codes[:, None, :] != codes[None, :, :]).sum(axis=2)
        else:
            rng = np.random.default_rng(seed)
            us = rng.integers(0, N, size=sample)
            vs = rng.integers(0, N, size=sample)
            dist = (codes[us] != codes[vs]).sum(axis=1)
        bad = 0
        for g in action.generators:
            perm = np.asarray(g, dtype=np.int64)
            if full:
                moved = dist[np.ix_(perm, perm)]
            else:
                moved = (codes[perm[us]] != codes[perm[vs]]).sum(axis=1)
            bad += int((moved != dist).sum())
        measured = {"mode": "full" if full else "sample",
                    "pairs_per_generator": int(N * N if full else sample),
                    "generators": len(action.generators), "violations": bad}
        return bad == 0, measured, {"violations": 0}

    return _run("hamming_preserved", "every generator preserves Hamming distance", fn)


# X_q

def _xq_context(F: FiniteField):
    domain = cons.delta_domain(F)
    zp = cons.matrix_permutation(F, cons.z_matrix(F))
    return domain, zp


def check_xq_claims(F: FiniteField, graph: Digraph | None = None,
                    seed: int = DEFAULT_SEED) -> PropertyReport:
    """The structural facts about X_q, checked on ``graph`` (default: built fresh).

    Passing a modified graph lets tests confirm the checks are sensitive.
    """
    cons.check_q(F)
    X = graph if graph is not None else cons.build_xq(F)
    q = F.q
    domain, zp = _xq_context(F)
    idx = {c: i for i, c in enumerate(domain)}
    m1 = cons.minus_one(F)
    d10, d01 = idx[cons.OrbitClass(1, 0)], idx[cons.OrbitClass(0, 1)]
    report = PropertyReport("xq", q=q, n=1, seed=seed)
    add = report.claims.append

    add(_run("vertex_count", "vertex count is 2(q+1)",
             lambda: (X.n == 2 * (q + 1), X.n, 2 * (q + 1))))

    def valency():
        outs = sorted({X.out_degree(v) for v in range(X.n)})
        ins = sorted({X.in_degree(v) for v in range(X.n)})
        return outs == [q] and ins == [q], {"out": outs, "in": ins}, {"out": [q], "in": [q]}

    add(_run("valency", "every vertex has in- and out-valency q", valency))

    def out_10():
        got = sorted(neighbors(X, d10, "out"))
        want = sorted(idx[cons.OrbitClass(a, 1)] for a in F.elements())
        return got == want, _names(X, got), _names(X, want)

    add(_run("out_neighbours_10", "out-neighbours of [1,0] are the classes [a,1]", out_10))

    def in_10():
        got = sorted(neighbors(X, d10, "in"))
        want = sorted(idx[cons.OrbitClass(a, m1)] for a in F.elements())
        return got == want, _names(X, got), _names(X, want)

    add(_run("in_neighbours_10", "in-neighbours of [1,0] are the classes [a,-1]", in_10))

    def non_neighbour():
        bad = []
        for v in range(X.n):
            non = [w for w in range(X.n) if w != v and not X.adjacent(v, w)]
            if non != [zp[v]]:
                bad.append(v)
        return not bad, {"vertices_failing": _names(X, bad)}, {"vertices_failing": []}

    add(_run("unique_non_neighbour", "each vertex v has exactly one non-neighbour, namely v^z",
             non_neighbour))

    def z_swap():
        bad = [v for v in range(X.n)
               if set(neighbors(X, v, "out")) != set(neighbors(X, zp[v], "in"))
               or set(neighbors(X, v, "in")) != set(neighbors(X, zp[v], "out"))]
        return not bad, {"vertices_failing": _names(X, bad)}, {"vertices_failing": []}

    add(_run("z_swaps_neighbourhoods", "out(v) = in(v^z) and in(v) = out(v^z) for all v", z_swap))

    def a2plus_empty():
        plus, _, _ = a2_sets(X)
        return not plus.pairs, len(plus), 0

    add(_run("a2plus_empty", "no non-adjacent pair shares an out-neighbour", a2plus_empty))

    def o_iso():
        f = cons.tuple_map(F, cons.o_matrix(F), 1)
        return check_map_is_isomorphism(X, opp(X), f), True, True

    add(_run("o_opp_isomorphism", "v -> v^o is an isomorphism onto the opposite digraph", o_iso))

    def quotient():
        Q, blocks = normal_quotient(X, cons.center_action(F))
        complete = all(Q.has_arc(u, v) for u in range(Q.n) for v in range(Q.n) if u != v)
        ok = Q.n == q + 1 and complete and Q.undirected
        return ok, {"vertices": Q.n, "complete": complete, "undirected": Q.undirected}, \
            {"vertices": q + 1, "complete": True, "undirected": True}

    add(_run("center_quotient_complete", "quotient by <z> is complete on q+1 vertices", quotient))

    def iota():
        ip = cons.matrix_permutation(F, cons.iota_matrix(F))
        image = sorted(ip[v] for v in neighbors(X, d01, "in"))
        target = sorted(neighbors(X, d10, "in"))
        return image == target, _names(X, image), _names(X, target)

    add(_run("iota_maps_in_neighbourhoods", "iota maps in([0,1]) onto in([1,0])", iota))
    return report


def check_proposition_claims(F: FiniteField, seed: int = DEFAULT_SEED,
                             enum_cap: int = ENUM_CAP,
                             pair_cap: int = PAIR_SCAN_CAP) -> PropertyReport:
    """Local structure of X_q around the vertex [1,0]."""
    cons.check_q(F)
    X = cons.build_xq(F)
    q = F.q
    k = (q - 1) // 2
    domain, zp = _xq_context(F)
    idx = {c: i for i, c in enumerate(domain)}
    d0 = idx[cons.OrbitClass(1, 0)]
    d0s = zp[d0]
    out0 = set(neighbors(X, d0, "out"))
    in0 = set(neighbors(X, d0, "in"))
    report = PropertyReport("xq-proposition", q=q, n=1, seed=seed)
    add = report.claims.append

    def c1():
        T = X.induced(out0)
        tournament = all(T.has_arc(u, v) != T.has_arc(v, u)
                         for u in range(T.n) for v in range(u + 1, T.n))
        outs = sorted({T.out_degree(v) for v in range(T.n)})
        ins = sorted({T.in_degree(v) for v in range(T.n)})
        tarcs = {(u, v) for u in out0 for v in out0 if X.has_arc(u, v)}
        B = cons.borel_stabilizer_generators(F)
        borel_ok = bool(tarcs) and pair_orbit(B, min(tarcs)) == tarcs
        ok = tournament and outs == [k] and ins == [k] and borel_ok
        return ok, {"tournament": tournament, "out": outs, "in": ins,
                    "borel_arc_transitive": borel_ok}, \
            {"tournament": True, "out": [k], "in": [k], "borel_arc_transitive": True}

    add(_run("C1_out_tournament",
             "out([1,0]) induces a regular tournament on which the stabilizer is arc-transitive",
             c1))

    def c2():
        counts = sorted({(len(set(neighbors(X, d, "in")) & out0),
                          len(set(neighbors(X, d, "in")) & in0)) for d in out0})
        return counts == [(k, k)], [list(c) for c in counts], [[k, k]]

    add(_run("C2_in_counts",
             "each out-neighbour of [1,0] has (q-1)/2 in-neighbours in out([1,0]) and in in([1,0])",
             c2))

    add(_run("C3_in_of_star", "in(d*) = out(d) for d = [1,0], d* = d^z",
             lambda: (set(neighbors(X, d0s, "in")) == out0,
                      _names(X, neighbors(X, d0s, "in")), _names(X, sorted(out0)))))
    add(_run("C4_out_of_star", "out(d*) = in(d) for d = [1,0], d* = d^z",
             lambda: (set(neighbors(X, d0s, "out")) == in0,
                      _names(X, neighbors(X, d0s, "out")), _names(X, sorted(in0)))))

    def c5():
        cover = {d0, d0s} | out0 | in0
        ok = X.n == 2 * (1 + q) and cover == set(range(X.n))
        return ok, {"vertices": X.n, "covered": len(cover)}, \
            {"vertices": 2 * (1 + q), "covered": 2 * (1 + q)}

    add(_run("C5_vertex_set", "V = {d, d*} + out(d) + in(d), of size 2(1+q)", c5))

    def c6():
        pairs = [(v, w) for v in range(X.n) for w in range(X.n) if w not in (v, zp[v])]
        mode = "full"
        if len(pairs) > pair_cap:
            rng = np.random.default_rng(seed)
            pick = rng.choice(len(pairs), size=SAMPLE_PAIRS, replace=False)
            pairs = [pairs[i] for i in sorted(pick)]
            mode = "sample"
        bad = 0
        for v, w in pairs:
            S = X.induced({v, zp[v], w, zp[w]})
            cyc = (S.n == 4 and len(S.arcs) == 4
                   and all(S.out_degree(x) == 1 and S.in_degree(x) == 1 for x in range(4))
                   and is_connected(S, "strong"))
            bad += not cyc
        return bad == 0, {"mode": mode, "checked": len(pairs), "failing": bad}, {"failing": 0}

    add(_run("C6_four_cycles", "{v, v*, w, w*} induces a directed 4-cycle whenever w is not v or v*",
             c6))

    def c7():
        elems = group_enumerate(cons.sl2_action(F), enum_cap)
        invol = sum(1 for g in elems if perm_order(g) == 2)
        order = q * (q * q - 1)
        return len(elems) == order and invol == 1, \
            {"order": len(elems), "involutions": invol}, {"order": order, "involutions": 1}

    add(_run("C7_unique_involution", "SL(2,q) has exactly one element of order 2", c7))
    return report


# Paley tournaments

def check_paley_claims(F: FiniteField, seed: int = DEFAULT_SEED,
                       enum_cap: int = ENUM_CAP) -> PropertyReport:
    T, A = cons.build_paley(F)
    q = F.q
    k = (q - 1) // 2
    report = PropertyReport("paley", q=q, seed=seed)
    add = report.claims.append

    def tournament():
        bad = sum(1 for u in range(q) for v in range(u + 1, q)
                  if T.has_arc(u, v) == T.has_arc(v, u))
        return bad == 0, {"pairs_failing": bad}, {"pairs_failing": 0}

    add(_run("tournament", "every pair of vertices is joined by exactly one arc", tournament))

    def regular():
        outs = sorted({T.out_degree(v) for v in range(q)})
        ins = sorted({T.in_degree(v) for v in range(q)})
        return outs == [k] and ins == [k], {"out": outs, "in": ins}, {"out": [k], "in": [k]}

    add(_run("regular", "every vertex has (q-1)/2 in- and out-neighbours", regular))

    def affine():
        ok = is_transitive_on(A, T.arcs)
        return ok, {"arcs": len(T.arcs), "orbits": pair_orbit_count(A, T.arcs)}, {"orbits": 1}

    add(_run("affine_arc_transitive", "the maps a -> x^2 a + c act transitively on arcs", affine))

    def translations():
        Tr = cons.translation_action(F)
        order = len(group_enumerate(Tr, enum_cap))
        auto = all(T.has_arc(g[u], g[v]) for g in Tr.generators for u, v in T.arcs)
        ok = is_transitive(Tr) and order == q and auto
        return ok, {"transitive": is_transitive(Tr), "order": order, "automorphisms": auto}, \
            {"transitive": True, "order": q, "automorphisms": True}

    add(_run("translations_regular", "translations a -> a + c act regularly on vertices",
             translations))
    return report


# X_q(n)

def check_xqn_claims(F: FiniteField, n: int, seed: int = DEFAULT_SEED) -> PropertyReport:
    """Structure of X_q(n) under W = SL(2,q) wr Sym(n).  n = 1 runs the X_q suite."""
    if n == 1:
        return check_xq_claims(F, seed=seed)
    X, W = cons.build_xqn(F, n)
    q = F.q
    beta, alpha = cons.xqn_seed(n)
    a = X.vertex(alpha)
    plus, mixed, minus = a2_sets(X)
    report = PropertyReport("xqn", q=q, n=n, seed=seed)
    add = report.claims.append
    add_all = report.claims.extend

    add_all(check_wedge_transitive(X, W))

    def a2plus_hamming():
        dists = sorted({hamming(X.labels[u], X.labels[v]) for u, v in plus.pairs})
        return dists == [2], dists, [2]

    add(_run("a2plus_hamming",
             "non-adjacent pairs sharing an out-neighbour differ in exactly two coordinates",
             a2plus_hamming))

    def arcs_hamming():
        dists = sorted({hamming(X.labels[u], X.labels[v]) for u, v in X.arcs})
        return dists == [1], dists, [1]

    add(_run("arcs_hamming", "adjacent vertices differ in exactly one coordinate", arcs_hamming))

    def in_alpha():
        B = cons.borel_stabilizer_generators(F)
        block = [B.labels[i] for i in orbit(B, B.index_of(cons.OrbitClass(0, 1)))]
        one = cons.OrbitClass(1, 0)
        union = set()
        sizes = []
        for i in range(n):
            part = {X.vertex(tuple(x if j == i else one for j in range(n))) for x in block}
            sizes.append(len(part))
            union |= part
        got = set(neighbors(X, a, "in"))
        ok = len(got) == n * q and got == union and sum(sizes) == len(union)
        return ok, {"in_degree": len(got), "block_sizes": sizes, "matches_union": got == union}, \
            {"in_degree": n * q, "block_sizes": [q] * n, "matches_union": True}

    add(_run("in_neighbourhood_alpha",
             "in(alpha) is the union of n coordinate blocks, each a stabilizer orbit of size q",
             in_alpha))

    def o_iso():
        f = cons.tuple_map(F, cons.o_matrix(F), n)
        return check_map_is_isomorphism(X, opp(X), f), True, True

    add(_run("o_opp_isomorphism",
             "coordinate-wise v -> v^o is an isomorphism onto the opposite digraph", o_iso))

    def a2minus():
        ok = is_transitive_on(W, minus.pairs)
        return ok, {"pairs": len(minus), "orbits": pair_orbit_count(W, minus.pairs)}, \
            {"orbits": 1}

    add(_run("a2minus_transitive",
             "W is transitive on non-adjacent pairs sharing an in-neighbour", a2minus))
    add(check_hamming_preserved(W, seed))

    report.info = {
        "a2plus": {"pairs": len(plus), "w_orbits": pair_orbit_count(W, plus.pairs)},
        "a2mixed": {"pairs": len(mixed), "w_orbits": pair_orbit_count(W, mixed.pairs)},
        "a2minus": {"pairs": len(minus), "w_orbits": pair_orbit_count(W, minus.pairs)},
    }
    return report


# Hamming graphs

def check_hamming_claims(m: int, n: int, complement: bool = False,
                         seed: int = DEFAULT_SEED) -> PropertyReport:
    G = cons.build_hamming(m, n, complement)
    W = cons.hamming_action(m, n)
    family = "hamming-complement" if complement else "hamming"
    report = PropertyReport(family, m=m, n=n, seed=seed)
    want = (m - 1) ** 2 if complement else n * (m - 1)

    def valency():
        degs = sorted({G.out_degree(v) for v in range(G.n)})
        return degs == [want] and G.undirected, {"degrees": degs, "undirected": G.undirected}, \
            {"degrees": [want], "undirected": True}

    report.claims.append(_run("valency", "regular of the expected valency, symmetric arc set",
                              valency))
    report.claims.extend(check_wedge_transitive(G, W))
    report.claims.append(check_hamming_preserved(W, seed))
    return report
