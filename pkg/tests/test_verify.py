import json
import random

import pytest

from symdig import constructions as cons
from symdig import verify
from symdig.digraph import Digraph
from symdig.errors import InvalidParameterError
from symdig.finfield import field_of_order
from symdig.permaction import GeneratedAction, transposition

XQ_CLAIMS = [
    "vertex_count", "valency", "out_neighbours_10", "in_neighbours_10", "unique_non_neighbour",
    "z_swaps_neighbourhoods", "a2plus_empty", "o_opp_isomorphism", "center_quotient_complete",
    "iota_maps_in_neighbourhoods",
]


@pytest.fixture(scope="module")
def F7():
    return field_of_order(7)


@pytest.mark.parametrize("q", [7, 11, 19, 23, 27])
def test_xq_suite_passes(q):
    report = verify.check_xq_claims(field_of_order(q))
    assert [c.id for c in report.claims] == XQ_CLAIMS
    assert report.passed, report.failures()


@pytest.mark.parametrize("q", [3, 5, 9, 13])
def test_xq_suite_rejects_bad_q(q):
    with pytest.raises(InvalidParameterError):
        verify.check_xq_claims(field_of_order(q))


@pytest.mark.parametrize("q", [7, 11])
def test_proposition_suite(q):
    report = verify.check_proposition_claims(field_of_order(q))
    assert report.passed, report.failures()
    k = (q - 1) // 2
    assert report.claim("C1_out_tournament").measured["out"] == [k]
    assert report.claim("C2_in_counts").measured == [[k, k]]


def test_unique_involution_counts(F7):
    c7 = verify.check_proposition_claims(F7).claim("C7_unique_involution")
    assert c7.measured == {"order": 336, "involutions": 1}


@pytest.mark.parametrize("q", [7, 11, 19, 27])
def test_paley_suite(q):
    report = verify.check_paley_claims(field_of_order(q))
    assert report.passed, report.failures()


def test_xqn_suite(F7):
    report = verify.check_xqn_claims(F7, 2)
    assert report.passed, report.failures()
    assert report.claim("a2plus_hamming").measured == [2]
    assert report.claim("in_neighbourhood_alpha").measured["block_sizes"] == [7, 7]
    assert report.info["a2plus"] == {"pairs": 25088, "w_orbits": 1}
    assert report.info["a2minus"] == {"pairs": 25088, "w_orbits": 1}
    assert report.info["a2mixed"]["w_orbits"] == 2


def test_xqn_rank_one_delegates(F7):
    assert [c.id for c in verify.check_xqn_claims(F7, 1).claims] == XQ_CLAIMS


@pytest.mark.parametrize("m,n,complement", [(3, 2, False), (4, 2, False), (3, 3, False),
                                            (3, 2, True), (4, 2, True)])
def test_hamming_suite(m, n, complement):
    report = verify.check_hamming_claims(m, n, complement)
    assert report.passed, report.failures()
    assert report.claim("hamming_preserved").measured["mode"] == "full"


def test_vacuous_a2plus_is_flagged(F7):
    X = cons.build_xq(F7)
    arc, a2 = verify.check_wedge_transitive(X, cons.sl2_action(F7))
    assert arc.passed and arc.warning is None
    assert a2.passed and a2.warning is not None
    assert a2.measured["pairs"] == 0


def test_corrupted_generator_breaks_hamming_preservation():
    W = cons.hamming_action(3, 2)
    i, j = W.index_of((0, 0)), W.index_of((0, 1))
    bad = W.with_generators(W.generators + (transposition(W.size, i, j),))
    assert verify.check_hamming_preserved(W).passed
    rec = verify.check_hamming_preserved(bad)
    assert not rec.passed and rec.measured["violations"] > 0


def test_hamming_preservation_sampling_mode():
    W = cons.hamming_action(4, 2)
    rec = verify.check_hamming_preserved(W, pair_cap=10, sample=500)
    assert rec.passed and rec.measured["mode"] == "sample"
    i, j = W.index_of((0, 0)), W.index_of((0, 1))
    bad = W.with_generators((transposition(W.size, i, j),))
    assert not verify.check_hamming_preserved(bad, pair_cap=10, sample=2000).passed


def test_wedge_check_needs_matching_domain(F7):
    with pytest.raises(InvalidParameterError):
        verify.check_wedge_transitive(Digraph(3, [(0, 1)]), cons.sl2_action(F7))


def _mutations(X, rng, count):
    arcs = sorted(X.arcs)
    non_arcs = [(u, v) for u in range(X.n) for v in range(X.n)
                if u != v and (u, v) not in X.arcs]
    out = []
    for _ in range(count):
        kind = rng.choice(["reverse", "delete", "add"])
        if kind == "reverse":
            u, v = rng.choice(arcs)
            new = (X.arcs - {(u, v)}) | {(v, u)}
        elif kind == "delete":
            new = X.arcs - {rng.choice(arcs)}
        else:
            new = X.arcs | {rng.choice(non_arcs)}
        out.append((kind, Digraph(X.n, new, labels=X.labels)))
    return out


def test_single_arc_mutations_are_detected(F7):
    X = cons.build_xq(F7)
    assert verify.check_xq_claims(F7, graph=X).passed
    for kind, Y in _mutations(X, random.Random(99), 20):
        report = verify.check_xq_claims(F7, graph=Y)
        assert not report.passed, kind


def test_report_json_is_deterministic(F7):
    a = verify.check_xqn_claims(F7, 2).to_json()
    b = verify.check_xqn_claims(F7, 2).to_json()
    assert a == b
    doc = json.loads(a)
    assert doc["instance"] == {"family": "xqn", "q": 7, "m": None, "n": 2}
    assert doc["seed"] == verify.DEFAULT_SEED and doc["pass"] is True
    assert all(c["millis"] is None for c in doc["claims"])
    timed = json.loads(verify.check_xqn_claims(F7, 2).to_json(timings=True))
    assert all(isinstance(c["millis"], float) for c in timed["claims"])


def test_summary_lines(F7):
    lines = verify.check_xq_claims(F7).summary_lines()
    assert len(lines) == len(XQ_CLAIMS) and all(s.startswith("PASS") for s in lines)


def test_pair_orbit_count():
    sym3 = GeneratedAction(3, (transposition(3, 0, 1), transposition(3, 1, 2)))
    pairs = {(a, b) for a in range(3) for b in range(3) if a != b}
    assert verify.pair_orbit_count(sym3, pairs) == 1
    assert verify.pair_orbit_count(sym3, set()) == 0
