import pytest

from chromapoly.counting import brute_count_at
from chromapoly.graphs import complete_graph, join, path_graph
from chromapoly.identities import REGISTRY, Bounds, run_all, run_identity
from chromapoly.properties import harmonious_property, proper_property


def test_all_identities_pass_default_bounds():
    results = run_all(seed=7)
    assert len(results) == 12
    failed = [r.name for r in results if not r.passed]
    assert failed == []
    assert {r.name for r in results} == set(REGISTRY)


def test_degenerate_bounds():
    results = run_all(Bounds(max_n=1, max_join=1, samples=4), seed=1)
    assert all(r.passed for r in results)


def test_seeded_rerun_is_identical():
    a = [r.as_json_dict() for r in run_all(Bounds(samples=6), seed=3)]
    b = [r.as_json_dict() for r in run_all(Bounds(samples=6), seed=3)]
    assert a == b
    c = [r.as_json_dict() for r in run_all(Bounds(samples=6), seed=3, workers=3)]
    assert a == c


def test_join_shift_spot_value():
    # joining one universal vertex to a single edge makes a triangle
    p2 = path_graph(2)
    lhs = brute_count_at(join(p2, complete_graph(1)), proper_property(), 3)
    rhs = 3 * brute_count_at(p2, proper_property(), 2)
    assert lhs == rhs == 6
    assert run_identity("join_shift", Bounds(samples=6), seed=2).passed


def test_harm_subdivision_spot_value():
    # the subdivision-plus-clique graph of a single edge is the 3-vertex path
    harm = harmonious_property()
    sk2 = path_graph(3)
    assert brute_count_at(sk2, harm, 3) == 6
    assert brute_count_at(complete_graph(2), proper_property(), 2) * 3 == 6
    assert run_identity("harm_subdivision_counts", Bounds(samples=6), seed=2).passed


def test_convex_cocircuit_spot_value():
    res = run_identity("convex_cocircuit", Bounds(samples=8), seed=5)
    assert res.passed and res.instances == 8


def test_unknown_identity():
    with pytest.raises(ValueError):
        run_identity("no_such_identity")


def test_witness_on_forced_failure():
    # drive the generic runner with a deliberately false comparison to make
    # sure failures carry a shrunk witness
    import random
    from chromapoly.identities import _poly_identity

    def sides(g):
        yield g.n, g.n + 1

    res = _poly_identity("broken", Bounds(samples=2), random.Random(0), sides)
    assert not res.passed
    assert res.witness is not None
    assert "graph" in res.witness and res.witness["lhs"] == "0"


def test_stretch_identity_notes_restriction():
    res = run_identity("stretch", Bounds(samples=6), seed=4)
    assert res.passed
    assert "bridgeless" in res.note
