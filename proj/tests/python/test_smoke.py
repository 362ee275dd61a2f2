import json
import os
import pathlib

import pytest

import pairstab as ps

DATA = pathlib.Path(os.environ.get("PAIRSTAB_TEST_DATA", pathlib.Path(__file__).parents[1] / "data"))


def hexagon_triangle():
    edges = [(i, (i + 1) % 6) for i in range(6)] + [(0, 2), (2, 4), (0, 4)]
    return ps.Graph(6, edges)


def test_graph6_round_trip():
    g = ps.cycle(5)
    assert g.graph6() == "Dhc"
    assert ps.parse_graph6("Dhc") == g


def test_automorphism_orders():
    assert ps.automorphism_order(ps.cycle(7)) == 14
    assert ps.automorphism_order(ps.complete(5)) == 120


def test_compatibility():
    g = hexagon_triangle()
    assert [n for n in range(3, 13) if not ps.is_compatible(g, n)] == [3, 6]
    assert ps.length_sets(g) == [{3}] * 6


def test_verdicts():
    g = hexagon_triangle()
    assert ps.pair_stability(g, ps.complete(2))["kind"] == "stable"
    c3 = ps.pair_stability(g, ps.cycle(3))
    assert c3["kind"] == "nontrivially-unstable"
    assert c3["aut_product"] == 72


def test_worked_examples():
    results = ps.verify_worked_examples()
    assert len(results) == 12
    assert all(passed for _, passed, _ in results)


def test_twist():
    spec = json.loads((DATA / "twists" / "valid" / "k2-c4.json").read_text())
    assert ps.are_isomorphic(ps.twist(spec), ps.cycle(4))
    bad = json.loads((DATA / "twists" / "invalid" / "omega-alpha-equation.json").read_text())
    with pytest.raises(ps.InvalidInput):
        ps.twist(bad)


def test_errors():
    with pytest.raises(ps.InvalidInput):
        ps.parse_graph6("Dh")
    with pytest.raises(ValueError):
        ps.cycle(2)


def test_scan_is_deterministic():
    a = ps.scan(max_order=4, n_max=5, jobs=1)
    b = ps.scan(max_order=4, n_max=5, jobs=3)
    assert a == b
    assert a["summary"]["check_failures"] == []
