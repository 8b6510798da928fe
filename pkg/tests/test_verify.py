"""Checks on the sweep harness itself, small enough to run in seconds."""

from akblocks.verify import (
    LemmaResult,
    SweepGrid,
    _classical_e_weight,
    check_mahonian,
    format_results,
    results_to_json,
    run_all,
)


def test_grid_charges_pinned():
    g = SweepGrid()
    assert g.charges(1, 3) == ((0,),)
    assert g.charges(2, 3) == ((0, 0), (0, 1))
    assert g.charges(3, 2) == ((0, 0, 0), (1, 0, 0))
    assert g.charges(3, 4) == ((0, 0, 0), (1, 0, 2))


def test_classical_stripper_hand_cases():
    assert _classical_e_weight((2,), 2) == 1
    assert _classical_e_weight((1, 1), 2) == 1
    assert _classical_e_weight((2, 1), 2) == 0  # hooks 3,1,1: a 2-core
    assert _classical_e_weight((2, 2), 2) == 2
    assert _classical_e_weight((3, 1), 3) == 0  # hooks 4,2,1,1: a 3-core
    assert _classical_e_weight((4, 1), 3) == 1
    assert _classical_e_weight((1,), 2) == 0
    assert _classical_e_weight((), 5) == 0


def test_result_flags_and_rendering():
    ok = LemmaResult("alpha", 10, ())
    bad = LemmaResult("beta", 3, ("first detail",))
    assert ok.ok and not bad.ok
    text = format_results([ok, bad])
    assert "alpha" in text and "FAIL" in text and "first detail" in text
    assert text.endswith("1 failed\n")


def test_results_json_shape():
    grid = SweepGrid(max_n=2, levels=(1,), es=(2,), branch_n=2, oracle_n=2)
    results = run_all(grid)
    payload = results_to_json(results, grid)
    assert payload["schema"] == 1
    assert payload["grid"]["max_n"] == 2
    assert {row["lemma"] for row in payload["results"]} >= {
        "beta_roundtrip",
        "hub_sum_law",
        "block_bijection",
    }
    assert all(row["ok"] for row in payload["results"])


def test_mahonian_sweep_alone():
    for res in check_mahonian(SweepGrid()):
        assert res.ok and res.instances == 9
