import json

import pytest

from romandom import checks
from romandom.checks import CHECK_IDS, REGISTRY, Limits, run_suite

EXPECTED_IDS = {
    "EQ1", "LEM-ON", "LEM-MINUS", "LEM-MINUSE", "THM-R", "THM-UN",
    "THM-DIFF-I", "THM-DIFF-II", "OBS-DISC", "OBS-PN3", "REM-E1",
    "PROP-3V2", "PROP-02", "COR-UVRBON", "COR-UVRTREE", "OBS-SABC",
    "COR-UNILAB", "OBS-EQUI", "THM-MAIN", "COR-SB", "COR-VDEL",
    "COR-EDEL", "PROP-T1", "MINEDGE-I", "MINEDGE-II", "MINEDGE-III",
}


def test_registry_covers_every_statement():
    assert set(CHECK_IDS) == EXPECTED_IDS
    assert len(CHECK_IDS) == len(set(CHECK_IDS))
    for check in REGISTRY.values():
        assert check.statement and check.domain


def test_eq1_instance_count():
    # 1 + 1 + 2 + 6 + 21 connected graphs through order 5
    report = run_suite("EQ1", Limits(graphs_max_n=5))
    assert report.total == 31
    assert report.all_passed


def test_unknown_suite_rejected():
    with pytest.raises(ValueError):
        run_suite("NOPE")
    with pytest.raises(ValueError):
        run_suite("all", Limits(graphs_max_n=9))


def test_small_full_suite_passes():
    report = run_suite("all", Limits(trees_max_n=7, graphs_max_n=4, unicyclic_n=4))
    assert report.total > 200
    assert report.all_passed, [
        (r.check_id, r.instance, r.witness) for r in report.failures
    ]


def test_failures_always_carry_witnesses():
    report = run_suite("all", Limits(trees_max_n=6, graphs_max_n=4, unicyclic_n=4),
                       fault="gamma-r-plus-one")
    assert report.failures
    for r in report.failures:
        assert r.witness is not None


def test_fault_injection_is_detected():
    # the forced off-by-one in the Roman solver must trip at least one check
    report = run_suite("THM-DIFF-I", Limits(trees_max_n=5, graphs_max_n=4),
                       fault="gamma-r-plus-one")
    assert not report.all_passed
    # and the solver is restored afterwards
    clean = run_suite("THM-DIFF-I", Limits(trees_max_n=5, graphs_max_n=4))
    assert clean.all_passed


def test_reports_are_deterministic():
    limits = Limits(trees_max_n=7, graphs_max_n=4, unicyclic_n=4)
    first = run_suite("all", limits)
    second = run_suite("all", limits)
    as_json = lambda rep: [json.dumps(r.to_json_dict(), sort_keys=True)
                           for r in rep.results]
    assert as_json(first) == as_json(second)


def test_sampled_flag_on_order_seven_edges():
    report = run_suite("LEM-MINUSE", Limits(graphs_max_n=5))
    assert all(not r.instance.get("sampled") for r in report.results)


def test_minedge_checks_small_limits():
    report = run_suite("MINEDGE-II", Limits(graphs_max_n=5))
    assert report.total == 2 and report.all_passed
    report = run_suite("MINEDGE-I", Limits(trees_max_n=9))
    assert report.all_passed


def test_thm_main_instance_count_through_order_ten():
    # 1+2+3+6+11+23+47+106 free trees of orders 3..10
    report = run_suite("THM-MAIN", Limits(trees_max_n=10))
    assert report.total == 199
    assert report.all_passed


def test_smoke_run_at_minimum_limits():
    report = run_suite("all", Limits(trees_max_n=3, graphs_max_n=3, unicyclic_n=3))
    assert report.all_passed
    assert report.total > 0
    # the report is well formed: every result serializes
    for r in report.results:
        d = r.to_json_dict()
        assert d["check"] in REGISTRY and isinstance(d["ok"], bool)
