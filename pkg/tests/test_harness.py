import io
import json
import time

import pytest

from lambdapack import harness
from lambdapack.errors import ConstructionFailure, PreconditionError
from lambdapack.generators import FamilyRecipe, gen_net, gen_prism
from lambdapack.graph import complete_graph, cycle_graph
from lambdapack.graphio import to_graph6
from lambdapack.harness import (
    Campaign,
    Unit,
    check_ids,
    check_theorem,
    run_campaign,
    search_open,
    summarize,
    write_jsonl,
)
from lambdapack.report import ALGORITHM_BUG, CONFIRMED, COUNTEREXAMPLE, SEARCHED, SKIPPED, VerdictReport


def test_confirmed_and_hypothesis_failure():
    r = check_theorem("avoid-e", gen_prism())
    assert r.status == CONFIRMED and r.witness["units"] == 9
    r = check_theorem("avoid-e", gen_net())
    assert not r.hypothesis_check and r.conclusion_check is None


def test_aliases_resolve():
    r = check_theorem("G-Y", complete_graph(7))
    assert r.theorem == "G-Y" and r.status == CONFIRMED


def test_unknown_id_lists_valid_ids():
    with pytest.raises(PreconditionError, match="valid ids: .*avoid-e"):
        check_theorem("no-such-thing", gen_net())
    assert "p4-factor" in check_ids() and "A" in check_ids()


def test_report_rejects_conclusion_without_hypothesis():
    with pytest.raises(ValueError):
        VerdictReport("x", "E?", False, "no", True, CONFIRMED)
    with pytest.raises(ValueError):
        VerdictReport("x", "E?", True, "", None, "maybe")


def _failing(oracle_value):
    def fake(theorem, g, extras, cap):
        def boom():
            raise ConstructionFailure("planted failure", graph=g)
        return [Unit("planted", boom, lambda: oracle_value)]
    return fake


def test_adjudication_bug_when_oracle_holds(monkeypatch):
    monkeypatch.setattr(harness, "expand_units", _failing(True))
    r = check_theorem("avoid-e", gen_prism())
    assert r.status == ALGORITHM_BUG and r.witness["oracle"] == "claim holds"


def test_adjudication_counterexample_when_oracle_fails(monkeypatch):
    monkeypatch.setattr(harness, "expand_units", _failing(False))
    r = check_theorem("avoid-e", gen_prism())
    assert r.status == COUNTEREXAMPLE and r.witness["graph6"] == to_graph6(gen_prism())


def test_value_checks():
    assert check_theorem("2conclfr", cycle_graph(8)).status == CONFIRMED
    assert check_theorem("eb-bound", gen_net()).status == CONFIRMED
    assert check_theorem("A", gen_net()).status == CONFIRMED


def test_open_problem_never_confirms():
    k4 = complete_graph(4)
    r = search_open("pr3con", k4)
    assert r.status == SEARCHED and r.status != CONFIRMED
    assert not search_open("pr3con", cycle_graph(6)).hypothesis_check
    assert search_open("p4-factor", complete_graph(8)).status == SEARCHED


def test_campaign_order_and_summary():
    c = Campaign(["2conclfr", "pr3con"], recipes=[FamilyRecipe("cycle", {"n": n}) for n in (4, 5, 6)],
                 graph6=[to_graph6(complete_graph(4))])
    reports, summary = run_campaign(c)
    assert [(r["theorem"], r["manifest"].get("params", {}).get("n")) for r in reports[:2]] == [
        ("2conclfr", 4), ("pr3con", 4)]
    assert len(reports) == 8
    assert summary["note"] == "searched 1, none falsifying"
    assert summary["confirmed"] == 4


def test_parallel_matches_serial():
    recipes = [FamilyRecipe("clawfreeRandom", {"n": 9, "seed": s}) for s in range(6)]
    a, _ = run_campaign(Campaign(["2conclfr", "eb-bound"], recipes, seed=3, jobs=1))
    b, _ = run_campaign(Campaign(["2conclfr", "eb-bound"], recipes, seed=3, jobs=3))
    strip = lambda rs: [{k: v for k, v in r.items() if k != "timings"} for r in rs]
    assert strip(a) == strip(b)


def test_timeout_becomes_skipped(monkeypatch):
    def slow(g, extras, cap):
        time.sleep(5)
    monkeypatch.setitem(harness.CHECKS, "2conclfr", slow)
    reports, summary = run_campaign(Campaign(["2conclfr"], [FamilyRecipe("net", {})], timeout=0.2))
    assert reports[0]["status"] == SKIPPED and "timeout" in reports[0]["hypothesis_check"]["detail"]
    assert summary["skipped"] == 1


def test_crash_is_recorded_not_raised(monkeypatch):
    def crash(g, extras, cap):
        raise KeyError("boom")
    monkeypatch.setitem(harness.CHECKS, "2conclfr", crash)
    reports, _ = run_campaign(Campaign(["2conclfr"], [FamilyRecipe("net", {})]))
    assert reports[0]["status"] == ALGORITHM_BUG


def test_jsonl_and_summarize():
    reports, _ = run_campaign(Campaign(["2conclfr"], [FamilyRecipe("net", {})]))
    buf = io.StringIO()
    write_jsonl(reports, buf)
    back = [json.loads(x) for x in buf.getvalue().splitlines()]
    assert back == reports
    assert summarize(back)["hypothesis-failed"] == 1
