# -*- coding: utf-8 -*-
import pytest

from adjunction import type_of
import suites
from suites import SUITES, run_suites

LIGHT = ["catalan", "known-matrices", "mat-adjunction", "kn-measure", "ln-identities", "projection",
         "embedding-coherence"]


def test_registry():
    assert set(LIGHT) <= set(SUITES)
    assert {"oracle", "independence", "braid", "nf-stability", "diagram-invariants",
            "round-trips", "kernel-search", "eta-soundness"} <= set(SUITES)


@pytest.mark.parametrize("name", LIGHT)
def test_light_suites_pass(name):
    result = run_suites([name], quick=True)[name]
    assert result["passed"], result["examples"]
    assert result["checks"] > 0
    assert result["failures"] == 0
    assert result["elapsed"] >= 0
    assert "sample_count" in result["resources"]


def test_oracle_quick():
    result = run_suites(["oracle"], quick=True)["oracle"]
    assert result["passed"], result["examples"]


@pytest.mark.parametrize("name", ["eta-soundness", "round-trips"])
def test_heavy_suites_quick(name):
    result = run_suites([name], quick=True)[name]
    assert result["passed"], result["examples"]
    assert result["checks"] > 0


def test_apart_pairs_share_a_type():
    for f, g in suites.APART_PAIRS:
        assert type_of(f) == type_of(g)


def test_seed_makes_runs_repeatable():
    a = run_suites(["nf-stability"], quick=True, seed=7)["nf-stability"]
    b = run_suites(["nf-stability"], quick=True, seed=7)["nf-stability"]
    assert a["checks"] == b["checks"]
    assert a["passed"] and b["passed"]


def test_unknown_suite():
    with pytest.raises(ValueError, match="unknown suite"):
        run_suites(["catalan", "nope"])


def test_crashing_suite_is_reported(monkeypatch):
    def boom(tally, rng, quick):
        tally.check(True, "first")
        raise RuntimeError("kaboom")

    monkeypatch.setitem(suites.SUITES, "boom", boom)
    result = run_suites(["boom"])["boom"]
    assert not result["passed"]
    assert result["checks"] == 1
    assert result["failures"] == 1
    assert result["examples"] == ["crashed: RuntimeError: kaboom"]


def test_failure_examples_are_capped(monkeypatch):
    def noisy(tally, rng, quick):
        for i in range(50):
            tally.check(False, f"case {i}")

    monkeypatch.setitem(suites.SUITES, "noisy", noisy)
    result = run_suites(["noisy"])["noisy"]
    assert result["failures"] == 50
    assert len(result["examples"]) == suites.MAX_EXAMPLES
    assert result["examples"][0] == "case 0"
