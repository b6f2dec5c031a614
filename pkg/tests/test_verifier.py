"""Exhaustive and sampled validity checking, catalog runs, witnesses."""

import pytest

from relatives.catalog import CatalogEntry, catalog_entry, load_catalog, run_catalog
from relatives.errors import RelativesError
from relatives.parser import parse_term
from relatives.relation import Relation
from relatives.verifier import (
    CheckConfig,
    Claim,
    CounterExample,
    SampledClean,
    Valid,
    check_exhaustive,
    check_sampled,
    check_up_to,
    exhaustive_sizes,
    find_strictness_witness,
)


def rel(n, *pairs):
    return Relation.from_pairs(n, pairs)


REFORM = "b <= c & (a;b <= c -> a;(a;b) <= c) -> a_0;b <= c"


# -- claims ---------------------------------------------------------------


def test_claim_orders_variables():
    claim = Claim.parse("c;b <= a")
    assert claim.free_vars == ("a", "b", "c")
    with pytest.raises(ValueError):
        Claim(claim.formula, ("c", "b", "a"))


# -- exhaustive checking ----------------------------------------------------


def test_check_exhaustive_valid():
    assert check_exhaustive(Claim.parse("a;1 <= 1"), 3) == Valid((3,))
    assert isinstance(check_exhaustive(Claim.parse("a = a"), 2), Valid)


def test_reform_counterexample_canonical_first():
    verdict = check_exhaustive(Claim.parse(REFORM), 2)
    assert isinstance(verdict, CounterExample)
    assert verdict.n == 2
    assert verdict.assignment == {
        "a": rel(2, (0, 1)),
        "b": rel(2, (1, 0)),
        "c": rel(2, (1, 0)),
    }


def test_engines_agree():
    for text in ("a;1 <= 1", REFORM, "a;bc <= (a;b)(a;c)", "a <= b"):
        claim = Claim.parse(text)
        for n in (1, 2):
            assert check_exhaustive(claim, n, engine="vector") == check_exhaustive(
                claim, n, engine="stream"
            )
    with pytest.raises(ValueError):
        check_exhaustive(Claim.parse("a = a"), 2, engine="warp")


def test_counterexample_must_falsify():
    claim = Claim.parse("a <= 0")
    with pytest.raises(RelativesError):
        CounterExample(2, {"a": rel(2)}, claim.formula)  # empty a satisfies it


# -- sampling ------------------------------------------------------------------


def test_sampling_is_deterministic():
    claim = Claim.parse("(b <= c) <= (a;b <= a;c)")
    v1 = check_sampled(claim, 4, 300, seed=42)
    v2 = check_sampled(claim, 4, 300, seed=42)
    assert v1 == v2 == SampledClean((4,), (300,), 42)


def test_sampling_finds_counterexamples():
    verdict = check_sampled(Claim.parse("a <= 0"), 2, 1000, seed=0)
    assert isinstance(verdict, CounterExample)


def test_sampling_rejects_zero_count():
    with pytest.raises(ValueError):
        check_sampled(Claim.parse("a = a"), 2, 0, seed=0)


# -- size budgeting --------------------------------------------------------------


def test_exhaustive_sizes_respects_bit_budget():
    three_vars = Claim.parse("a;b <= c")
    assert exhaustive_sizes(three_vars, 3) == [1, 2, 3]  # 3*9 = 27 bits
    four_vars = Claim.parse("a;b <= c + d")
    assert exhaustive_sizes(four_vars, 3) == [1, 2]  # 4*9 > 27 bits


def test_check_up_to():
    claim = Claim.parse("a;1 <= 1")
    verdict, sampled = check_up_to(claim, CheckConfig(max_exhaustive_size=2))
    assert verdict == Valid((1, 2)) and sampled is None
    verdict, sampled = check_up_to(
        claim, CheckConfig(max_exhaustive_size=2, sample_sizes=((3, 50),), seed=9)
    )
    assert verdict == Valid((1, 2))
    assert sampled == SampledClean((3,), (50,), 9)
    bad, _ = check_up_to(Claim.parse(REFORM), CheckConfig(max_exhaustive_size=2))
    assert isinstance(bad, CounterExample)


# -- strictness witnesses ----------------------------------------------------------


def test_strictness_witness_for_meet_subdistribution():
    lhs = parse_term("a;bc")
    rhs = parse_term("(a;b)(a;c)")
    witness = find_strictness_witness(lhs, rhs, 2)
    assert witness == {
        "a": rel(2, (0, 0), (0, 1)),
        "b": rel(2, (0, 0)),
        "c": rel(2, (1, 0)),
    }


def test_strictness_witness_none_and_trivial():
    assert find_strictness_witness(parse_term("a"), parse_term("a"), 2) is None
    assert find_strictness_witness(parse_term("0"), parse_term("a"), 1) == {
        "a": rel(1, (0, 0))
    }


# -- catalog --------------------------------------------------------------------


def test_catalog_loads_and_parses():
    entries = load_catalog()
    ids = [e.id for e in entries]
    assert ids == ["D22", "D23", "D23T", "D24", "D24T", "D36", "D37",
                   "D38", "D39", "D58", "D59", "REFORM"]
    for e in entries:
        assert isinstance(e, CatalogEntry)
        assert e.expected in ("valid", "invalid", "definition")
        assert e.settheory
    with pytest.raises(KeyError):
        catalog_entry("D999")


def test_run_catalog_matches_expectations():
    report = run_catalog(CheckConfig(max_exhaustive_size=2))
    assert report.all_match
    by_id = {r.entry.id: r for r in report.results}
    assert isinstance(by_id["D59"].verdict, Valid)
    assert isinstance(by_id["REFORM"].verdict, CounterExample)
    assert by_id["D36"].verdict == Valid((1, 2))  # consistency check verdict


def test_run_catalog_size_one_all_clean():
    report = run_catalog(CheckConfig(max_exhaustive_size=1))
    for res in report.results:
        if res.entry.expected != "invalid":
            assert isinstance(res.verdict, Valid)
    # the reformulation needs two elements to fail, so size 1 cannot match
    assert not run_catalog(CheckConfig(max_exhaustive_size=1)).all_match


def test_run_catalog_reports_are_reproducible():
    cfg = CheckConfig(max_exhaustive_size=2, sample_sizes=((3, 25),), seed=5)
    assert run_catalog(cfg) == run_catalog(cfg)
