from __future__ import annotations

import json
import time

import pytest

from basesize.graphs import CorpusEntry, GraphCorpus, automorphism_group, cycle, disjoint_union, path, standard_corpus
from basesize.groups import Abelian, Dihedral, dpq_representation, natural_dihedral_action, regular_representation
from basesize.perm import PermutationGroup, from_cycles
from basesize.verify import (
    COVERAGE,
    EVIDENCE,
    FAIL,
    PASS,
    ClaimResult,
    SuiteConfig,
    check_abelian_theorem,
    check_corollary_orbit_pk,
    check_lemma_order_pk,
    check_orbit_stabilizer,
    check_primeorbits,
    check_prop_d15,
    check_prop_flipping,
    check_qstab_orbit,
    check_thm_3_not_in_d,
    format_report,
    report_json,
    run_paper_suite,
    suite_failed,
)


@pytest.fixture(scope="module")
def quick_results():
    t0 = time.perf_counter()
    res = run_paper_suite(SuiteConfig(quick=True))
    return res, time.perf_counter() - t0


def test_claim_line_format():
    r = ClaimResult("X", 3, PASS, "fine")
    assert r.line() == "CLAIM X PASS checked=3 fine"


@pytest.mark.parametrize("g", [dpq_representation(3, 5), regular_representation(Abelian((8,))),
                               natural_dihedral_action(9)])
def test_group_property_checks_pass(g):
    for check in (check_lemma_order_pk, check_orbit_stabilizer, check_qstab_orbit, check_primeorbits):
        r = check(g)
        assert r.status == PASS and r.instances_checked >= 1


def test_qstab_check_on_mixed_cycle_type():
    # <(0 1)(2 3 4)> has an order-3 element fixing the size-2 orbit and an involution
    # fixing the size-3 orbit
    g = PermutationGroup(5, [from_cycles(5, [(0, 1), (2, 3, 4)])])
    assert check_qstab_orbit(g).status == PASS


def test_corollary_examples():
    assert check_corollary_orbit_pk(Dihedral(9), 20).status == PASS
    assert "bound=2" in check_corollary_orbit_pk(Dihedral(9), 20).detail
    assert "bound=3" in check_corollary_orbit_pk(Dihedral(10), 24).detail
    r = check_corollary_orbit_pk(Abelian((27,)), 30)
    assert r.status == PASS and "bound=1" in r.detail


def test_abelian_theorem_examples():
    r = check_abelian_theorem([[2, 2]], 8)
    assert r.status == PASS and "B_N={1,2}" in r.detail
    r = check_abelian_theorem([[2, 2, 2]], 16)
    assert r.status == PASS and "B_N={1,2,3}" in r.detail
    r = check_abelian_theorem([[4, 3]], 16)
    assert r.status == PASS and "B_N={1,2}" in r.detail


def test_abelian_theorem_below_full_budget_only_checks_containment():
    # the regular action needs 8 points, so on 6 points only {2,3} is reachable
    r = check_abelian_theorem([[2, 2, 2]], 6)
    assert r.status == PASS and "B_N={2,3}" in r.detail


@pytest.mark.parametrize("p,q", [(3, 5), (3, 7), (5, 7)])
def test_prop_d15(p, q):
    r = check_prop_d15(p, q)
    assert r.status == PASS
    n = p + q
    assert r.instances_checked == n * (n - 1) // 2
    assert "printed" in r.detail


def test_prop_d15_printed_reading_fails_loudly():
    r = check_prop_d15(3, 5, reading="printed")
    assert r.status == FAIL and "not D15" in r.detail


def test_flipping_examples():
    c15 = standard_corpus(Dihedral(15))
    assert check_prop_flipping(c15).status == PASS
    aut = automorphism_group(cycle(15))
    only_cycle = GraphCorpus(Dihedral(15), [CorpusEntry(cycle(15), "C15", aut, 2)])
    assert check_prop_flipping(only_cycle).status == PASS


def test_thm3_is_evidence_and_discriminates():
    r = check_thm_3_not_in_d(standard_corpus(Dihedral(15)))
    assert r.status == EVIDENCE
    # a corpus entry with determining number 3 must be reported as a counterexample
    g = disjoint_union(path(2), cycle(15))
    fake = GraphCorpus(Dihedral(15), [CorpusEntry(g, "fake", automorphism_group(g), 3)])
    assert check_thm_3_not_in_d(fake).status == FAIL
    with pytest.raises(ValueError):
        check_thm_3_not_in_d(GraphCorpus(Dihedral(15)))
    assert check_thm_3_not_in_d(standard_corpus(Dihedral(21), 70)).status == EVIDENCE
    assert 3 in standard_corpus(Dihedral(6)).determining_numbers()


def test_quick_suite(quick_results):
    res, elapsed = quick_results
    assert elapsed < 10
    assert [r.claim_id for r in res] == [cid for cid, _ in COVERAGE]
    status = {r.claim_id: r.status for r in res}
    assert status.pop("THM-3-NOT-IN-D") == EVIDENCE
    assert set(status.values()) == {PASS}
    assert all(r.instances_checked >= 1 for r in res)
    assert not suite_failed(res)


def test_report_is_deterministic(quick_results):
    res, _ = quick_results
    again = run_paper_suite(SuiteConfig(quick=True))
    assert format_report(res) == format_report(again)
    assert report_json(res) == report_json(again)
    data = json.loads(report_json(res))
    assert {d["claim_id"] for d in data} == {cid for cid, _ in COVERAGE}
    text = format_report(res)
    assert all(f"COVER {cid} " in text for cid, _ in COVERAGE)


def test_budget_failure_surfaces_as_fail():
    res = run_paper_suite(SuiteConfig(quick=True, element_budget=10))
    assert suite_failed(res)
    assert any("budget" in r.detail for r in res if r.status == FAIL)
    assert all(r.status != PASS or r.instances_checked >= 1 for r in res)


def test_printed_reading_suite_flags_formula():
    res = run_paper_suite(SuiteConfig(quick=True, dpq_reading="printed"))
    d15 = next(r for r in res if r.claim_id == "PROP-D15")
    assert d15.status == FAIL and "printed" in d15.detail
