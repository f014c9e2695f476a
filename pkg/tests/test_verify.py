from __future__ import annotations

import pytest

from statusindex import (
    DEFAULT_SEED,
    DEMO_TAG,
    ERRATA,
    FamilySpec,
    Graph,
    VerificationCase,
    VerificationReport,
    default_grid,
    demo_graph,
    random_connected_graph,
    random_corpus,
    verify_family,
    verify_grid,
    verify_identities,
    verify_random_suite,
)
from statusindex.verify import fixture_errata, registered_erratum


def rows_by_index(report):
    return {c.index_name: c for c in report.sorted_cases()}


class TestErratumRegistry:
    def test_closed_form_entries(self):
        assert registered_erratum("hypercube", "s1_co") is not None
        assert registered_erratum("hypercube", "s2_co") is not None
        assert registered_erratum("kneser", "s2_co") is not None
        assert registered_erratum("kneser", "s1_co") is None
        assert registered_erratum("intersection", "s1") is None
        assert registered_erratum("nanotorus", "s2_co") is None

    def test_fixture_entry(self):
        entries = fixture_errata(DEMO_TAG)
        assert len(entries) == 1
        assert entries[0].index == "s1_co"
        assert entries[0].printed_value == 11

    def test_registry_is_exactly_four_entries(self):
        assert len(ERRATA) == 4


class TestVerifyFamily:
    def test_petersen_corrected_all_match(self):
        report = verify_family(FamilySpec.kneser(5, 2))
        rows = rows_by_index(report)
        assert report.ok
        assert {name: row.oracle for name, row in rows.items()} == {
            "sigma": 15, "wiener": 75, "s1": 450, "s2": 3375,
            "s1_co": 900, "s2_co": 6750,
        }
        assert all(row.match for row in rows.values())

    def test_hypercube_as_printed_flags_registered_errata(self):
        report = verify_family(FamilySpec.hypercube(2), mode="as_printed")
        rows = rows_by_index(report)
        assert rows["s1"].match and rows["s2"].match
        assert not rows["s1_co"].match and rows["s1_co"].registered_erratum
        assert not rows["s2_co"].match and rows["s2_co"].registered_erratum
        assert rows["s1_co"].formula == -16 and rows["s1_co"].oracle == 16
        assert rows["s2_co"].formula == 80 and rows["s2_co"].oracle == 32
        assert report.ok  # registered errata are not hard failures

    def test_complete_intersection_branch(self):
        report = verify_family(FamilySpec.intersection(3, 2))
        rows = rows_by_index(report)
        assert report.ok
        assert rows["s1_co"].oracle == 0 and rows["s2_co"].oracle == 0

    def test_nanotorus_orientation_exchange_is_noted_not_failed(self):
        report = verify_family(FamilySpec.nanotorus(4, 2))
        assert report.ok
        for row in report.sorted_cases():
            assert row.match
            assert "parameter exchange" in row.note

    def test_nanotorus_direct_match_has_no_note(self):
        report = verify_family(FamilySpec.nanotorus(2, 4))
        assert report.ok
        assert all(row.note == "" for row in report.sorted_cases())

    def test_rejects_family_without_closed_forms(self):
        with pytest.raises(ValueError, match="no closed forms"):
            verify_family(FamilySpec.cycle(5))

    def test_rejects_unknown_mode(self):
        with pytest.raises(ValueError, match="mode"):
            verify_family(FamilySpec.hypercube(2), mode="printed")


class TestVerifyGrid:
    def test_corrected_grid_is_clean(self):
        report = verify_grid("corrected")
        assert report.ok
        summary = report.summary()
        assert summary["cases"] == summary["passed"] == 27 * 6
        assert summary["hard_failures"] == 0

    def test_as_printed_grid_fails_only_on_registered_errata(self):
        report = verify_grid("as_printed")
        assert report.ok
        mismatches = {(c.case_id, c.index_name) for c in report.errata_cases()}
        families = {case.split("(")[0] for case, _ in mismatches}
        assert families == {"hypercube", "kneser"}
        indices = {index for _, index in mismatches}
        assert indices == {"s1_co", "s2_co"}
        # every registered closed-form erratum shows up somewhere on the grid
        assert ("hypercube(n=2)", "s1_co") in mismatches
        assert ("hypercube(n=2)", "s2_co") in mismatches
        assert ("kneser(p=5, k=2)", "s2_co") in mismatches


class TestVerifyIdentities:
    def test_demo_graph_with_fixture_tag(self):
        report = verify_identities(demo_graph(), case_id="demo5", tag=DEMO_TAG)
        rows = rows_by_index(report)
        assert rows["identity.s1_co"].oracle == 22 and rows["identity.s1_co"].match
        assert rows["identity.s2_co"].oracle == 60 and rows["identity.s2_co"].match
        # diameter 2: all four degree-based formulas apply
        for name in (
            "diam2_zagreb.s1_co", "diam2_zagreb.s2_co",
            "diam2_zagreb_co.s1_co", "diam2_zagreb_co.s2_co",
        ):
            assert rows[name].match
        published = rows["published.s1_co"]
        assert published.formula == 11 and published.oracle == 22
        assert not published.match and published.registered_erratum
        assert report.ok  # the registered mismatch is not a hard failure

    def test_demo_graph_complement_is_disconnected_so_no_bound_rows(self):
        report = verify_identities(demo_graph())
        assert not any(
            c.index_name.startswith("complement_bound") for c in report.sorted_cases()
        )

    def test_p4_bound_rows(self):
        g = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
        rows = rows_by_index(verify_identities(g))
        assert rows["complement_bound.s1"].formula == 26
        assert rows["complement_bound.s1"].oracle == 28
        assert rows["complement_bound.s1"].match  # bound holds strictly
        assert rows["complement_bound.equality_iff"].oracle == 0
        assert rows["complement_bound.equality_iff"].match

    def test_large_diameter_graph_has_no_diam2_rows(self):
        g = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
        report = verify_identities(g)
        assert not any("diam2" in c.index_name for c in report.sorted_cases())


class TestRandomGraphs:
    def test_deterministic_for_a_seed(self):
        a = random_connected_graph(8, 0.4, seed=1)
        b = random_connected_graph(8, 0.4, seed=1)
        assert a == b

    def test_different_seeds_differ_somewhere(self):
        graphs = {random_connected_graph(8, 0.4, seed=s).adjacency for s in range(20)}
        assert len(graphs) > 1

    def test_probability_one_gives_complete_graph(self):
        g = random_connected_graph(2, 1.0, seed=99)
        assert g.m == 1

    def test_always_connected(self):
        from statusindex import transmission_profile

        for seed in range(30):
            g = random_connected_graph(9, 0.15, seed=seed)
            transmission_profile(g)  # raises if disconnected

    def test_parameter_validation(self):
        with pytest.raises(ValueError):
            random_connected_graph(1, 0.5, seed=0)
        with pytest.raises(ValueError):
            random_connected_graph(5, 0.0, seed=0)
        with pytest.raises(ValueError):
            random_connected_graph(5, 1.5, seed=0)

    def test_corpus_is_deterministic(self):
        a = random_corpus(count=25, seed=DEFAULT_SEED)
        b = random_corpus(count=25, seed=DEFAULT_SEED)
        assert a == b
        assert len(a) == 25

    def test_dense_corpus_has_small_diameters(self):
        from statusindex import transmission_profile

        corpus = random_corpus(count=40, seed=DEFAULT_SEED, dense=True)
        small = sum(transmission_profile(g).diameter <= 2 for g in corpus)
        assert small > 20


class TestVerifyRandomSuite:
    def test_small_suite_is_clean(self):
        report = verify_random_suite(count=30, seed=DEFAULT_SEED)
        assert report.ok
        assert report.summary()["hard_failures"] == 0
        identity_rows = [
            c for c in report.sorted_cases() if c.index_name.startswith("identity.")
        ]
        assert len(identity_rows) == 60


class TestVerificationReport:
    def test_summary_and_hard_failures(self):
        cases = [
            VerificationCase("a", "s1", 1, 1, "corrected", True),
            VerificationCase("a", "s2", 1, 2, "corrected", False),
            VerificationCase("b", "s1_co", 3, 4, "as_printed", False, True),
        ]
        report = VerificationReport(cases=cases)
        assert report.summary() == {
            "cases": 3, "passed": 1, "registered_errata": 1, "hard_failures": 1,
        }
        assert not report.ok
        assert [c.case_id for c in report.hard_failures()] == ["a"]

    def test_sorted_cases_order(self):
        cases = [
            VerificationCase("b", "s1", 0, 0, "corrected", True),
            VerificationCase("a", "s2", 0, 0, "corrected", True),
            VerificationCase("a", "s1", 0, 0, "corrected", True),
        ]
        report = VerificationReport(cases=cases)
        assert [(c.case_id, c.index_name) for c in report.sorted_cases()] == [
            ("a", "s1"), ("a", "s2"), ("b", "s1"),
        ]

    def test_default_grid_composition(self):
        grid = default_grid()
        kinds = [spec.kind for spec in grid]
        assert kinds.count("hypercube") == 10
        assert kinds.count("kneser") == 5
        assert kinds.count("intersection") == 6
        assert kinds.count("nanotorus") == 6
