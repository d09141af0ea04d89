"""
Tests for the case engine: boundary formula, per-case searches and the aggregate.

Case runs use small scan ranges that still certify every tail; the full
default ranges are exercised by the slow tests.
"""

import pytest

from copolarity import axioms
from copolarity.cases import (
    CASE_IDS,
    FAMILY_SU3,
    FAMILY_SU3_REAL,
    FAMILY_TENSOR,
    FAMILY_U3,
    STATUS_MISMATCH,
    STATUS_PASS,
    TAG_EXACT_ONLY,
    TAG_POLAR,
    BoundaryDatum,
    CaseReport,
    FixedDim,
    ScanBounds,
    Survivor,
    boundary_dim_bound,
    normalize_case_id,
    parse_mode,
    solve_case,
    theorem_main,
)
from copolarity.config import get_config
from copolarity.errors import InputError
from copolarity.fixed_space import BoundMode, annihilator_fixed_dim
from copolarity.weights import GroupType

SMALL = ScanBounds(max_highest_weight=12, max_tensor_dim=12, max_irrep_weight=10,
                   diophantine_bound=1000, involution_check_dim=4)


@pytest.fixture(scope="module")
def paper_reports():
    return {case_id: solve_case(case_id, BoundMode.PAPER_BOUND, SMALL) for case_id in CASE_IDS}


@pytest.fixture(scope="module")
def exact_reports():
    return {case_id: solve_case(case_id, BoundMode.EXACT, SMALL) for case_id in CASE_IDS}


def params_of(report):
    return [(s.family, s.params) for s in report.survivors]


class TestBoundaryFormula:
    @pytest.mark.parametrize("fixed", [0, 4, 6])
    def test_copolarity_7_circle(self, fixed):
        assert boundary_dim_bound(BoundaryDatum(1, 7, 3, FixedDim.upper(fixed), group_rank=3)) == 6 + fixed

    @pytest.mark.parametrize("fixed", [0, 1, 4])
    def test_copolarity_8_circle(self, fixed):
        assert boundary_dim_bound(BoundaryDatum(1, 8, 2, FixedDim.upper(fixed))) == 8 + fixed

    def test_half_of_v(self):
        assert boundary_dim_bound(BoundaryDatum(0, 7, 2, FixedDim.half())) == 12
        assert boundary_dim_bound(BoundaryDatum(0, 9, 3, FixedDim.half())) == 14

    def test_codimension(self):
        assert BoundaryDatum(0, 8, 4, FixedDim.exact(5)).codimension == 5

    def test_sphere_dimension_checked(self):
        with pytest.raises(InputError):
            BoundaryDatum(2, 7, 3, FixedDim.upper(0))

    def test_normalizer_contains_a_torus(self):
        with pytest.raises(InputError):
            BoundaryDatum(1, 9, 2, FixedDim.upper(0), group_rank=3)

    def test_negative_dimension_rejected(self):
        with pytest.raises(InputError):
            boundary_dim_bound(BoundaryDatum(0, 2, 10, FixedDim.upper(0)))

    def test_fixed_dim_validation(self):
        with pytest.raises(InputError):
            FixedDim.upper(-1)
        with pytest.raises(InputError):
            FixedDim(FixedDim.half().kind, 3)


class TestSurvivor:
    def test_round_trip_sorts_tags(self):
        survivor = Survivor.from_dict({"family": FAMILY_U3, "params": [1, 0], "real_dim": 6,
                                       "tags": ["b", "a"]})
        assert survivor.tags == ("a", "b")
        assert Survivor.from_dict(survivor.to_dict()) == survivor

    def test_malformed_entry(self):
        with pytest.raises(InputError):
            Survivor.from_dict({"family": FAMILY_U3, "params": [1, 0]})

    def test_polar_tag(self):
        assert Survivor(FAMILY_SU3, (1, 0), 6, (TAG_POLAR,)).is_polar
        assert not Survivor(FAMILY_TENSOR, (2, 3), 12).is_polar


class TestParsing:
    @pytest.mark.parametrize("text, mode", [
        ("paper", BoundMode.PAPER_BOUND),
        ("PAPER_BOUND", BoundMode.PAPER_BOUND),
        (" exact ", BoundMode.EXACT),
        (BoundMode.EXACT, BoundMode.EXACT),
    ])
    def test_parse_mode(self, text, mode):
        assert parse_mode(text) is mode

    def test_unknown_mode(self):
        with pytest.raises(InputError):
            parse_mode("loose")

    def test_case_ids_case_insensitive(self):
        assert normalize_case_id("c7-disc-conj") == "C7-DISC-CONJ"
        with pytest.raises(InputError):
            normalize_case_id("C10-CONN")

    def test_scan_bounds_validated(self):
        with pytest.raises(InputError):
            ScanBounds(max_highest_weight=0)
        with pytest.raises(InputError):
            ScanBounds(max_tensor_dim=1)


class TestReportStatus:
    def test_paper_needs_equal_sets(self):
        report = CaseReport("C9-DISC", BoundMode.PAPER_BOUND, GroupType.u3(), "test")
        report.survivors.append(Survivor(FAMILY_U3, (3, 3), 14))
        assert report.finalize().status == STATUS_MISMATCH

    def test_exact_allows_extras(self):
        report = CaseReport("C9-DISC", BoundMode.EXACT, GroupType.u3(), "test")
        report.survivors.append(Survivor(FAMILY_U3, (3, 3), 14, (TAG_EXACT_ONLY,)))
        assert report.finalize().status == STATUS_PASS

    def test_unknown_axiom_rejected(self):
        report = CaseReport("C9-DISC", BoundMode.EXACT, GroupType.u3(), "test")
        with pytest.raises(KeyError):
            report.use_axiom("NOT-CITED")


class TestPaperCases:
    def test_every_case_passes(self, paper_reports):
        assert {case_id: r.status for case_id, r in paper_reports.items()} == {c: STATUS_PASS for c in CASE_IDS}

    def test_c7_connected(self, paper_reports):
        report = paper_reports["C7-CONN"]
        assert report.survivors == []
        assert [s["params"] for s in report.inequality_solutions] == [[2, 2]]
        assert report.inequality_solutions[0]["dim_bound"] == 10
        assert axioms.COHOM_LE_3 in report.axioms_used
        assert [c.name for c in report.certificates] == ["tensor-tail"]

    @pytest.mark.parametrize("case_id, brackets", [
        ("C7-DISC-SWAP", 2),
        ("C7-DISC-SWAPCONJ", 1),
    ])
    def test_swap_cases_have_no_solutions(self, paper_reports, case_id, brackets):
        report = paper_reports[case_id]
        assert report.survivors == []
        assert report.inequality_solutions == []
        assert len(report.certificates) == brackets
        assert all(c.kind == "diophantine-bracket" and c.verified for c in report.certificates)

    def test_c7_conjugation(self, paper_reports):
        report = paper_reports["C7-DISC-CONJ"]
        assert report.survivors == [Survivor(FAMILY_TENSOR, (2, 3), 12)]
        assert [s["params"] for s in report.inequality_solutions] == [[1, 6], [2, 3]]

    def test_c8_connected(self, paper_reports):
        report = paper_reports["C8-CONN"]
        assert params_of(report) == [(FAMILY_SU3_REAL, (1, 1)), (FAMILY_SU3, (1, 0))]
        assert all(s.is_polar for s in report.survivors)
        assert axioms.DADOK_POLAR in report.axioms_used
        assert {c.name for c in report.certificates} == {"complex-type-tail", "real-form-tail"}

    def test_c8_outer(self, paper_reports):
        report = paper_reports["C8-DISC-OUTER"]
        assert report.survivors == []
        assert [s["params"] for s in report.inequality_solutions] == [[2, 0]]
        assert axioms.COHOM_4_COPOL_2 in report.axioms_used

    def test_c8_inner_uses_parity(self, paper_reports):
        report = paper_reports["C8-DISC-INNER"]
        assert report.survivors == []
        assert [w["params"] for w in report.witnesses] == [[2, 2], [4, 4]]
        assert [w["fixed_real_dim"] for w in report.witnesses] == [15, 65]
        assert report.discrepancies == []

    def test_c9_connected(self, paper_reports):
        report = paper_reports["C9-CONN"]
        assert report.survivors == [Survivor(FAMILY_U3, (1, 0), 6, (TAG_POLAR,))]
        assert sorted(s["params"] for s in report.inequality_solutions) == [[1, 0], [1, 1], [2, 0]]
        # both equality cases are explained
        assert len(report.discrepancies) == 2
        assert any("(1, 1)" in d for d in report.discrepancies)
        assert any("(2, 0)" in d and axioms.COHOM_LE_3 in d for d in report.discrepancies)

    def test_c9_disconnected(self, paper_reports):
        report = paper_reports["C9-DISC"]
        assert report.survivors == []
        assert report.search_space["complex_dim"] == 7
        assert axioms.QTORIC_CLASSIFICATION in report.axioms_used

    def test_every_cited_axiom_is_in_the_ledger(self, paper_reports):
        for report in paper_reports.values():
            for axiom_id in report.axioms_used:
                assert axioms.get_axiom(axiom_id).id == axiom_id

    def test_report_shape(self, paper_reports):
        data = paper_reports["C7-DISC-CONJ"].to_dict()
        assert list(data) == [
            "case_id", "mode", "group", "source", "section", "search_space", "constraints_applied",
            "inequality_solutions", "survivors", "axioms_used", "discrepancies",
            "expected_survivors", "certificates", "witnesses", "status",
        ]
        assert data["mode"] == "PAPER_BOUND"
        assert data["section"] == "7.2"

    @pytest.mark.parametrize("case_id,section", [
        ("C7-CONN", "7.1"),
        ("C7-DISC-SWAP", "7.2"),
        ("C7-DISC-SWAPCONJ", "7.2"),
        ("C7-DISC-CONJ", "7.2"),
        ("C8-CONN", "8.1"),
        ("C8-DISC-OUTER", "8.2.1"),
        ("C8-DISC-INNER", "8.2.2"),
        ("C9-CONN", "9.1"),
        ("C9-DISC", "9.2"),
    ])
    def test_section_ids(self, paper_reports, case_id, section):
        report = paper_reports[case_id]
        assert report.section == section
        assert report.source.startswith(f"copolarity {section[0]},")


class TestExactCases:
    def test_every_case_passes(self, exact_reports):
        assert all(r.status == STATUS_PASS for r in exact_reports.values())

    def test_tensor_2_3_survives_the_connected_case(self, exact_reports):
        report = exact_reports["C7-CONN"]
        assert report.survivors == [Survivor(FAMILY_TENSOR, (2, 3), 12, (TAG_EXACT_ONLY,))]
        assert len(report.discrepancies) == 1
        assert "(1, 0, -1)" in report.discrepancies[0]

    def test_su3_2_0_is_flagged_then_excluded(self, exact_reports):
        report = exact_reports["C8-CONN"]
        assert all(s.is_polar for s in report.survivors)
        assert any("(2, 0)" in d for d in report.discrepancies)
        assert axioms.COHOM_4_COPOL_2 in report.axioms_used

    def test_u3_1_1_survives(self, exact_reports):
        report = exact_reports["C9-CONN"]
        assert Survivor(FAMILY_U3, (1, 1), 16, (TAG_EXACT_ONLY,)) in report.survivors
        assert any("(1, -1, 0)" in d for d in report.discrepancies)

    def test_inner_involution_checks_every_label(self, exact_reports):
        report = exact_reports["C8-DISC-INNER"]
        assert [w["fixed_real_dim"] for w in report.witnesses] == [4, 15, 32, 65]
        assert report.survivors == []

    def test_witnesses_reverify(self, exact_reports):
        checks = [check for report in exact_reports.values() for check in report.witness_checks]
        assert checks
        for check in checks:
            assert annihilator_fixed_dim(check.diagram, check.direction).real_dim == check.real_dim

    def test_witness_checks_stay_out_of_the_report(self, exact_reports):
        assert "witness_checks" not in exact_reports["C7-CONN"].to_dict()


class TestCertificateFailure:
    def test_scan_bound_too_small(self):
        with pytest.raises(InputError, match="too small"):
            solve_case("C7-CONN", BoundMode.EXACT, ScanBounds(max_tensor_dim=2))


class TestTheorem:
    def test_paper_aggregate(self):
        theorem = theorem_main(BoundMode.PAPER_BOUND, SMALL, workers=1)
        assert theorem.status == STATUS_PASS
        assert [(s["case_id"], s["params"]) for s in theorem.survivors] == [("C7-DISC-CONJ", [2, 3])]
        assert theorem.flagged == []
        data = theorem.to_dict()
        assert data["exceptional_representation"]["representation"] == "C^3 (x) C^4"
        assert data["axioms_used"] == [axioms.QTORIC_CLASSIFICATION]
        assert [c["case_id"] for c in data["cases"]] == list(CASE_IDS)

    def test_workers_do_not_change_the_result(self):
        single = theorem_main(BoundMode.PAPER_BOUND, SMALL, workers=1)
        threaded = theorem_main(BoundMode.PAPER_BOUND, SMALL, workers=4)
        assert threaded.to_dict() == single.to_dict()

    def test_exact_aggregate(self):
        theorem = theorem_main(BoundMode.EXACT, SMALL, workers=1)
        assert theorem.status == STATUS_PASS
        flagged = {(s["case_id"], tuple(s["params"])) for s in theorem.flagged}
        assert flagged == {("C7-CONN", (2, 3)), ("C9-CONN", (1, 1))}
        assert theorem.discrepancy_count >= 3

    def test_exact_runs_are_deterministic(self):
        first = theorem_main(BoundMode.EXACT, SMALL, workers=1).to_dict()
        second = theorem_main(BoundMode.EXACT, SMALL, workers=3).to_dict()
        assert first == second

    def test_subset_of_cases(self):
        theorem = theorem_main(BoundMode.PAPER_BOUND, SMALL, workers=1, case_ids=["c9-disc"])
        assert [r.case_id for r in theorem.reports] == ["C9-DISC"]
        assert theorem.status == STATUS_PASS

    @pytest.mark.parametrize("workers", [0, -2])
    def test_worker_count_below_one_rejected(self, workers):
        with pytest.raises(InputError):
            theorem_main(BoundMode.PAPER_BOUND, SMALL, workers=workers, case_ids=["C9-DISC"])

    def test_worker_count_from_config_is_not_replaced(self):
        get_config().set("verify.workers", 0)
        with pytest.raises(InputError):
            theorem_main(BoundMode.PAPER_BOUND, SMALL, case_ids=["C9-DISC"])

    @pytest.mark.slow
    def test_default_scan_ranges(self, default_bounds):
        theorem = theorem_main(BoundMode.PAPER_BOUND, default_bounds, workers=2)
        assert theorem.status == STATUS_PASS
        assert [(s["case_id"], s["params"]) for s in theorem.survivors] == [("C7-DISC-CONJ", [2, 3])]
