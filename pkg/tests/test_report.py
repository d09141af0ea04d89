"""
Tests for canonical rendering and baseline comparison.
"""

import json

import pytest

from copolarity.axioms import axiom_ledger
from copolarity.cases import FAMILY_TENSOR, TAG_EXACT_ONLY, ScanBounds, Survivor, solve_case, theorem_main
from copolarity.config import PROJECT_ROOT
from copolarity.errors import InputError
from copolarity.fixed_space import BoundMode
from copolarity.irreps import IrrepDescriptor, freudenthal_diagram, su3_shells
from copolarity.report import (
    baseline_from_reports,
    canonical_json,
    compare_to_baseline,
    load_baseline,
    parse_baseline,
    render_axioms,
    render_diagram,
    render_verify,
    write_baseline,
)

SMALL = ScanBounds(max_highest_weight=12, max_tensor_dim=12, max_irrep_weight=10,
                   diophantine_bound=1000, involution_check_dim=4)
COMMITTED_BASELINE = PROJECT_ROOT / "config" / "baselines" / "paper_bound.json"


@pytest.fixture(scope="module")
def paper_theorem():
    return theorem_main(BoundMode.PAPER_BOUND, SMALL, workers=1)


class TestCanonicalJson:
    def test_sorted_with_trailing_newline(self):
        text = canonical_json({"b": 1, "a": [1, {"d": "x", "c": 2}]})
        assert text.endswith("}\n")
        assert text.index('"a"') < text.index('"b"')
        assert text.index('"c"') < text.index('"d"')
        assert json.loads(text) == {"a": [1, {"c": 2, "d": "x"}], "b": 1}

    def test_floats_rejected(self):
        with pytest.raises(InputError):
            canonical_json({"values": [1, {"x": 0.5}]})

    def test_identical_runs_render_identically(self, paper_theorem):
        again = theorem_main(BoundMode.PAPER_BOUND, SMALL, workers=2)
        assert render_verify(again) == render_verify(paper_theorem)


class TestBaselines:
    def test_committed_baseline_matches(self, paper_theorem):
        assert compare_to_baseline(paper_theorem.reports, load_baseline(COMMITTED_BASELINE)) == []

    def test_committed_baseline_is_canonical(self, paper_theorem):
        assert COMMITTED_BASELINE.read_text(encoding="utf-8") == canonical_json(
            baseline_from_reports(paper_theorem.reports))

    def test_write_and_reload(self, paper_theorem, tmp_path):
        path = write_baseline(paper_theorem.reports, tmp_path / "nested" / "baseline.json")
        assert path.exists()
        assert compare_to_baseline(paper_theorem.reports, load_baseline(path)) == []

    def test_extra_survivor_is_a_paper_mismatch(self):
        report = solve_case("C7-DISC-CONJ", BoundMode.PAPER_BOUND, SMALL)
        mismatches = compare_to_baseline([report], {"C7-DISC-CONJ": []})
        assert mismatches == [f"C7-DISC-CONJ: unexpected {FAMILY_TENSOR} (2, 3)"]

    def test_missing_survivor(self):
        report = solve_case("C7-DISC-SWAP", BoundMode.PAPER_BOUND, SMALL)
        baseline = {"C7-DISC-SWAP": [Survivor(FAMILY_TENSOR, (3, 3), 18)]}
        assert compare_to_baseline([report], baseline) == [f"C7-DISC-SWAP: missing {FAMILY_TENSOR} (3, 3)"]

    def test_exact_mode_ignores_extras(self):
        report = solve_case("C7-CONN", BoundMode.EXACT, SMALL)
        assert report.survivors[0].tags == (TAG_EXACT_ONLY,)
        assert compare_to_baseline([report], {"C7-CONN": []}) == []

    def test_case_without_entry(self):
        report = solve_case("C9-DISC", BoundMode.PAPER_BOUND, SMALL)
        assert compare_to_baseline([report], {}) == ["C9-DISC: no baseline entry"]

    def test_missing_file(self, tmp_path):
        with pytest.raises(InputError, match="not found"):
            load_baseline(tmp_path / "absent.json")

    def test_invalid_json(self, tmp_path):
        path = tmp_path / "broken.json"
        path.write_text("{not json", encoding="utf-8")
        with pytest.raises(InputError, match="not valid JSON"):
            load_baseline(path)

    @pytest.mark.parametrize("data", [
        [],
        {"mode": "PAPER_BOUND"},
        {"cases": {"C11-CONN": []}},
        {"cases": {"C9-DISC": {"family": "x"}}},
        {"cases": {"C9-DISC": [{"family": "x"}]}},
    ])
    def test_malformed(self, data):
        with pytest.raises(InputError):
            parse_baseline(data)


class TestRendering:
    def test_verify_json(self, paper_theorem):
        data = json.loads(render_verify(paper_theorem, "json", ["C7-CONN: missing x"]))
        assert data["status"] == "PASS"
        assert data["baseline_mismatches"] == ["C7-CONN: missing x"]
        assert len(data["cases"]) == 9

    def test_verify_markdown(self, paper_theorem):
        text = render_verify(paper_theorem, "md")
        assert text.startswith("# Copolarity case analysis (PAPER_BOUND)")
        assert "## C7-DISC-CONJ" in text
        assert f"- C7-DISC-CONJ: {FAMILY_TENSOR} (2, 3), dim V = 12" in text
        assert "Status: **PASS**" in text

    def test_section_ids_rendered(self, paper_theorem):
        text = render_verify(paper_theorem, "md")
        for section in ("7.1", "7.2", "8.1", "8.2.1", "8.2.2", "9.1", "9.2"):
            assert f"- Section: {section}\n" in text
        data = json.loads(render_verify(paper_theorem, "json"))
        sections = {case["case_id"]: case["section"] for case in data["cases"]}
        assert sections["C8-DISC-INNER"] == "8.2.2"
        assert sections["C7-DISC-SWAPCONJ"] == "7.2"

    def test_unknown_format(self, paper_theorem):
        with pytest.raises(InputError):
            render_verify(paper_theorem, "yaml")

    def test_diagram_with_shells(self):
        diagram = freudenthal_diagram(IrrepDescriptor.su3(2, 1))
        data = json.loads(render_diagram(diagram, "json", su3_shells(2, 1)))
        assert data["complex_dim"] == 15
        assert data["shells"]["complex_dim"] == 15
        text = render_diagram(diagram, "md", su3_shells(2, 1))
        assert "| (1, 0) | 2 |" in text
        assert "| 0 | HEXAGON | 9 | 1 |" in text

    def test_axioms(self):
        data = json.loads(render_axioms(axiom_ledger()))
        assert len(data["axioms"]) == 9
        assert render_axioms(axiom_ledger(), "md").count("\n| ") == 10
