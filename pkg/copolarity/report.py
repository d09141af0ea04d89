"""
Report Module - Canonical rendering and baseline comparison

Renders case reports, weight diagrams and the axiom ledger as canonical JSON
(sorted keys, two-space indent, trailing newline, integers and strings only)
or as Markdown, and compares survivor sets against committed baselines.

Baseline file format:
    {
      "mode": "PAPER_BOUND",
      "cases": {"C7-CONN": [], "C7-DISC-CONJ": [{"family": ..., "params": [2, 3], ...}], ...}
    }

Author: Copolarity-Verify
"""

import json
from pathlib import Path
from typing import Any, Dict, List, Mapping, Optional, Sequence, Union

from .axioms import Axiom
from .cases import CASE_IDS, CaseReport, Survivor, TheoremReport
from .errors import InputError
from .fixed_space import BoundMode
from .irreps import ShellDecomposition, WeightDiagram
from .logging_config import get_logger

logger = get_logger(__name__)

Baseline = Dict[str, List[Survivor]]


def canonical_json(data: Any) -> str:
    """Serialize with sorted keys and a trailing newline; floats are rejected."""
    _reject_floats(data)
    return json.dumps(data, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def _reject_floats(value: Any) -> None:
    if isinstance(value, float):
        raise InputError(f"Floating point value {value!r} in a canonical report")
    if isinstance(value, dict):
        for item in value.values():
            _reject_floats(item)
    elif isinstance(value, (list, tuple)):
        for item in value:
            _reject_floats(item)


# ----------------------------------------------------------------------
# baselines

def baseline_from_reports(reports: Sequence[CaseReport]) -> Dict[str, Any]:
    """Baseline document holding the survivor set of each report."""
    mode = reports[0].mode.value if reports else BoundMode.PAPER_BOUND.value
    return {
        "mode": mode,
        "cases": {r.case_id: [s.to_dict() for s in sorted(set(r.survivors))] for r in reports},
    }


def write_baseline(reports: Sequence[CaseReport], path: Union[str, Path]) -> Path:
    """Write the survivor sets of reports as a baseline file."""
    target = Path(path)
    target.parent.mkdir(parents=True, exist_ok=True)
    target.write_text(canonical_json(baseline_from_reports(reports)), encoding="utf-8")
    logger.info(f"Baseline written to {target}")
    return target


def load_baseline(path: Union[str, Path]) -> Baseline:
    """
    Load a baseline file.

    Raises:
        InputError: If the file is missing, not JSON, or not shaped like a baseline
    """
    source = Path(path)
    try:
        data = json.loads(source.read_text(encoding="utf-8"))
    except FileNotFoundError as e:
        raise InputError(f"Baseline file not found: {source}") from e
    except json.JSONDecodeError as e:
        raise InputError(f"Baseline file {source} is not valid JSON: {e}") from e
    return parse_baseline(data, str(source))


def parse_baseline(data: Any, origin: str = "baseline") -> Baseline:
    """
    Raises:
        InputError: If data is not shaped like a baseline
    """
    if not isinstance(data, dict) or not isinstance(data.get("cases"), dict):
        raise InputError(f"Malformed baseline {origin}: expected an object with a 'cases' object")
    baseline: Baseline = {}
    for case_id, entries in data["cases"].items():
        if case_id not in CASE_IDS:
            raise InputError(f"Malformed baseline {origin}: unknown case id {case_id!r}")
        if not isinstance(entries, list):
            raise InputError(f"Malformed baseline {origin}: survivors of {case_id} must be a list")
        baseline[case_id] = sorted({Survivor.from_dict(e) for e in entries})
    return baseline


def compare_to_baseline(reports: Sequence[CaseReport], baseline: Mapping[str, Sequence[Survivor]]) -> List[str]:
    """
    Structural comparison of survivor sets, by family, parameters and tags.

    PAPER_BOUND reports must match the baseline exactly; EXACT reports must
    contain every baseline survivor.

    Returns:
        One message per mismatching case, empty when everything agrees
    """
    mismatches: List[str] = []
    for report in reports:
        if report.case_id not in baseline:
            mismatches.append(f"{report.case_id}: no baseline entry")
            continue
        expected = {s.key for s in baseline[report.case_id]}
        found = {s.key for s in report.survivors}
        missing = sorted(expected - found)
        extra = sorted(found - expected)
        if report.mode is BoundMode.EXACT:
            extra = []
        if missing or extra:
            parts = []
            if missing:
                parts.append("missing " + ", ".join(_key_text(k) for k in missing))
            if extra:
                parts.append("unexpected " + ", ".join(_key_text(k) for k in extra))
            mismatches.append(f"{report.case_id}: " + "; ".join(parts))
    for message in mismatches:
        logger.warning(f"Baseline mismatch {message}")
    return mismatches


def _key_text(key: Any) -> str:
    family, params, tags = key
    suffix = f" [{', '.join(tags)}]" if tags else ""
    return f"{family} ({', '.join(str(p) for p in params)}){suffix}"


# ----------------------------------------------------------------------
# verify output

def verify_document(theorem: TheoremReport, baseline_mismatches: Optional[Sequence[str]] = None) -> Dict[str, Any]:
    data = theorem.to_dict()
    data["baseline_mismatches"] = list(baseline_mismatches or [])
    return data


def render_verify(theorem: TheoremReport, fmt: str = "json",
                  baseline_mismatches: Optional[Sequence[str]] = None) -> str:
    """Render a verify run as canonical JSON or Markdown."""
    if fmt == "json":
        return canonical_json(verify_document(theorem, baseline_mismatches))
    if fmt == "md":
        return render_verify_markdown(theorem, baseline_mismatches)
    raise InputError(f"Unknown format {fmt!r} (use json or md)")


def _survivor_line(survivor: Survivor) -> str:
    tags = f" [{', '.join(survivor.tags)}]" if survivor.tags else ""
    params = ", ".join(str(p) for p in survivor.params)
    return f"- {survivor.family} ({params}), dim V = {survivor.real_dim}{tags}"


def render_case_markdown(report: CaseReport) -> List[str]:
    lines = [
        f"## {report.case_id}",
        "",
        f"- Section: {report.section}",
        f"- Source: {report.source}",
        f"- Group: {report.group.label} (dim {report.group.total_group_dim})",
        f"- Mode: {report.mode.value}",
        f"- Status: **{report.status}**",
        "",
        "### Constraints",
        "",
    ]
    lines.extend(f"{i}. {text}" for i, text in enumerate(report.constraints_applied, 1))
    lines += ["", "### Survivors", ""]
    lines.extend([_survivor_line(s) for s in report.survivors] or ["- none"])
    lines += ["", "### Axioms used", ""]
    lines.extend([f"- {a}" for a in report.axioms_used] or ["- none"])
    if report.certificates:
        lines += ["", "### Certificates", ""]
        for cert in report.certificates:
            state = "verified" if cert.verified else "FAILED"
            lines.append(f"- {cert.name} ({cert.kind}, {state}): `{cert.statement}`")
    if report.discrepancies:
        lines += ["", "### Discrepancies", ""]
        lines.extend(f"- {d}" for d in report.discrepancies)
    lines.append("")
    return lines


def render_verify_markdown(theorem: TheoremReport, baseline_mismatches: Optional[Sequence[str]] = None) -> str:
    lines = [f"# Copolarity case analysis ({theorem.mode.value})", ""]
    for report in theorem.reports:
        lines.extend(render_case_markdown(report))
    lines += ["## Summary", ""]
    if theorem.survivors:
        for entry in theorem.survivors:
            params = ", ".join(str(p) for p in entry["params"])
            lines.append(f"- {entry['case_id']}: {entry['family']} ({params}), dim V = {entry['real_dim']}")
    else:
        lines.append("- no surviving non-polar family")
    for entry in theorem.flagged:
        params = ", ".join(str(p) for p in entry["params"])
        lines.append(f"- flagged in {entry['case_id']}: {entry['family']} ({params})")
    if baseline_mismatches:
        lines += ["", "### Baseline mismatches", ""]
        lines.extend(f"- {m}" for m in baseline_mismatches)
    lines += ["", f"Status: **{theorem.status}**", ""]
    return "\n".join(lines)


# ----------------------------------------------------------------------
# diagrams and ledger

def diagram_document(diagram: WeightDiagram, shells: Optional[ShellDecomposition] = None) -> Dict[str, Any]:
    data = diagram.to_dict()
    if shells is not None:
        data["shells"] = shells.to_dict()
    return data


def render_diagram(diagram: WeightDiagram, fmt: str = "json", shells: Optional[ShellDecomposition] = None) -> str:
    if fmt == "json":
        return canonical_json(diagram_document(diagram, shells))
    if fmt != "md":
        raise InputError(f"Unknown format {fmt!r} (use json or md)")
    lines = [
        f"# Weight diagram of {diagram.group.label}",
        "",
        f"- complex dimension {diagram.complex_dim}, real dimension {diagram.real_dim} ({diagram.reality.value})",
        "",
        "| weight | mult |",
        "|---|---|",
    ]
    for mu, mult in diagram.items():
        lines.append(f"| {tuple(diagram.group.weight_vector(mu))} | {mult} |")
    if shells is not None:
        lines += ["", "| shell | kind | weights | mult |", "|---|---|---|---|"]
        for shell in shells.shells:
            lines.append(f"| {shell.index} | {shell.kind.value} | {shell.weight_count} | {shell.multiplicity} |")
    lines.append("")
    return "\n".join(lines)


def render_axioms(ledger: Sequence[Axiom], fmt: str = "json") -> str:
    if fmt == "json":
        return canonical_json({"axioms": [a.to_dict() for a in ledger]})
    if fmt != "md":
        raise InputError(f"Unknown format {fmt!r} (use json or md)")
    lines = ["# Axiom ledger", "", "| id | statement | citation |", "|---|---|---|"]
    lines.extend(f"| {a.id} | {a.statement} | {a.citation} |" for a in ledger)
    lines.append("")
    return "\n".join(lines)
