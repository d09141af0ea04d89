"""
Axiom Ledger - Classification results accepted without computation

Every external result the case analysis relies on is listed here once, with
a one-line statement and a citation. Case reports refer to these by id.

Author: Copolarity-Verify
"""

from dataclasses import dataclass
from typing import Dict, List, Tuple


@dataclass(frozen=True)
class Axiom:
    """
    A cited result.

    Attributes:
        id: Stable identifier used in reports
        statement: One-line statement
        citation: Where the result comes from
    """
    id: str
    statement: str
    citation: str

    def to_dict(self) -> Dict[str, str]:
        return {"id": self.id, "statement": self.statement, "citation": self.citation}


DADOK_POLAR = "DADOK-POLAR"
GKW_BOUNDARY = "GKW-BOUNDARY"
DYNKIN_INDEX_BOUNDARY = "S-COR-13-4"
AEV_SMALL_INDEX = "AEV-TABLE-1"
COHOM_LE_3 = "COHOM-LE-3"
COHOM_4_COPOL_2 = "COHOM-4-COPOL-2"
C7_S3_CENTER = "C7-S3-CENTER"
C9_S3_EXCLUSION = "C9-S3-EXCLUSION"
QTORIC_CLASSIFICATION = "QTORIC-CLASSIFICATION"

_LEDGER: Tuple[Axiom, ...] = (
    Axiom(
        DADOK_POLAR,
        "Polar irreducible representations are classified; the realified defining representations "
        "of SU(3) and U(3) and the adjoint representation of SU(3) are polar.",
        "[D] Dadok, classification of polar representations",
    ),
    Axiom(
        GKW_BOUNDARY,
        "An irreducible representation of a compact connected simple Lie group whose orbit space has "
        "nonempty boundary is polar, toric, q-toric or the half-spin representation of Spin(11).",
        "[GKW] boundary theorem for orbit spaces of irreducible representations of simple groups",
    ),
    Axiom(
        DYNKIN_INDEX_BOUNDARY,
        "An S^3 boundary component of the orbit space requires the Dynkin index of the "
        "complexified representation to be less than one.",
        "[S, Cor. 13.4] Dynkin index criterion for boundary strata of orbit spaces",
    ),
    Axiom(
        AEV_SMALL_INDEX,
        "Irreducible representations of Dynkin index less than one are listed; those of SU(3) in "
        "scope are polar.",
        "[A-E-V, Table 1] irreducible representations with Dynkin index less than one",
    ),
    Axiom(
        COHOM_LE_3,
        "Representations of cohomogeneity at most 3 are polar or of abstract copolarity 1.",
        "[Str], [GOT], [GL, Cor. 1.6] representations of cohomogeneity at most three and their reductions",
    ),
    Axiom(
        COHOM_4_COPOL_2,
        "Irreducible representations of cohomogeneity 4 of compact connected groups have abstract copolarity 2.",
        "[GL, Thm. 1.11] reductions of representations of cohomogeneity four",
    ),
    Axiom(
        C7_S3_CENTER,
        "For copolarity 7 with connected group, an S^3 isotropy at an important point contradicts "
        "the structure of the center of U(1)xSU(2)xSU(2).",
        "copolarity-7 connected boundary argument (structural, not computed)",
    ),
    Axiom(
        C9_S3_EXCLUSION,
        "For copolarity 9, an S^3 boundary component would restrict to a non-orbit-equivalent SU(3) "
        "representation with S^3 boundary, and no such representation exists.",
        "[S, Cor. 13.4], [A-E-V, Table 1] copolarity-9 connected boundary argument",
    ),
    Axiom(
        QTORIC_CLASSIFICATION,
        "Irreducible q-toric representations are classified; a reduction group locally isomorphic "
        "to Sp(1)^3 gives a q-toric representation.",
        "[GG] classification of irreducible quaternion-toric representations",
    ),
)


def axiom_ledger() -> List[Axiom]:
    """The fixed ledger of cited results, in a stable order."""
    return list(_LEDGER)


def axiom_ids() -> List[str]:
    return [axiom.id for axiom in _LEDGER]


def get_axiom(axiom_id: str) -> Axiom:
    """
    Raises:
        KeyError: If no axiom has this id
    """
    for axiom in _LEDGER:
        if axiom.id == axiom_id:
            return axiom
    raise KeyError(axiom_id)
