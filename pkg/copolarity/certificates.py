"""
Certificates Module - Soundness certificates for finite scans

A finite scan only proves something when the region it skipped is shown to
hold no solutions. Two certificate kinds are produced here:

- polynomial slack: the slack of an inequality is substituted onto shifted
  nonnegative orthants covering the unscanned region; after expansion with
  sympy every coefficient must be nonnegative and the constant positive.
- Diophantine bracketing: a quadratic target equation is scanned with numpy,
  the target is bracketed by consecutive values, and the polynomial is shown
  increasing from the bracket on.

Author: Copolarity-Verify
"""

from dataclasses import dataclass, field
from enum import Enum
from math import ceil
from typing import Dict, FrozenSet, List, Sequence, Tuple

import numpy as np
import sympy

from .errors import ArithmeticOverflowError, ComputationError, InputError
from .logging_config import get_logger

logger = get_logger(__name__)

U, V = sympy.symbols("u v", integer=True, nonnegative=True)

DIOPHANTINE_CHUNK = 1 << 20
# n^2 + c1*n + c0 stays inside int64 for |c1|, |c0| <= 16
DIOPHANTINE_MAX_BOUND = 3_000_000_000

Region = Tuple[str, Dict[sympy.Symbol, sympy.Expr]]


@dataclass(frozen=True)
class Certificate:
    """
    A checked claim that a search has no solutions outside what was scanned.

    Attributes:
        name: Short identifier, unique within a case report
        kind: "polynomial-slack" or "diophantine-bracket"
        statement: The claim in plain text
        regions: Regions the claim was checked on
        verified: True when every check passed
        details: Extra integer or string data for the report
    """
    name: str
    kind: str
    statement: str
    regions: Tuple[str, ...]
    verified: bool
    details: Dict[str, object] = field(default_factory=dict, compare=False)

    def require(self) -> "Certificate":
        """
        Raises:
            ComputationError: If the certificate did not verify
        """
        if not self.verified:
            raise ComputationError(f"Certificate {self.name} failed: {self.statement}", detail=dict(self.details))
        return self

    def to_dict(self) -> Dict[str, object]:
        data = {
            "name": self.name,
            "kind": self.kind,
            "statement": self.statement,
            "regions": list(self.regions),
            "verified": self.verified,
        }
        data.update(self.details)
        return data


def certify_positive(name: str, slack: sympy.Expr, regions: Sequence[Region]) -> Certificate:
    """
    Check that slack > 0 on every region.

    Args:
        name: Certificate name
        slack: Polynomial in the original variables
        regions: (description, substitution) pairs; each substitution writes
                 the original variables as polynomials in fresh variables
                 ranging over the nonnegative integers

    Returns:
        Certificate, verified when every expansion has nonnegative coefficients
        and a positive constant term
    """
    checked: List[str] = []
    failures: List[str] = []
    for description, substitution in regions:
        expanded = sympy.expand(slack.subs(substitution, simultaneous=True))
        fresh = sorted(expanded.free_symbols, key=lambda s: s.name)
        if fresh:
            poly = sympy.Poly(expanded, *fresh)
            coefficients = poly.coeffs()
            constant = poly.coeff_monomial(1)
        else:
            coefficients = [expanded]
            constant = expanded
        ok = all(c >= 0 for c in coefficients) and constant > 0
        checked.append(description)
        if not ok:
            failures.append(description)
            logger.warning(f"Certificate {name} fails on {description}: {expanded}")
    statement = f"{sympy.sstr(sympy.expand(slack))} > 0"
    return Certificate(name, "polynomial-slack", statement, tuple(checked), not failures,
                       {"failed_regions": failures} if failures else {})


def tail_regions(variable: sympy.Symbol, bound: int) -> List[Region]:
    """The single region variable > bound."""
    return [(f"{variable} >= {bound + 1}", {variable: bound + 1 + U})]


def ordered_pair_regions(large: sympy.Symbol, small: sympy.Symbol, bound: int,
                         small_min: int = 0, gap: int = 0) -> List[Region]:
    """
    Orthants covering {large > bound} inside {small >= small_min, large >= small + gap}.

    Writing small = small_min + s and large = small + gap + d, the unscanned
    set is s + d >= T; it lies in {s >= ceil(T/2)} union {d >= ceil(T/2)}.
    """
    target = bound + 1 - small_min - gap
    if target <= 0:
        return [(f"{small} >= {small_min}, {large} >= {small} + {gap}",
                 {small: small_min + U, large: small_min + U + gap + V})]
    h = ceil(target / 2)
    return [
        (f"{small} >= {small_min + h}, {large} >= {small} + {gap}",
         {small: small_min + h + U, large: small_min + h + U + gap + V}),
        (f"{small} >= {small_min}, {large} >= {small} + {gap + h}",
         {small: small_min + U, large: small_min + U + gap + h + V}),
    ]


class DiophantineConstraint(Enum):
    """Quadratic equations n^2 + c1 n + c0 = 0 over positive integers."""
    N2_PLUS_N_EQ_4 = "N2_PLUS_N_EQ_4"
    N2_MINUS_N_EQ_4 = "N2_MINUS_N_EQ_4"
    N2_EQ_5 = "N2_EQ_5"

    @property
    def coefficients(self) -> Tuple[int, int]:
        return {
            DiophantineConstraint.N2_PLUS_N_EQ_4: (1, -4),
            DiophantineConstraint.N2_MINUS_N_EQ_4: (-1, -4),
            DiophantineConstraint.N2_EQ_5: (0, -5),
        }[self]

    @property
    def equation(self) -> str:
        return {
            DiophantineConstraint.N2_PLUS_N_EQ_4: "n^2 + n = 4",
            DiophantineConstraint.N2_MINUS_N_EQ_4: "n^2 - n = 4",
            DiophantineConstraint.N2_EQ_5: "n^2 = 5",
        }[self]


@dataclass(frozen=True)
class DiophantineResult:
    """Solutions found by the scan together with the certificate for the rest."""
    constraint: DiophantineConstraint
    bound: int
    solutions: FrozenSet[int]
    certificate: Certificate


def diophantine_empty(constraint: DiophantineConstraint, bound: int) -> DiophantineResult:
    """
    Positive integer solutions up to bound, plus a bracketing certificate.

    Args:
        constraint: Which equation
        bound: Largest n scanned

    Returns:
        DiophantineResult with the solution set (expected empty) and a
        certificate that no solution exceeds the bracket

    Raises:
        InputError: If bound < 1
        ArithmeticOverflowError: If bound > DIOPHANTINE_MAX_BOUND
    """
    if bound < 1:
        raise InputError(f"Diophantine bound must be at least 1, got {bound}")
    if bound > DIOPHANTINE_MAX_BOUND:
        raise ArithmeticOverflowError(
            f"Diophantine bound {bound} exceeds {DIOPHANTINE_MAX_BOUND}; n^2 would leave int64",
            detail={"bound": bound},
        )
    c1, c0 = constraint.coefficients

    # one chunk of n values in memory at a time
    found: List[int] = []
    first_above = None
    for start in range(1, bound + 1, DIOPHANTINE_CHUNK):
        n = np.arange(start, min(start + DIOPHANTINE_CHUNK, bound + 1), dtype=np.int64)
        values = n * n + c1 * n + c0
        found.extend(int(x) for x in n[values == 0])
        if first_above is None:
            above = np.nonzero(values > 0)[0]
            if above.size:
                first_above = int(n[above[0]])
    solutions = frozenset(found)

    if first_above is None:
        certificate = Certificate(f"{constraint.value}-bracket", "diophantine-bracket",
                                  f"{constraint.equation} has no bracket within n <= {bound}", (), False)
        return DiophantineResult(constraint, bound, solutions, certificate)
    last_below = first_above - 1

    symbol = sympy.Symbol("n", integer=True, positive=True)
    polynomial = symbol ** 2 + c1 * symbol + c0
    growth = certify_positive(f"{constraint.value}-tail", polynomial,
                              [(f"n >= {first_above}", {symbol: first_above + U})])
    derivative = sympy.diff(polynomial, symbol)
    increasing = bool(derivative.subs(symbol, 1) > 0) and sympy.Poly(derivative, symbol).LC() > 0
    below_ok = last_below < 1 or last_below * last_below + c1 * last_below + c0 < 0
    verified = growth.verified and increasing and below_ok
    certificate = Certificate(
        f"{constraint.value}-bracket",
        "diophantine-bracket",
        f"{constraint.equation}: value < 0 at n = {last_below}, > 0 from n = {first_above} on",
        growth.regions,
        verified,
        {"bracket": [last_below, first_above], "derivative": sympy.sstr(derivative)},
    )
    logger.debug(f"Diophantine {constraint.equation}: {len(solutions)} solutions up to {bound}, bracket {last_below}..{first_above}")
    return DiophantineResult(constraint, bound, solutions, certificate)
