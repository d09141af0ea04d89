"""
Irrep Engine Module - Weight diagrams of irreducible representations

Builds weight diagrams for highest-weight representations of products of
A1/A2 factors (with an optional central circle) along two independent paths:
the Freudenthal multiplicity recursion and the Weyl character formula as an
exact Laurent polynomial quotient. Also provides the Weyl dimension formula,
the concentric shell structure of SU(3) diagrams and the tensor family
C^m (x) C^n of U(1) x SU(2) x SU(2).

Author: Copolarity-Verify
"""

from collections import deque
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from types import MappingProxyType
from typing import Dict, List, Mapping, Optional, Tuple

from .errors import ComputationError, InputError
from .laurent import LaurentPolynomial
from .logging_config import get_logger
from .weights import (
    GroupType,
    Weight,
    apply_weyl_element,
    checked,
    dominant_conjugate,
    inner_product,
    is_dominant,
    positive_root_data,
    rho,
    simple_root_coordinates,
    weyl_group,
    weyl_orbit,
)

logger = get_logger(__name__)


class Reality(Enum):
    """Reality type of a real irreducible representation."""
    REAL_FORM = "REAL_FORM"
    COMPLEX_TYPE = "COMPLEX_TYPE"


@dataclass(frozen=True)
class IrrepDescriptor:
    """
    Irreducible representation given by group type, highest weight and reality type.

    The reality type is an input: REAL_FORM is used for pi_{a,a} of SU(3);
    anything with a central circle is COMPLEX_TYPE.

    Attributes:
        group: Group type
        highest_weight: Dominant highest weight (central charge included)
        reality: REAL_FORM or COMPLEX_TYPE
    """
    group: GroupType
    highest_weight: Weight
    reality: Reality = Reality.COMPLEX_TYPE

    def __post_init__(self) -> None:
        self.group.check_weight(self.highest_weight)
        if not is_dominant(self.highest_weight):
            raise InputError(f"Highest weight {self.highest_weight} is not dominant")
        if self.group.has_central_circle and self.reality is not Reality.COMPLEX_TYPE:
            raise InputError("Representations with a central circle are of complex type")

    @classmethod
    def su3(cls, a: int, b: int, reality: Optional[Reality] = None) -> "IrrepDescriptor":
        """pi_{a,b} of SU(3); pi_{a,a} defaults to its real form, everything else to the realification."""
        if reality is None:
            reality = Reality.REAL_FORM if a == b else Reality.COMPLEX_TYPE
        return cls(GroupType.su3(), Weight((a, b)), reality)

    @classmethod
    def u3(cls, a: int, b: int, charge: int = 1) -> "IrrepDescriptor":
        """pi_{a,b} of SU(3) extended by a circle acting with the given charge."""
        return cls(GroupType.u3(), Weight((a, b), charge), Reality.COMPLEX_TYPE)

    @classmethod
    def tensor(cls, m: int, n: int, charged: bool = True) -> "IrrepDescriptor":
        """C^m (x) C^n of SU(2) x SU(2), with the scalar circle when charged."""
        if m < 1 or n < 1:
            raise InputError(f"Tensor factor dimensions must be positive, got ({m}, {n})")
        group = GroupType.u1_su2_su2() if charged else GroupType.su2_su2()
        return cls(group, Weight((m - 1, n - 1), 1 if charged else 0), Reality.COMPLEX_TYPE)

    @property
    def realification_factor(self) -> int:
        return 2 if self.reality is Reality.COMPLEX_TYPE else 1

    def to_dict(self) -> Dict[str, object]:
        return {
            "group": self.group.label,
            "highest_weight": self.highest_weight.to_dict(),
            "reality": self.reality.value,
        }


class WeightDiagram:
    """
    Multiset of weights with positive multiplicities and realification metadata.

    Attributes:
        group: Group type the weights belong to
        reality: Reality type deciding the real dimension
        highest_weight: Highest weight when the diagram comes from an irrep
    """

    def __init__(self, group: GroupType, entries: Mapping[Weight, int],
                 reality: Reality = Reality.COMPLEX_TYPE,
                 highest_weight: Optional[Weight] = None) -> None:
        cleaned: Dict[Weight, int] = {}
        for mu, mult in entries.items():
            group.check_weight(mu)
            if mult <= 0:
                raise InputError(f"Multiplicity of {mu} must be positive, got {mult}")
            cleaned[mu] = int(mult)
        if not cleaned:
            raise InputError("A weight diagram needs at least one weight")
        self.group = group
        self.reality = reality
        self.highest_weight = highest_weight
        self._entries = MappingProxyType(cleaned)

    @property
    def entries(self) -> Mapping[Weight, int]:
        return self._entries

    @property
    def complex_dim(self) -> int:
        return sum(self._entries.values())

    @property
    def real_dim(self) -> int:
        return self.complex_dim * (2 if self.reality is Reality.COMPLEX_TYPE else 1)

    @property
    def realification_factor(self) -> int:
        return 2 if self.reality is Reality.COMPLEX_TYPE else 1

    def multiplicity(self, mu: Weight) -> int:
        return self._entries.get(mu, 0)

    def weights(self) -> List[Weight]:
        """Distinct weights in sorted order."""
        return sorted(self._entries)

    def items(self) -> List[Tuple[Weight, int]]:
        return sorted(self._entries.items())

    def max_multiplicity(self) -> int:
        return max(self._entries.values())

    def is_weyl_invariant(self) -> bool:
        for mu, mult in self._entries.items():
            if any(self._entries.get(nu, 0) != mult for nu in weyl_orbit(self.group, mu)):
                return False
        return True

    def is_negation_symmetric(self) -> bool:
        """True when m(-mu) = m(mu) for every weight, central charge included."""
        return all(self._entries.get(-mu, 0) == mult for mu, mult in self._entries.items())

    def to_dict(self) -> Dict[str, object]:
        return {
            "group": self.group.label,
            "reality": self.reality.value,
            "complex_dim": self.complex_dim,
            "real_dim": self.real_dim,
            "weights": [{"weight": list(self.group.weight_vector(mu)), "mult": m} for mu, m in self.items()],
        }

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, WeightDiagram):
            return NotImplemented
        return (self.group == other.group and self.reality == other.reality
                and dict(self._entries) == dict(other._entries))

    def __repr__(self) -> str:
        return f"WeightDiagram({self.group.label}, dim={self.complex_dim}, weights={len(self._entries)})"


class ShellKind(Enum):
    HEXAGON = "HEXAGON"
    TRIANGLE = "TRIANGLE"
    POINT = "POINT"


@dataclass(frozen=True)
class Shell:
    """One concentric Weyl orbit boundary of an SU(3) weight diagram."""
    kind: ShellKind
    index: int
    multiplicity: int
    weight_count: int
    highest_weight: Tuple[int, int]

    def to_dict(self) -> Dict[str, object]:
        return {
            "kind": self.kind.value,
            "index": self.index,
            "multiplicity": self.multiplicity,
            "weight_count": self.weight_count,
            "highest_weight": list(self.highest_weight),
        }


@dataclass(frozen=True)
class ShellDecomposition:
    """
    Shells of pi_{a,b} with a >= b: hexagons H_0..H_{b-1}, then triangles.

    Attributes:
        a: First Dynkin label after symmetrization (a >= b)
        b: Second Dynkin label
        shells: Ordered shells, outermost first
    """
    a: int
    b: int
    shells: Tuple[Shell, ...]

    @property
    def complex_dim(self) -> int:
        return sum(s.multiplicity * s.weight_count for s in self.shells)

    def to_dict(self) -> Dict[str, object]:
        return {
            "a": self.a,
            "b": self.b,
            "complex_dim": self.complex_dim,
            "shells": [s.to_dict() for s in self.shells],
        }


def _check_rep(rep: IrrepDescriptor) -> None:
    if not isinstance(rep, IrrepDescriptor):
        raise InputError(f"Expected an IrrepDescriptor, got {type(rep).__name__}")
    if not is_dominant(rep.highest_weight):
        raise InputError(f"Highest weight {rep.highest_weight} is not dominant")


def weyl_dim(rep: IrrepDescriptor) -> int:
    """
    Complex dimension by the Weyl dimension formula.

    Args:
        rep: Irreducible representation

    Returns:
        prod over positive roots of <Lambda+rho, alpha^vee> / <rho, alpha^vee>.
        For pi_{a,b} of SU(3) this is (a+1)(b+1)(a+b+2)/2; for SU(2) with
        highest weight m-1 it is m; the circle contributes 1.

    Raises:
        InputError: If the highest weight is not dominant
    """
    _check_rep(rep)
    shifted = [c + 1 for c in rep.highest_weight.coords]
    value = Fraction(1)
    for _, coeffs in positive_root_data(rep.group):
        numerator = sum(c * s for c, s in zip(coeffs, shifted))
        denominator = sum(coeffs)
        value *= Fraction(numerator, denominator)
    if value.denominator != 1:
        raise ComputationError(f"Weyl dimension of {rep.highest_weight} is not integral: {value}")
    return checked(int(value))


def _dominant_weights_below(group: GroupType, top: Weight) -> Dict[Weight, int]:
    """
    Dominant weights of the form top minus a nonnegative sum of positive roots, with their depth.

    Any such weight is reachable from top by subtracting one positive root at
    a time without leaving the dominant chamber.
    """
    roots = positive_root_data(group)
    depth = {top: 0}
    queue = deque([top])
    while queue:
        mu = queue.popleft()
        for root, coeffs in roots:
            nu = mu - root
            if nu in depth or not is_dominant(nu):
                continue
            depth[nu] = depth[mu] + sum(coeffs)
            queue.append(nu)
    return depth


def freudenthal_diagram(rep: IrrepDescriptor) -> WeightDiagram:
    """
    Full weight diagram by the Freudenthal recursion.

    Multiplicities are computed for dominant weights only, in order of
    increasing depth below the highest weight, and then spread over Weyl
    orbits. For mu below Lambda:

        m(mu) = 2 sum_{alpha>0} sum_{k>=1} m(mu + k alpha) (mu + k alpha, alpha)
                / ((Lambda+rho, Lambda+rho) - (mu+rho, mu+rho))

    Args:
        rep: Irreducible representation

    Returns:
        Weyl-invariant weight diagram carrying rep's reality type

    Raises:
        InputError: If the highest weight is not dominant
        ComputationError: If a denominator is not positive or a multiplicity not integral
    """
    _check_rep(rep)
    group = rep.group
    charge = rep.highest_weight.central_charge
    top = Weight(rep.highest_weight.coords, 0)
    shift = rho(group)
    roots = [root for root, _ in positive_root_data(group)]
    top_norm = inner_product(group, top + shift, top + shift)

    depth = _dominant_weights_below(group, top)
    mult: Dict[Weight, int] = {top: 1}

    def lookup(nu: Weight) -> int:
        return mult.get(dominant_conjugate(group, nu), 0)

    for mu in sorted(depth, key=lambda w: (depth[w], w)):
        if mu == top:
            continue
        # Lambda - mu must be a nonnegative integer combination of simple roots of height depth[mu]
        gap = simple_root_coordinates(group, top - mu)
        if any(c.denominator != 1 or c < 0 for c in gap) or sum(gap) != depth[mu]:
            raise ComputationError(
                f"Weight {mu} is not in the root cone below {top}",
                detail={"highest_weight": str(top), "weight": str(mu), "simple_root_coordinates": [str(c) for c in gap]},
            )
        denominator =top_norm - inner_product(group, mu + shift, mu + shift)
        if denominator <= 0:
            raise ComputationError(
                f"Freudenthal denominator {denominator} is not positive at {mu}",
                detail={"highest_weight": str(top), "weight": str(mu)},
            )
        total = Fraction(0)
        for alpha in roots:
            nu = mu + alpha
            while True:
                m = lookup(nu)
                if m == 0:
                    break
                total += m * inner_product(group, nu, alpha)
                nu = nu + alpha
        value = 2 * total / denominator
        if value.denominator != 1 or value < 0:
            raise ComputationError(
                f"Freudenthal multiplicity {value} at {mu} is not a nonnegative integer",
                detail={"highest_weight": str(top), "weight": str(mu)},
            )
        if value:
            mult[mu] = checked(int(value))

    entries: Dict[Weight, int] = {}
    for mu, m in mult.items():
        for nu in weyl_orbit(group, mu):
            entries[Weight(nu.coords, charge)] = m
    logger.debug(f"Freudenthal {group.label} {rep.highest_weight}: {len(mult)} dominant, {len(entries)} weights")
    return WeightDiagram(group, entries, rep.reality, rep.highest_weight)


@lru_cache(maxsize=256)
def character_polynomial(rep: IrrepDescriptor) -> LaurentPolynomial:
    """
    Character as a Laurent polynomial by the Weyl character formula.

    The alternating sum over the Weyl group of x^{w(Lambda+rho)} is divided
    exactly by the Weyl denominator. Variables are the fundamental-weight
    coordinates, followed by the central charge when the group has a circle,
    so the coefficient of x^mu is the multiplicity of mu.

    Raises:
        InputError: If the highest weight is not dominant
        ComputationError: If the division leaves a remainder
    """
    _check_rep(rep)
    group = rep.group
    n = group.semisimple_rank
    shift = rho(group)
    top = Weight(rep.highest_weight.coords, 0) + shift

    numerator: Dict[Tuple[int, ...], int] = {}
    denominator: Dict[Tuple[int, ...], int] = {}
    for sign, matrix in weyl_group(group):
        up = apply_weyl_element(matrix, top).coords
        down = apply_weyl_element(matrix, shift).coords
        numerator[up] = numerator.get(up, 0) + sign
        denominator[down] = denominator.get(down, 0) + sign

    quotient = LaurentPolynomial(n, numerator).divide_exact(LaurentPolynomial(n, denominator))
    if group.has_central_circle:
        quotient = quotient.extended(rep.highest_weight.central_charge)
    return quotient


def su3_shells(a: int, b: int) -> ShellDecomposition:
    """
    Concentric shell structure of the pi_{a,b} diagram.

    With a >= b (swap otherwise): hexagons H_i of highest weight (a-i, b-i)
    for i < b, each with 3(a+b-2i) weights of multiplicity i+1; then triangles
    T_j of highest weight (a-b-3j, 0) with 3(a-b-3j) weights of multiplicity
    b+1. When a-b is divisible by 3 the innermost triangle collapses to a
    POINT with one weight.

    Raises:
        InputError: If a or b is negative
    """
    if a < 0 or b < 0:
        raise InputError(f"Dynkin labels must be nonnegative, got ({a}, {b})")
    if a < b:
        a, b = b, a
    shells: List[Shell] = []
    for i in range(b):
        p, q = a - i, b - i
        shells.append(Shell(ShellKind.HEXAGON, i, i + 1, 3 * (p + q), (p, q)))
    j = 0
    while a - b - 3 * j >= 0:
        p = a - b - 3 * j
        if p == 0:
            shells.append(Shell(ShellKind.POINT, j, b + 1, 1, (0, 0)))
        else:
            shells.append(Shell(ShellKind.TRIANGLE, j, b + 1, 3 * p, (p, 0)))
        j += 1
    return ShellDecomposition(a, b, tuple(shells))


def shell_line_bound(a: int, b: int) -> int:
    """
    Complex dimension a line through the origin can collect from pi_{a,b}.

    A line meets the boundary of each hexagon or triangle in at most two
    weights, and a point shell in one.
    """
    return sum(min(2, s.weight_count) * s.multiplicity for s in su3_shells(a, b).shells)


def paper_shell_estimate(a: int, b: int) -> Fraction:
    """
    The rough real-dimension estimate 2b(b+1) + (4/3)(b+1)(a-b), for a >= b.

    It counts b(b+1) complex dimensions on hexagons and (a-b)/3 triangles of
    two weights each, doubled for the realification.
    """
    if a < 0 or b < 0:
        raise InputError(f"Dynkin labels must be nonnegative, got ({a}, {b})")
    if a < b:
        a, b = b, a
    return 2 * b * (b + 1) + Fraction(4, 3) * (b + 1) * (a - b)


def tensor_rep_diagram(m: int, n: int, charged: bool = True) -> WeightDiagram:
    """
    Weight diagram of C^m (x) C^n.

    Args:
        m: Dimension of the first SU(2) factor's module
        n: Dimension of the second
        charged: Include the scalar circle acting with charge 1

    Returns:
        mn weights (j, k), j in {m-1, m-3, ..., 1-m}, k likewise, all multiplicity 1

    Raises:
        InputError: If m or n is not positive
    """
    rep = IrrepDescriptor.tensor(m, n, charged)
    charge = 1 if charged else 0
    entries = {
        Weight((j, k), charge): 1
        for j in range(m - 1, -m, -2)
        for k in range(n - 1, -n, -2)
    }
    return WeightDiagram(rep.group, entries, rep.reality, rep.highest_weight)
