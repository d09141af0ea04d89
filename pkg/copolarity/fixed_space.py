"""
Fixed Space Module - Dimensions of fixed-point subspaces

Fixed-space dimensions of weight diagrams under circle subgroups (weight
annihilators), finite-order torus elements, and the swap / swap-conjugation /
conjugation involutions of C^n (x) C^n. Everything is exact: torus elements
are handled through congruences on exponent vectors and the character
average oracle works in the cyclotomic integers.

Author: Copolarity-Verify
"""

from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from itertools import combinations
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np
import sympy

from .errors import ComputationError, InputError
from .irreps import (
    IrrepDescriptor,
    Reality,
    WeightDiagram,
    character_polynomial,
    paper_shell_estimate,
    shell_line_bound,
)
from .logging_config import get_logger
from .weights import GroupType, RationalDirection, SimpleFactor, Weight, to_e_coordinates

logger = get_logger(__name__)


class BoundMode(Enum):
    """PAPER_BOUND reproduces the written per-family bounds; EXACT computes true maxima."""
    PAPER_BOUND = "PAPER_BOUND"
    EXACT = "EXACT"


@dataclass(frozen=True)
class TorusElement:
    """
    The torus element exp(2 pi i direction / order).

    The direction is reduced modulo the order componentwise. A direction of
    length 3 on an SU(3) diagram is read against diag(t1, t2, t3).

    Attributes:
        direction: Integer exponent vector
        order: Positive integer N
    """
    direction: Tuple[int, ...]
    order: int

    def __post_init__(self) -> None:
        if int(self.order) < 1:
            raise InputError(f"Torus element order must be positive, got {self.order}")
        order = int(self.order)
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "direction", tuple(int(d) % order for d in self.direction))

    @classmethod
    def identity(cls, nvars: int) -> "TorusElement":
        return cls((0,) * nvars, 1)

    @classmethod
    def theta_reflection(cls) -> "TorusElement":
        """diag(theta, -theta, -theta) with theta a primitive cube root of 1, as order 6 direction (2, 5, 5)."""
        return cls((2, 5, 5), 6)

    def to_dict(self) -> Dict[str, object]:
        return {"direction": list(self.direction), "order": self.order}


class InvolutionType(Enum):
    SWAP = "SWAP"
    SWAP_CONJ = "SWAP_CONJ"
    CONJ = "CONJ"


@dataclass(frozen=True)
class InvolutionKind:
    """
    One of the involutions +-iota (swap), +-iota epsilon (swap with conjugation), +-epsilon (conjugation).

    Attributes:
        kind: Involution type
        sign: +1 or -1
    """
    kind: InvolutionType
    sign: int = 1

    def __post_init__(self) -> None:
        if not isinstance(self.kind, InvolutionType):
            object.__setattr__(self, "kind", InvolutionType(str(self.kind).upper()))
        if self.sign not in (1, -1):
            raise InputError(f"Involution sign must be +1 or -1, got {self.sign}")

    @property
    def label(self) -> str:
        return f"{'+' if self.sign > 0 else '-'}{self.kind.value}"


@dataclass(frozen=True)
class FixedSpaceResult:
    """
    Real dimension of a fixed space together with how it was obtained.

    Attributes:
        real_dim: Real dimension
        mode: PAPER_BOUND or EXACT
        witness: Direction realizing the value, when one exists
        complex_dim: Complex dimension when meaningful
        detail: Extra data (bound source, shell counts)
    """
    real_dim: int
    mode: BoundMode
    witness: Optional[RationalDirection] = None
    complex_dim: Optional[int] = None
    detail: Dict[str, object] = field(default_factory=dict, compare=False)

    def to_dict(self) -> Dict[str, object]:
        return {
            "real_dim": self.real_dim,
            "mode": self.mode.value,
            "witness": list(self.witness.numerators) if self.witness else None,
            "complex_dim": self.complex_dim,
        }


def _sum_fixed(diagram: WeightDiagram, vectors: Dict[Weight, Tuple[int, ...]],
               direction: Sequence[int]) -> int:
    total = 0
    for mu, mult in diagram.entries.items():
        value = sum(a * b for a, b in zip(vectors[mu], direction))
        if value == 0:
            total += mult
    return total


def _weight_vectors(diagram: WeightDiagram) -> Dict[Weight, Tuple[int, ...]]:
    return {mu: diagram.group.weight_vector(mu) for mu in diagram.entries}


def annihilator_fixed_dim(diagram: WeightDiagram, direction: RationalDirection) -> FixedSpaceResult:
    """
    Real dimension fixed by the circle generated by a torus direction.

    Sums the multiplicities of weights mu with <mu, direction> = 0, the central
    charge slot included, and applies the diagram's realification rule.

    Raises:
        InputError: If the direction length differs from the group rank
    """
    if len(direction) != diagram.group.rank:
        raise InputError(
            f"Direction {direction.numerators} has length {len(direction)}, group {diagram.group.label} has rank {diagram.group.rank}"
        )
    complex_dim = _sum_fixed(diagram, _weight_vectors(diagram), direction.numerators)
    return FixedSpaceResult(complex_dim * diagram.realification_factor, BoundMode.EXACT, direction, complex_dim)


def family_of(diagram: WeightDiagram) -> Tuple[str, Tuple[int, ...]]:
    """
    Identify the family of a diagram from its group and highest weight.

    Returns:
        ("tensor", (m, n)), ("su3", (a, b)) or ("u3", (a, b))
    """
    group = diagram.group
    if diagram.highest_weight is None:
        raise InputError("Family bounds need a diagram with a highest weight")
    coords = diagram.highest_weight.coords
    if group.simple_factors == (SimpleFactor.A1, SimpleFactor.A1):
        return ("tensor", (coords[0] + 1, coords[1] + 1))
    if group.simple_factors == (SimpleFactor.A2,):
        a, b = coords
        return ("u3" if group.has_central_circle else "su3", (a, b))
    raise InputError(f"No family bound is known for group {group.label}")


def family_paper_bound(family: str, params: Sequence[int], reality: Reality) -> int:
    """
    The stated bound on the real dimension fixed by a circle, per family.

    Charged families: two weight spaces, 4 times the largest multiplicity
    (1 for the tensor family, min(a, b) + 1 for U(3)). SU(3) real form of
    pi_{a,a}: (a+1)^2 from two weights per hexagon and the center. Other
    SU(3): the shell estimate 2b(b+1) + (4/3)(b+1)(a-b), rounded down.
    """
    if family == "tensor":
        return 4
    a, b = max(params), min(params)
    if family == "u3":
        return 4 * (b + 1)
    if family != "su3":
        raise InputError(f"Unknown family {family!r}")
    if reality is Reality.REAL_FORM:
        if a != b:
            raise InputError(f"Only pi_(a,a) has a real form, got ({a}, {b})")
        return (a + 1) ** 2
    estimate = paper_shell_estimate(a, b)
    return estimate.numerator // estimate.denominator


def family_line_bound(family: str, params: Sequence[int], reality: Reality) -> int:
    """
    Rigorous upper bound on the real dimension any circle can fix.

    Tensor family: weights form an m x n grid in an affine plane, and a line
    meets it in at most max(m, n) points. SU(3): a line through the origin
    meets every shell boundary in at most two weights. Charged U(3): the line
    need not pass through the origin; it contains the edge of at most one
    shell, so an edge of at most a+1 weights of multiplicity at most b+1 is
    added to two weights per shell.
    """
    factor = 2 if reality is Reality.COMPLEX_TYPE else 1
    if family == "tensor":
        return factor * max(params)
    a, b = max(params), min(params)
    if family == "su3":
        return factor * shell_line_bound(a, b)
    if family != "u3":
        raise InputError(f"Unknown family {family!r}")
    shells = b * (b + 1) // 2 + (b + 1) * ((a - b) // 3 + 1)
    return factor * (2 * shells + (a + 1) * (b + 1))


def line_weight_bound(diagram: WeightDiagram) -> int:
    """family_line_bound for the family of a diagram."""
    family, params = family_of(diagram)
    return family_line_bound(family, params, diagram.reality)


def _paper_bound(diagram: WeightDiagram) -> FixedSpaceResult:
    family, params = family_of(diagram)
    if diagram.group.has_central_circle:
        # at most two weight spaces, each of real dimension 2 * multiplicity
        value = 4 * diagram.max_multiplicity()
        source = "two weight spaces"
    else:
        value = family_paper_bound(family, params, diagram.reality)
        source = "shell count" if diagram.reality is Reality.REAL_FORM else "shell estimate"
    return FixedSpaceResult(value, BoundMode.PAPER_BOUND, None, None, {"source": source})


def _cross(u: Sequence[int], v: Sequence[int]) -> Tuple[int, int, int]:
    return tuple(int(x) for x in np.cross(np.array(u, dtype=np.int64), np.array(v, dtype=np.int64)))


def candidate_directions(diagram: WeightDiagram) -> List[RationalDirection]:
    """
    Normals of every hyperplane that could carry a maximal annihilator.

    Rank 2: the normal of each weight line. Rank 3: normals of planes spanned by
    two weights, and of planes through one weight and a coordinate axis; unit
    normals cover the planes containing no nonzero weight.
    """
    rank = diagram.group.rank
    if rank < 2:
        raise InputError(f"Circle annihilators need rank at least 2, group {diagram.group.label} has rank {rank}")
    if rank > 3:
        raise InputError(f"Annihilator enumeration supports rank up to 3, got {rank}")
    vectors = sorted({v for v in _weight_vectors(diagram).values() if any(v)})
    units = [tuple(1 if i == k else 0 for i in range(rank)) for k in range(rank)]
    raw = list(units)
    if rank == 2:
        raw.extend((-v[1], v[0]) for v in vectors)
    else:
        raw.extend(_cross(u, v) for u, v in combinations(vectors, 2))
        raw.extend(_cross(v, e) for v in vectors for e in units)
    normals = {RationalDirection.from_vector(r) for r in raw if any(r)}
    return sorted(normals, key=lambda d: d.numerators)


def max_circle_fixed_dim(diagram: WeightDiagram, mode: BoundMode) -> FixedSpaceResult:
    """
    Largest real dimension fixed by a circle subgroup of the torus.

    Args:
        diagram: Weight diagram of rank 2 or 3
        mode: PAPER_BOUND returns the stated family bound (two weight spaces
              for charged families, the shell estimate for SU(3)); EXACT
              maximizes annihilator_fixed_dim over candidate_directions

    Returns:
        FixedSpaceResult; in EXACT mode the witness is the lexicographically
        smallest direction attaining the maximum

    Raises:
        InputError: If the rank is below 2 or no bound applies
    """
    if diagram.group.rank < 2:
        raise InputError(f"Circle annihilators need rank at least 2, group {diagram.group.label} has rank {diagram.group.rank}")
    if mode is BoundMode.PAPER_BOUND:
        return _paper_bound(diagram)

    vectors = _weight_vectors(diagram)
    best: Optional[Tuple[int, RationalDirection]] = None
    candidates = candidate_directions(diagram)
    for direction in candidates:
        value = _sum_fixed(diagram, vectors, direction.numerators)
        if best is None or value > best[0]:
            best = (value, direction)
    complex_dim, witness = best
    logger.debug(f"Exact circle maximum on {diagram!r}: {complex_dim} over {len(candidates)} directions")
    return FixedSpaceResult(
        complex_dim * diagram.realification_factor, BoundMode.EXACT, witness, complex_dim,
        {"candidates": len(candidates)},
    )


def _exponent_vectors(diagram_group: GroupType, highest_weight: Optional[Weight],
                      h: TorusElement) -> Tuple[bool, int]:
    """Decide whether h is read in e-coordinates; returns (use_e, total_degree)."""
    if len(h.direction) == diagram_group.rank:
        return False, 0
    if (len(h.direction) == 3 and diagram_group.simple_factors == (SimpleFactor.A2,)
            and not diagram_group.has_central_circle):
        if highest_weight is None:
            raise InputError("e-coordinates need the highest weight of the diagram")
        a, b = highest_weight.coords
        return True, a + 2 * b
    raise InputError(
        f"Torus element of length {len(h.direction)} does not match group {diagram_group.label} of rank {diagram_group.rank}"
    )


def _exponent(group: GroupType, mu: Weight, use_e: bool, total_degree: int) -> Tuple[int, ...]:
    if use_e:
        return to_e_coordinates(mu, total_degree)
    return group.weight_vector(mu)


def eigenspace_dims(diagram: WeightDiagram, h: TorusElement) -> List[int]:
    """
    Complex dimensions of the eigenspaces of h, indexed by k for eigenvalue zeta_N^k.

    The entries sum to the complex dimension of the diagram.
    """
    use_e, degree = _exponent_vectors(diagram.group, diagram.highest_weight, h)
    counts = [0] * h.order
    for mu, mult in diagram.entries.items():
        exponent = _exponent(diagram.group, mu, use_e, degree)
        counts[sum(x * d for x, d in zip(exponent, h.direction)) % h.order] += mult
    return counts


def element_fixed_dim(diagram: WeightDiagram, h: TorusElement) -> FixedSpaceResult:
    """
    Real dimension of the subspace fixed by a finite-order torus element.

    Sums multiplicities of weights with <mu, direction> = 0 mod N. For the real
    form of pi_{a,a} the real dimension equals the complex dimension of the
    fixed space of the complexification.

    Raises:
        InputError: If h does not match the diagram's coordinates
    """
    complex_dim = eigenspace_dims(diagram, h)[0]
    return FixedSpaceResult(complex_dim * diagram.realification_factor, BoundMode.EXACT, None, complex_dim,
                            {"element": h.to_dict()})


@lru_cache(maxsize=None)
def _cyclotomic_coefficients(order: int) -> Tuple[int, ...]:
    """Coefficients of the order-th cyclotomic polynomial, highest degree first."""
    x = sympy.Symbol("x")
    return tuple(int(c) for c in sympy.Poly(sympy.cyclotomic_poly(order, x), x).all_coeffs())


def _reduce_mod_cyclotomic(coefficients: List[int], order: int) -> List[int]:
    """Remainder of sum c_k x^k modulo the monic cyclotomic polynomial; ascending coefficients."""
    modulus = _cyclotomic_coefficients(order)
    degree = len(modulus) - 1
    remainder = list(coefficients)
    for top in range(len(remainder) - 1, degree - 1, -1):
        factor = remainder[top]
        if factor:
            for offset, c in enumerate(modulus):
                remainder[top - offset] -= factor * c
    return remainder[:degree]


def element_fixed_dim_oracle(rep: IrrepDescriptor, h: TorusElement) -> int:
    """
    Complex fixed dimension of h as the average of the character over the cyclic group it generates.

    With c_k the number of weights on which h acts by zeta^k, the sum
    sum_j chi(h^j) is the cyclotomic integer sum_j sum_k c_k zeta^{jk}. It is
    reduced modulo the N-th cyclotomic polynomial; the remainder must be a
    constant divisible by N, and the quotient is the fixed dimension.

    Raises:
        ComputationError: If the average is not a rational integer
    """
    polynomial = character_polynomial(rep)
    use_e, degree = _exponent_vectors(rep.group, rep.highest_weight, h)
    n = h.order
    counts = [0] * n
    charged = rep.group.has_central_circle
    for exponent, coefficient in polynomial:
        mu = Weight(exponent[:-1], exponent[-1]) if charged else Weight(exponent, 0)
        vector = _exponent(rep.group, mu, use_e, degree)
        counts[sum(x * d for x, d in zip(vector, h.direction)) % n] += coefficient

    total = [0] * n
    for j in range(n):
        for k, c in enumerate(counts):
            total[(j * k) % n] += c
    remainder = _reduce_mod_cyclotomic(total, n)
    constant = remainder[0] if remainder else 0
    if any(remainder[1:]):
        raise ComputationError("Character average is not a rational integer", detail={"remainder": remainder})
    if constant % n:
        raise ComputationError(f"Character average {constant}/{n} is not integral",
                               detail={"counts": counts, "order": n})
    return constant // n


def involution_fixed_dim(n: int, kind: InvolutionKind, m: Optional[int] = None) -> int:
    """
    Real fixed dimension of an involution on the realification of C^m (x) C^n.

    Args:
        n: Dimension of the second factor (both factors for SWAP / SWAP_CONJ)
        kind: Involution
        m: Dimension of the first factor for CONJ (defaults to n)

    Returns:
        SWAP: n(n+1) for +, n(n-1) for - (symmetric / skew tensors);
        SWAP_CONJ: n^2 (Hermitian or skew-Hermitian tensors);
        CONJ: mn, half of the ambient real dimension

    Raises:
        InputError: If a dimension is not positive
    """
    m = n if m is None else m
    if n < 1 or m < 1:
        raise InputError(f"Tensor dimensions must be positive, got m={m}, n={n}")
    if kind.kind is InvolutionType.SWAP:
        return n * (n + kind.sign)
    if kind.kind is InvolutionType.SWAP_CONJ:
        return n * n
    return m * n


def signed_permutation_fixed_dim(n: int, kind: InvolutionKind, m: Optional[int] = None) -> int:
    """
    Brute-force fixed dimension from the explicit real matrix of the involution.

    The real basis is {e_ij, i e_ij}. The involution matrix M is built entry by
    entry and the fixed dimension is 2mn - rank(M - I).
    """
    m = n if m is None else m
    if n < 1 or m < 1:
        raise InputError(f"Tensor dimensions must be positive, got m={m}, n={n}")
    if kind.kind is not InvolutionType.CONJ and m != n:
        raise InputError("Swapping factors needs equal dimensions")
    size = 2 * m * n

    def index(i: int, j: int, imaginary: int) -> int:
        return 2 * (i * n + j) + imaginary

    matrix = np.zeros((size, size), dtype=np.int64)
    s = kind.sign
    for i in range(m):
        for j in range(n):
            if kind.kind is InvolutionType.SWAP:
                matrix[index(j, i, 0), index(i, j, 0)] = s
                matrix[index(j, i, 1), index(i, j, 1)] = s
            elif kind.kind is InvolutionType.SWAP_CONJ:
                matrix[index(j, i, 0), index(i, j, 0)] = s
                matrix[index(j, i, 1), index(i, j, 1)] = -s
            else:
                matrix[index(i, j, 0), index(i, j, 0)] = s
                matrix[index(i, j, 1), index(i, j, 1)] = -s
    if not np.array_equal(matrix @ matrix, np.eye(size, dtype=np.int64)):
        raise ComputationError(f"{kind.label} matrix is not an involution")
    return size - int(np.linalg.matrix_rank(matrix - np.eye(size, dtype=np.int64)))
