"""
Weight Core Module - Weight lattices, root data and Weyl groups

Exact weight-lattice arithmetic for products of A1 and A2 factors with an
optional central circle. Weights are integer vectors in the fundamental-weight
basis of each simple factor; the circle contributes a separate integer charge
that every Weyl group element leaves alone.

Author: Copolarity-Verify
"""

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Dict, FrozenSet, Iterable, List, Sequence, Tuple, Union

import numpy as np
import sympy

from .errors import ArithmeticOverflowError, InputError
from .logging_config import get_logger

logger = get_logger(__name__)

INT64_MIN: int = -(2 ** 63)
INT64_MAX: int = 2 ** 63 - 1


def checked(value: int) -> int:
    """
    Return value unchanged if it fits in a signed 64-bit integer.

    Raises:
        ArithmeticOverflowError: If the value is out of range
    """
    if value < INT64_MIN or value > INT64_MAX:
        raise ArithmeticOverflowError(f"Integer {value} left the signed 64-bit range")
    return value


class SimpleFactor(Enum):
    """Simple factor types in scope."""
    A1 = "A1"
    A2 = "A2"

    @property
    def rank(self) -> int:
        return 1 if self is SimpleFactor.A1 else 2

    @property
    def dim(self) -> int:
        return 3 if self is SimpleFactor.A1 else 8


# Positive roots in simple-root coordinates, per factor type
_POSITIVE_ROOT_COEFFS: Dict[SimpleFactor, Tuple[Tuple[int, ...], ...]] = {
    SimpleFactor.A1: ((1,),),
    SimpleFactor.A2: ((1, 0), (0, 1), (1, 1)),
}

_WEYL_ORDER: Dict[SimpleFactor, int] = {SimpleFactor.A1: 2, SimpleFactor.A2: 6}


def _as_factor(value: Union[SimpleFactor, str]) -> SimpleFactor:
    if isinstance(value, SimpleFactor):
        return value
    try:
        return SimpleFactor(str(value).upper())
    except ValueError as e:
        raise InputError(f"Unsupported simple factor: {value!r} (must be A1 or A2)") from e


@dataclass(frozen=True)
class GroupType:
    """
    Compact group type: an ordered product of A1/A2 factors and an optional central circle.

    Attributes:
        simple_factors: Ordered simple factors
        has_central_circle: True when a central U(1) is present
    """
    simple_factors: Tuple[SimpleFactor, ...]
    has_central_circle: bool = False

    def __post_init__(self) -> None:
        factors = tuple(_as_factor(f) for f in self.simple_factors)
        object.__setattr__(self, "simple_factors", factors)
        if not factors and not self.has_central_circle:
            raise InputError("A group type needs at least one factor")

    @property
    def semisimple_rank(self) -> int:
        return sum(f.rank for f in self.simple_factors)

    @property
    def rank(self) -> int:
        return self.semisimple_rank + (1 if self.has_central_circle else 0)

    @property
    def total_group_dim(self) -> int:
        return sum(f.dim for f in self.simple_factors) + (1 if self.has_central_circle else 0)

    @property
    def label(self) -> str:
        parts = (["U1"] if self.has_central_circle else []) + [f.value for f in self.simple_factors]
        return "x".join(parts)

    def factor_offsets(self) -> List[Tuple[SimpleFactor, int]]:
        """Each simple factor with the index of its first coordinate."""
        offsets = []
        offset = 0
        for factor in self.simple_factors:
            offsets.append((factor, offset))
            offset += factor.rank
        return offsets

    def check_weight(self, mu: "Weight") -> None:
        """
        Raises:
            InputError: If mu does not belong to this group's weight lattice
        """
        if len(mu.coords) != self.semisimple_rank:
            raise InputError(
                f"Weight {mu} has {len(mu.coords)} coordinates, group {self.label} needs {self.semisimple_rank}"
            )
        if not self.has_central_circle and mu.central_charge != 0:
            raise InputError(f"Weight {mu} carries a central charge but {self.label} has no central circle")

    def weight_vector(self, mu: "Weight") -> Tuple[int, ...]:
        """Coordinates of mu followed by the central charge slot when present; length equals rank."""
        self.check_weight(mu)
        if self.has_central_circle:
            return mu.coords + (mu.central_charge,)
        return mu.coords

    def to_dict(self) -> Dict[str, object]:
        return {
            "simple_factors": [f.value for f in self.simple_factors],
            "has_central_circle": self.has_central_circle,
            "dim": self.total_group_dim,
            "rank": self.rank,
        }

    @classmethod
    def parse(cls, label: str) -> "GroupType":
        """
        Parse labels such as "A2", "U1xA2", "A1xA1" or "U1xA1xA1".

        Raises:
            InputError: If the label names anything else
        """
        parts = [p for p in label.replace("*", "x").replace("X", "x").split("x") if p]
        circle = False
        factors = []
        for part in parts:
            if part.upper() == "U1":
                if circle:
                    raise InputError(f"Group label {label!r} names more than one central circle")
                circle = True
            else:
                factors.append(_as_factor(part))
        return cls(tuple(factors), circle)

    @classmethod
    def su3(cls) -> "GroupType":
        return cls((SimpleFactor.A2,), False)

    @classmethod
    def u3(cls) -> "GroupType":
        return cls((SimpleFactor.A2,), True)

    @classmethod
    def su2(cls) -> "GroupType":
        return cls((SimpleFactor.A1,), False)

    @classmethod
    def su2_su2(cls) -> "GroupType":
        return cls((SimpleFactor.A1, SimpleFactor.A1), False)

    @classmethod
    def u1_su2_su2(cls) -> "GroupType":
        return cls((SimpleFactor.A1, SimpleFactor.A1), True)


@dataclass(frozen=True, order=True)
class Weight:
    """
    Integral weight: fundamental-weight coordinates per simple factor plus a central charge.

    Attributes:
        coords: Fundamental-weight coordinates, one per simple root
        central_charge: Charge under the central circle (0 when there is none)
    """
    coords: Tuple[int, ...]
    central_charge: int = 0

    def __post_init__(self) -> None:
        coords = tuple(checked(int(c)) for c in self.coords)
        object.__setattr__(self, "coords", coords)
        object.__setattr__(self, "central_charge", checked(int(self.central_charge)))

    def __add__(self, other: "Weight") -> "Weight":
        self._check_same_shape(other)
        return Weight(tuple(checked(a + b) for a, b in zip(self.coords, other.coords)),
                      checked(self.central_charge + other.central_charge))

    def __sub__(self, other: "Weight") -> "Weight":
        self._check_same_shape(other)
        return Weight(tuple(checked(a - b) for a, b in zip(self.coords, other.coords)),
                      checked(self.central_charge - other.central_charge))

    def __neg__(self) -> "Weight":
        return Weight(tuple(-c for c in self.coords), -self.central_charge)

    def scaled(self, k: int) -> "Weight":
        return Weight(tuple(checked(k * c) for c in self.coords), checked(k * self.central_charge))

    def is_zero(self) -> bool:
        return self.central_charge == 0 and all(c == 0 for c in self.coords)

    def _check_same_shape(self, other: "Weight") -> None:
        if len(self.coords) != len(other.coords):
            raise InputError(f"Weights {self} and {other} have different lengths")

    def to_dict(self) -> Dict[str, object]:
        return {"coords": list(self.coords), "charge": self.central_charge}

    def __str__(self) -> str:
        body = ",".join(str(c) for c in self.coords)
        return f"({body}|{self.central_charge})" if self.central_charge else f"({body})"

    @classmethod
    def zero(cls, group: GroupType) -> "Weight":
        return cls((0,) * group.semisimple_rank, 0)


@dataclass(frozen=True)
class RationalDirection:
    """
    Integer direction in the torus Lie algebra (coroot coordinates plus a circle slot).

    Attributes:
        numerators: Integer vector
        reduced: True when the vector is primitive and its first nonzero entry is positive
    """
    numerators: Tuple[int, ...]
    reduced: bool = field(default=False)

    def __post_init__(self) -> None:
        nums = tuple(int(n) for n in self.numerators)
        object.__setattr__(self, "numerators", nums)
        if all(n == 0 for n in nums):
            raise InputError("A direction must be nonzero")
        if self.reduced:
            first = next(n for n in nums if n != 0)
            if _vector_gcd(nums) != 1 or first < 0:
                raise InputError(f"Direction {nums} is flagged reduced but is not primitive and sign-normalized")

    @classmethod
    def from_vector(cls, values: Sequence[int], reduce: bool = True) -> "RationalDirection":
        """
        Build a direction, reducing to the primitive sign-normalized representative by default.

        Raises:
            InputError: If values is the zero vector
        """
        nums = tuple(int(v) for v in values)
        if all(n == 0 for n in nums):
            raise InputError("A direction must be nonzero")
        if not reduce:
            return cls(nums, False)
        g = _vector_gcd(nums)
        nums = tuple(n // g for n in nums)
        if next(n for n in nums if n != 0) < 0:
            nums = tuple(-n for n in nums)
        return cls(nums, True)

    def dot(self, vector: Sequence[int]) -> int:
        if len(vector) != len(self.numerators):
            raise InputError(f"Direction {self.numerators} and vector {tuple(vector)} differ in length")
        return checked(sum(a * b for a, b in zip(self.numerators, vector)))

    def __len__(self) -> int:
        return len(self.numerators)


def _vector_gcd(values: Iterable[int]) -> int:
    g = 0
    for v in values:
        g = gcd(g, int(v))
    return g


def cartan_matrix(factor: Union[SimpleFactor, str]) -> np.ndarray:
    """
    Cartan matrix of a simple factor.

    Args:
        factor: A1 or A2

    Returns:
        Integer matrix: [[2]] for A1, [[2,-1],[-1,2]] for A2
    """
    factor = _as_factor(factor)
    if factor is SimpleFactor.A1:
        return np.array([[2]], dtype=np.int64)
    return np.array([[2, -1], [-1, 2]], dtype=np.int64)


@lru_cache(maxsize=None)
def group_cartan_matrix(group: GroupType) -> np.ndarray:
    """Block-diagonal Cartan matrix of the semisimple part (read-only)."""
    n = group.semisimple_rank
    matrix = np.zeros((n, n), dtype=np.int64)
    for factor, offset in group.factor_offsets():
        r = factor.rank
        matrix[offset:offset + r, offset:offset + r] = cartan_matrix(factor)
    matrix.flags.writeable = False
    return matrix


@lru_cache(maxsize=None)
def _inverse_cartan(group: GroupType) -> Tuple[Tuple[Fraction, ...], ...]:
    inverse = sympy.Matrix(group_cartan_matrix(group).tolist()).inv()
    return tuple(
        tuple(Fraction(int(sympy.fraction(inverse[i, j])[0]), int(sympy.fraction(inverse[i, j])[1]))
              for j in range(inverse.cols))
        for i in range(inverse.rows)
    )


def inner_product(group: GroupType, mu: Weight, nu: Weight) -> Fraction:
    """
    Weyl-invariant form on the semisimple part, normalized so roots have squared length 2.

    In fundamental coordinates the Gram matrix is the inverse Cartan matrix.
    The central charge does not enter.
    """
    group.check_weight(mu)
    group.check_weight(nu)
    gram = _inverse_cartan(group)
    total = Fraction(0)
    for i, a in enumerate(mu.coords):
        if a == 0:
            continue
        row = gram[i]
        for j, b in enumerate(nu.coords):
            if b:
                total += row[j] * a * b
    return total


def simple_root_coordinates(group: GroupType, mu: Weight) -> Tuple[Fraction, ...]:
    """Coordinates of the semisimple part of mu in the basis of simple roots."""
    group.check_weight(mu)
    gram = _inverse_cartan(group)
    n = group.semisimple_rank
    return tuple(sum((mu.coords[i] * gram[i][j] for i in range(n)), Fraction(0)) for j in range(n))


def pairing(group: GroupType, mu: Weight, coroot_index: int) -> int:
    """
    Pair a weight with a simple coroot.

    Args:
        group: Group type
        mu: Weight in fundamental coordinates
        coroot_index: 1-based index of the simple coroot

    Returns:
        <mu, alpha_i^vee>, the i-th fundamental coordinate of mu

    Raises:
        InputError: If the index is out of range
    """
    group.check_weight(mu)
    if not 1 <= coroot_index <= group.semisimple_rank:
        raise InputError(f"Coroot index {coroot_index} out of range 1..{group.semisimple_rank} for {group.label}")
    return mu.coords[coroot_index - 1]


def simple_roots(group: GroupType) -> List[Weight]:
    """Simple roots in fundamental coordinates (rows of the Cartan matrix)."""
    matrix = group_cartan_matrix(group)
    return [Weight(tuple(int(x) for x in matrix[i]), 0) for i in range(group.semisimple_rank)]


@lru_cache(maxsize=None)
def positive_root_data(group: GroupType) -> Tuple[Tuple[Weight, Tuple[int, ...]], ...]:
    """
    Positive roots with their simple-root coefficient vectors.

    Returns:
        Tuple of (root in fundamental coordinates, coefficient vector over all simple roots)
    """
    matrix = group_cartan_matrix(group)
    n = group.semisimple_rank
    data = []
    for factor, offset in group.factor_offsets():
        for local in _POSITIVE_ROOT_COEFFS[factor]:
            coeffs = [0] * n
            coeffs[offset:offset + factor.rank] = local
            coords = np.array(coeffs, dtype=np.int64) @ matrix
            data.append((Weight(tuple(int(c) for c in coords), 0), tuple(coeffs)))
    return tuple(data)


def positive_roots(group: GroupType) -> List[Weight]:
    """
    Positive roots in fundamental coordinates, central charge 0.

    A2 contributes alpha1, alpha2, alpha1+alpha2; A1 contributes alpha.
    """
    return [root for root, _ in positive_root_data(group)]


def rho(group: GroupType) -> Weight:
    """Half sum of positive roots: all fundamental coordinates equal to 1."""
    return Weight((1,) * group.semisimple_rank, 0)


def is_dominant(mu: Weight) -> bool:
    return all(c >= 0 for c in mu.coords)


def simple_reflection(group: GroupType, mu: Weight, index: int) -> Weight:
    """Apply the simple reflection s_i (1-based index) to mu."""
    c = pairing(group, mu, index)
    if c == 0:
        return mu
    return mu - simple_roots(group)[index - 1].scaled(c)


def dominant_conjugate(group: GroupType, mu: Weight) -> Weight:
    """The unique dominant weight in the Weyl orbit of mu."""
    group.check_weight(mu)
    current = mu
    while True:
        negative = next((i for i, c in enumerate(current.coords) if c < 0), None)
        if negative is None:
            return current
        current = simple_reflection(group, current, negative + 1)


def weyl_orbit(group: GroupType, mu: Weight) -> FrozenSet[Weight]:
    """
    Orbit of mu under the Weyl group (S2 per A1, S3 per A2, central charge fixed).

    Computed as the closure under simple reflections.
    """
    group.check_weight(mu)
    seen = {mu}
    frontier = [mu]
    while frontier:
        current = frontier.pop()
        for i in range(1, group.semisimple_rank + 1):
            image = simple_reflection(group, current, i)
            if image not in seen:
                seen.add(image)
                frontier.append(image)
    return frozenset(seen)


def weyl_group_order(group: GroupType) -> int:
    order = 1
    for factor in group.simple_factors:
        order *= _WEYL_ORDER[factor]
    return order


@lru_cache(maxsize=None)
def weyl_group(group: GroupType) -> Tuple[Tuple[int, Tuple[Tuple[int, ...], ...]], ...]:
    """
    All Weyl group elements as (sign, integer matrix acting on fundamental coordinates).

    Generated by breadth-first products of simple reflection matrices; the sign
    is (-1)^length.
    """
    n = group.semisimple_rank
    identity = np.eye(n, dtype=np.int64)
    generators = []
    for root_index, root in enumerate(simple_roots(group)):
        unit = np.zeros(n, dtype=np.int64)
        unit[root_index] = 1
        generators.append(identity - np.outer(np.array(root.coords, dtype=np.int64), unit))

    def key(m: np.ndarray) -> Tuple[Tuple[int, ...], ...]:
        return tuple(tuple(int(x) for x in row) for row in m)

    elements = {key(identity): 1}
    frontier = [(identity, 1)]
    while frontier:
        next_frontier = []
        for matrix, sign in frontier:
            for gen in generators:
                product = gen @ matrix
                k = key(product)
                if k not in elements:
                    elements[k] = -sign
                    next_frontier.append((product, -sign))
        frontier = next_frontier

    if len(elements) != weyl_group_order(group):
        raise InputError(f"Weyl group of {group.label} generated {len(elements)} elements")
    return tuple(sorted(((sign, m) for m, sign in elements.items()), key=lambda item: item[1]))


def apply_weyl_element(matrix: Tuple[Tuple[int, ...], ...], mu: Weight) -> Weight:
    """Apply a Weyl group matrix from weyl_group() to mu; the central charge is kept."""
    coords = tuple(checked(sum(row[j] * mu.coords[j] for j in range(len(row)))) for row in matrix)
    return Weight(coords, mu.central_charge)


def to_e_coordinates(mu: Weight, total_degree: int) -> Tuple[int, int, int]:
    """
    Exponents of an A2 weight against diag(t1, t2, t3) in U(3).

    The lift is x1 - x2 = p, x2 - x3 = q, x1 + x2 + x3 = total_degree, where
    (p, q) are the fundamental coordinates. For pi_{a,b} the total degree is
    a + 2b, so the highest weight lifts to (a+b, b, 0).

    Raises:
        InputError: If mu is not an A2 weight or the lift is not integral
    """
    if len(mu.coords) != 2:
        raise InputError(f"e-coordinates are defined for A2 weights only, got {mu}")
    p, q = mu.coords
    # 3 x3 = total_degree - p - 2q; every weight of pi_{a,b} has p + 2q = a + 2b mod 3
    numerator = total_degree - p - 2 * q
    if numerator % 3:
        raise InputError(f"Weight {mu} has no integral lift of total degree {total_degree}")
    x3 = numerator // 3
    x2 = x3 + q
    x1 = x2 + p
    return (x1, x2, x3)
