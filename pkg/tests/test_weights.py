"""
Tests for weights: group types, weights, Cartan data and the Weyl group.
"""

from fractions import Fraction
from itertools import product

import numpy as np
import pytest

from copolarity.errors import ArithmeticOverflowError, InputError
from copolarity.weights import (
    GroupType,
    RationalDirection,
    SimpleFactor,
    Weight,
    apply_weyl_element,
    cartan_matrix,
    group_cartan_matrix,
    checked,
    dominant_conjugate,
    inner_product,
    pairing,
    positive_roots,
    rho,
    simple_reflection,
    simple_root_coordinates,
    simple_roots,
    to_e_coordinates,
    weyl_group,
    weyl_group_order,
    weyl_orbit,
)


class TestCartanMatrix:
    def test_a1(self):
        assert cartan_matrix(SimpleFactor.A1).tolist() == [[2]]

    def test_a2(self):
        assert cartan_matrix("A2").tolist() == [[2, -1], [-1, 2]]

    def test_unknown_factor(self):
        with pytest.raises(InputError):
            cartan_matrix("G2")

    def test_group_matrix_is_read_only(self):
        matrix = group_cartan_matrix(GroupType.u1_su2_su2())
        assert matrix.tolist() == [[2, 0], [0, 2]]
        assert matrix.dtype == np.int64
        with pytest.raises(ValueError):
            matrix[0, 0] = 5


class TestGroupType:
    def test_u3_counts(self):
        group = GroupType.u3()
        assert group.rank == 3
        assert group.semisimple_rank == 2
        assert group.total_group_dim == 9
        assert group.label == "U1xA2"

    def test_tensor_group_dim(self):
        assert GroupType.u1_su2_su2().total_group_dim == 7
        assert GroupType.su3().total_group_dim == 8

    @pytest.mark.parametrize("label", ["A2", "U1xA2", "A1xA1", "U1xA1xA1", "A1"])
    def test_parse_round_trip(self, label):
        assert GroupType.parse(label).label == label

    def test_parse_rejects_unknown(self):
        with pytest.raises(InputError):
            GroupType.parse("B2")

    def test_weight_vector_appends_charge(self):
        assert GroupType.u3().weight_vector(Weight((1, 0), 1)) == (1, 0, 1)
        assert GroupType.su3().weight_vector(Weight((1, 0))) == (1, 0)

    def test_check_weight_length(self):
        with pytest.raises(InputError):
            GroupType.su3().check_weight(Weight((1, 0, 0)))


class TestWeight:
    def test_arithmetic(self):
        mu = Weight((1, 2), 1)
        nu = Weight((0, -1), 1)
        assert mu + nu == Weight((1, 1), 2)
        assert mu - nu == Weight((1, 3), 0)
        assert -mu == Weight((-1, -2), -1)
        assert mu.scaled(3) == Weight((3, 6), 3)

    def test_zero(self):
        assert Weight.zero(GroupType.u3()).is_zero()
        assert not Weight((0, 0), 1).is_zero()

    def test_overflow_is_detected(self):
        with pytest.raises(ArithmeticOverflowError):
            checked(2 ** 63)
        with pytest.raises(ArithmeticOverflowError):
            Weight((2 ** 62,)) + Weight((2 ** 62,))

    def test_str(self):
        assert str(Weight((1, -1))) == "(1,-1)"
        assert str(Weight((1, 0), 2)) == "(1,0|2)"


class TestPairing:
    def test_highest_weight_pairing(self):
        # (A2, mu = 2 lambda1 + lambda2, i = 1) -> 2
        assert pairing(GroupType.su3(), Weight((2, 1)), 1) == 2

    def test_simple_root_pairing(self):
        # alpha1 = 2 lambda1 - lambda2
        alpha1 = simple_roots(GroupType.su3())[0]
        assert alpha1 == Weight((2, -1))
        assert pairing(GroupType.su3(), alpha1, 2) == -1

    @pytest.mark.parametrize("index", [0, 3])
    def test_index_out_of_range(self, index):
        with pytest.raises(InputError):
            pairing(GroupType.su3(), Weight((1, 0)), index)


class TestRoots:
    def test_positive_roots_a2(self):
        assert positive_roots(GroupType.su3()) == [Weight((2, -1)), Weight((-1, 2)), Weight((1, 1))]

    def test_positive_roots_of_product(self):
        assert positive_roots(GroupType.su2_su2()) == [Weight((2, 0)), Weight((0, 2))]

    def test_rho(self):
        assert rho(GroupType.su3()) == Weight((1, 1))

    def test_roots_have_length_two(self):
        group = GroupType.su3()
        for root in positive_roots(group):
            assert inner_product(group, root, root) == 2

    def test_fundamental_weight_norms(self):
        group = GroupType.su3()
        assert inner_product(group, Weight((1, 0)), Weight((1, 0))) == Fraction(2, 3)
        assert inner_product(group, Weight((1, 0)), Weight((0, 1))) == Fraction(1, 3)


class TestWeylGroup:
    def test_orbit_of_lambda1(self):
        orbit = weyl_orbit(GroupType.su3(), Weight((1, 0)))
        assert orbit == {Weight((1, 0)), Weight((-1, 1)), Weight((0, -1))}

    def test_orbit_of_adjoint(self):
        assert len(weyl_orbit(GroupType.su3(), Weight((1, 1)))) == 6

    def test_orbit_keeps_charge(self):
        orbit = weyl_orbit(GroupType.u3(), Weight((1, 0), 1))
        assert all(mu.central_charge == 1 for mu in orbit)

    def test_simple_reflection(self):
        assert simple_reflection(GroupType.su3(), Weight((1, 0)), 1) == Weight((-1, 1))

    def test_dominant_conjugate(self):
        assert dominant_conjugate(GroupType.su3(), Weight((0, -1))) == Weight((1, 0))
        assert dominant_conjugate(GroupType.su3(), Weight((-1, -1))) == Weight((1, 1))

    @pytest.mark.parametrize("group, order", [
        (GroupType.su2(), 2),
        (GroupType.su3(), 6),
        (GroupType.su2_su2(), 4),
        (GroupType.u3(), 6),
    ])
    def test_group_order(self, group, order):
        assert weyl_group_order(group) == order
        assert len(weyl_group(group)) == order

    def test_signs_balance(self):
        assert sum(sign for sign, _ in weyl_group(GroupType.su3())) == 0

    def test_elements_map_rho_onto_orbit(self):
        group = GroupType.su3()
        images = {apply_weyl_element(matrix, rho(group)) for _, matrix in weyl_group(group)}
        assert images == weyl_orbit(group, rho(group))


SAMPLE_GROUPS = [GroupType.su2(), GroupType.su3(), GroupType.su2_su2(), GroupType.u3()]


def sample_weights(group, reach=2):
    """Every weight with fundamental coordinates in [-reach, reach]."""
    charge = 1 if group.has_central_circle else 0
    return [Weight(coords, charge) for coords in product(range(-reach, reach + 1), repeat=group.semisimple_rank)]


class TestWeylInvariants:
    @pytest.mark.parametrize("group", SAMPLE_GROUPS, ids=lambda g: g.label)
    def test_simple_reflections_are_involutions(self, group):
        for mu in sample_weights(group):
            for i in range(1, group.semisimple_rank + 1):
                assert simple_reflection(group, simple_reflection(group, mu, i), i) == mu

    @pytest.mark.parametrize("group", SAMPLE_GROUPS, ids=lambda g: g.label)
    def test_pairing_is_additive(self, group):
        weights = sample_weights(group, reach=1)
        for mu in weights:
            for nu in weights:
                for i in range(1, group.semisimple_rank + 1):
                    assert pairing(group, mu + nu, i) == pairing(group, mu, i) + pairing(group, nu, i)

    @pytest.mark.parametrize("group", SAMPLE_GROUPS, ids=lambda g: g.label)
    def test_weyl_group_permutes_roots_up_to_sign(self, group):
        positive = set(positive_roots(group))
        for _, matrix in weyl_group(group):
            images = {apply_weyl_element(matrix, root) for root in positive}
            assert all(image in positive or -image in positive for image in images)
            assert {image if image in positive else -image for image in images} == positive

    @pytest.mark.parametrize("group", SAMPLE_GROUPS, ids=lambda g: g.label)
    def test_orbits_closed_under_simple_reflections(self, group):
        for mu in sample_weights(group):
            orbit = weyl_orbit(group, mu)
            assert dominant_conjugate(group, mu) in orbit
            for nu in orbit:
                for i in range(1, group.semisimple_rank + 1):
                    assert simple_reflection(group, nu, i) in orbit

    def test_simple_root_coordinates(self):
        group = GroupType.su3()
        alpha1, alpha2 = simple_roots(group)
        assert simple_root_coordinates(group, alpha1) == (1, 0)
        assert simple_root_coordinates(group, alpha2) == (0, 1)
        assert simple_root_coordinates(group, rho(group)) == (1, 1)
        assert simple_root_coordinates(group, Weight((1, 0))) == (Fraction(2, 3), Fraction(1, 3))

class TestDirections:
    def test_reduction(self):
        direction = RationalDirection.from_vector([-2, 4, 0])
        assert direction.numerators == (1, -2, 0)
        assert direction.reduced

    def test_unreduced_kept(self):
        assert RationalDirection.from_vector([2, 4], reduce=False).numerators == (2, 4)

    def test_zero_rejected(self):
        with pytest.raises(InputError):
            RationalDirection.from_vector([0, 0])

    def test_false_reduced_flag(self):
        with pytest.raises(InputError):
            RationalDirection((2, 4), reduced=True)

    def test_dot(self):
        assert RationalDirection((1, 2)).dot((3, -1)) == 1
        with pytest.raises(InputError):
            RationalDirection((1, 2)).dot((1, 2, 3))


class TestECoordinates:
    def test_highest_weight_lift(self):
        # pi_{a,b} lifts with total degree a + 2b to (a+b, b, 0)
        assert to_e_coordinates(Weight((2, 1)), 4) == (3, 1, 0)

    def test_lift_has_the_requested_degree(self):
        x1, x2, x3 = to_e_coordinates(Weight((-1, 2)), 3)
        assert (x1 - x2, x2 - x3) == (-1, 2)
        assert x1 + x2 + x3 == 3

    def test_non_integral_lift(self):
        with pytest.raises(InputError):
            to_e_coordinates(Weight((1, 0)), 0)
