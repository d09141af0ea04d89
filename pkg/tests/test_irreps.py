"""
Tests for the irrep engine: Weyl dimensions, Freudenthal diagrams, characters and shells.
"""

from fractions import Fraction

import pytest

from copolarity import irreps
from copolarity.errors import ComputationError, InputError
from copolarity.irreps import (
    IrrepDescriptor,
    Reality,
    ShellKind,
    WeightDiagram,
    character_polynomial,
    freudenthal_diagram,
    paper_shell_estimate,
    shell_line_bound,
    su3_shells,
    tensor_rep_diagram,
    weyl_dim,
)
from copolarity.weights import GroupType, Weight, simple_root_coordinates


def assert_paths_agree(rep):
    diagram = freudenthal_diagram(rep)
    character = character_polynomial(rep)
    assert len(character) == len(diagram.entries)
    for mu, mult in diagram.items():
        assert character.coefficient(rep.group.weight_vector(mu)) == mult
    assert diagram.complex_dim == weyl_dim(rep)


class TestDescriptor:
    def test_su3_reality_defaults(self):
        assert IrrepDescriptor.su3(2, 2).reality is Reality.REAL_FORM
        assert IrrepDescriptor.su3(2, 1).reality is Reality.COMPLEX_TYPE

    def test_circle_forces_complex_type(self):
        with pytest.raises(InputError):
            IrrepDescriptor(GroupType.u3(), Weight((1, 1), 1), Reality.REAL_FORM)

    def test_non_dominant_rejected(self):
        with pytest.raises(InputError):
            IrrepDescriptor.su3(-1, 2)

    def test_tensor_dimensions_positive(self):
        with pytest.raises(InputError):
            IrrepDescriptor.tensor(0, 3)


class TestWeylDim:
    @pytest.mark.parametrize("a, b, dim", [(0, 0, 1), (1, 0, 3), (1, 1, 8), (2, 1, 15), (3, 0, 10), (2, 2, 27)])
    def test_su3(self, a, b, dim):
        assert weyl_dim(IrrepDescriptor.su3(a, b)) == dim

    def test_tensor(self):
        assert weyl_dim(IrrepDescriptor.tensor(4, 5)) == 20

    def test_circle_contributes_nothing(self):
        assert weyl_dim(IrrepDescriptor.u3(2, 1)) == 15


class TestFreudenthal:
    def test_trivial_representation(self):
        diagram = freudenthal_diagram(IrrepDescriptor.su3(0, 0))
        assert diagram.items() == [(Weight((0, 0)), 1)]
        assert diagram.real_dim == 1

    def test_adjoint(self):
        diagram = freudenthal_diagram(IrrepDescriptor.su3(1, 1))
        assert diagram.multiplicity(Weight((0, 0))) == 2
        assert diagram.multiplicity(Weight((2, -1))) == 1
        assert diagram.complex_dim == 8
        assert diagram.real_dim == 8
        assert diagram.is_weyl_invariant()
        assert diagram.is_negation_symmetric()

    @pytest.mark.parametrize("a", range(7))
    def test_zero_weight_of_real_form(self, a):
        assert freudenthal_diagram(IrrepDescriptor.su3(a, a)).multiplicity(Weight((0, 0))) == a + 1

    def test_complex_type_is_not_negation_symmetric(self):
        diagram = freudenthal_diagram(IrrepDescriptor.su3(1, 0))
        assert not diagram.is_negation_symmetric()
        assert diagram.real_dim == 6

    def test_charge_is_carried(self):
        diagram = freudenthal_diagram(IrrepDescriptor.u3(1, 1, charge=2))
        assert all(mu.central_charge == 2 for mu in diagram.weights())
        assert diagram.multiplicity(Weight((0, 0), 2)) == 2
        assert diagram.real_dim == 16

    def test_tensor_family_matches_direct_construction(self):
        assert freudenthal_diagram(IrrepDescriptor.tensor(2, 3)) == tensor_rep_diagram(2, 3)

    def test_empty_diagram_rejected(self):
        with pytest.raises(InputError):
            WeightDiagram(GroupType.su3(), {})

    def test_to_dict_is_sorted(self):
        data = freudenthal_diagram(IrrepDescriptor.su3(1, 0)).to_dict()
        assert data["complex_dim"] == 3
        assert [w["weight"] for w in data["weights"]] == sorted(w["weight"] for w in data["weights"])


class TestCharacter:
    def test_fundamental(self):
        character = character_polynomial(IrrepDescriptor.su3(1, 0))
        assert dict(character.terms) == {(1, 0): 1, (-1, 1): 1, (0, -1): 1}

    def test_charged_variable_appended(self):
        character = character_polynomial(IrrepDescriptor.tensor(2, 2))
        assert character.nvars == 3
        assert character.coefficient((1, -1, 1)) == 1

    @pytest.mark.parametrize("a, b", [(a, b) for a in range(4) for b in range(4)])
    def test_paths_agree_small(self, a, b):
        assert_paths_agree(IrrepDescriptor.su3(a, b))

    @pytest.mark.parametrize("rep", [
        IrrepDescriptor.u3(2, 1, charge=3),
        IrrepDescriptor.tensor(3, 4),
        IrrepDescriptor.tensor(5, 2, charged=False),
    ])
    def test_paths_agree_other_groups(self, rep):
        assert_paths_agree(rep)

    @pytest.mark.slow
    @pytest.mark.parametrize("a, b", [(a, b) for a in range(9) for b in range(9)])
    def test_paths_agree_grid(self, a, b):
        assert_paths_agree(IrrepDescriptor.su3(a, b))


class TestDiagramInvariants:
    @pytest.mark.slow
    @pytest.mark.parametrize("a, b", [(a, b) for a in range(9) for b in range(9)])
    def test_weyl_invariant_grid(self, a, b):
        assert freudenthal_diagram(IrrepDescriptor.su3(a, b)).is_weyl_invariant()

    @pytest.mark.parametrize("rep", [
        IrrepDescriptor.su3(3, 1),
        IrrepDescriptor.su3(2, 4),
        IrrepDescriptor.u3(2, 2, charge=-1),
        IrrepDescriptor.tensor(3, 4),
    ])
    def test_weights_lie_below_the_highest_weight(self, rep):
        diagram = freudenthal_diagram(rep)
        for mu in diagram.weights():
            gap = simple_root_coordinates(rep.group, rep.highest_weight - mu)
            assert all(c.denominator == 1 and c >= 0 for c in gap), mu

    @pytest.mark.parametrize("a", range(7))
    def test_real_form_is_negation_symmetric(self, a):
        diagram = freudenthal_diagram(IrrepDescriptor.su3(a, a))
        assert diagram.is_negation_symmetric()
        assert diagram.is_weyl_invariant()

    def test_root_cone_sentinel(self, monkeypatch):
        monkeypatch.setattr(irreps, "simple_root_coordinates", lambda group, mu: (Fraction(1, 2), Fraction(0)))
        with pytest.raises(ComputationError):
            freudenthal_diagram(IrrepDescriptor.su3(1, 1))


class TestShells:
    def test_mixed(self):
        decomposition = su3_shells(2, 1)
        assert [s.kind for s in decomposition.shells] == [ShellKind.HEXAGON, ShellKind.TRIANGLE]
        assert decomposition.complex_dim == 15

    def test_collapsing_triangle(self):
        decomposition = su3_shells(3, 0)
        assert decomposition.shells[-1].kind is ShellKind.POINT
        assert decomposition.complex_dim == 10

    def test_symmetrized(self):
        assert su3_shells(1, 4) == su3_shells(4, 1)

    @pytest.mark.parametrize("a, b", [(a, b) for a in range(7) for b in range(7)])
    def test_totals_match_weyl_dim(self, a, b):
        assert su3_shells(a, b).complex_dim == weyl_dim(IrrepDescriptor.su3(a, b))

    def test_shell_multiplicities_match_diagram(self):
        diagram = freudenthal_diagram(IrrepDescriptor.su3(4, 2))
        for shell in su3_shells(4, 2).shells:
            assert diagram.multiplicity(Weight(shell.highest_weight)) == shell.multiplicity

    def test_negative_labels_rejected(self):
        with pytest.raises(InputError):
            su3_shells(-1, 0)

    def test_line_bound(self):
        # one hexagon (two weights) plus the doubled center
        assert shell_line_bound(1, 1) == 4

    def test_paper_estimate(self):
        assert paper_shell_estimate(1, 1) == 4
        assert paper_shell_estimate(4, 1) == 4 + Fraction(4, 3) * 2 * 3
        assert paper_shell_estimate(0, 3) == paper_shell_estimate(3, 0) == 4


class TestTensorDiagram:
    def test_grid(self):
        diagram = tensor_rep_diagram(2, 3)
        assert diagram.complex_dim == 6
        assert diagram.real_dim == 12
        assert Weight((1, 2), 1) in diagram.entries
        assert Weight((1, 1), 1) not in diagram.entries

    def test_uncharged(self):
        diagram = tensor_rep_diagram(2, 2, charged=False)
        assert diagram.group == GroupType.su2_su2()
        assert diagram.is_negation_symmetric()
