import random

import pytest

from src.classify import dominant_weights, simple_types_in_range
from src.data.data_ingestion import SearchConfig
from src.exceptions import InstanceTooLargeError, RepresentationError
from src.reptheory import (FormType, IrrepDescriptor, ModuleDescriptor,
                           canonical_module_key, dual, form_type,
                           freudenthal_multiplicities, is_self_dual,
                           orthogonal_standard, semisimple_form_type,
                           special_linear_standard, symplectic_standard,
                           tensor_form_type, weyl_dimension)
from src.reptheory.freudenthal import DEFAULT_MAX_DIM, _quotient


def _irrep(text):
    return IrrepDescriptor.parse(text)


def _types_up_to(rank):
    cfg = SearchConfig(max_classical_rank=max(rank, 2))
    return [t for t in simple_types_in_range(cfg) if t.rank <= rank]


class TestDescriptors:
    @pytest.mark.parametrize('text', ['A2:1', 'A2:-1,0', 'A2', 'X3:1,0,0',
                                      'B3:1,a,0'])
    def test_rejects_malformed(self, text):
        with pytest.raises(RepresentationError):
            IrrepDescriptor.parse(text)

    def test_module_parse(self):
        m = ModuleDescriptor.parse('A1:1 * G2:1,0')
        assert m.is_irreducible
        assert [str(t) for t in m.factors] == ['A1', 'G2']
        assert m.dimension == 14

    def test_summands_over_different_algebras(self):
        with pytest.raises(RepresentationError):
            ModuleDescriptor.parse('A1:1 + A2:1,0')

    def test_canonical_key_ignores_diagram_automorphisms(self):
        first = ModuleDescriptor.parse('D6:0,0,0,0,1,0')
        second = ModuleDescriptor.parse('D6:0,0,0,0,0,1')
        assert canonical_module_key(first) == canonical_module_key(second)


class TestWeylDimension:
    @pytest.mark.parametrize('text,dimension', [
        ('C3:0,0,1', 14), ('A1:3', 4), ('E7:1,0,0,0,0,0,0', 56),
        ('A1:0', 1), ('D6:0,0,0,0,1,0', 32), ('A5:0,0,1,0,0', 20),
        ('B5:0,0,0,0,1', 32), ('B6:0,0,0,0,0,1', 64), ('G2:1,0', 7),
        ('F4:0,0,0,1', 26), ('E6:1,0,0,0,0,0', 27),
        ('E8:0,0,0,0,0,0,0,1', 248),
    ])
    def test_known_dimensions(self, text, dimension):
        assert weyl_dimension(_irrep(text)) == dimension

    @pytest.mark.parametrize('text', ['A2:1,1', 'B2:1,1', 'G2:0,1',
                                      'C3:0,1,0', 'A1:4'])
    def test_agrees_with_freudenthal(self, text):
        d = _irrep(text)
        multiplicities = freudenthal_multiplicities(d)
        assert sum(multiplicities.values()) == weyl_dimension(d)
        assert multiplicities[d.highest_weight] == 1

    def test_freudenthal_guard(self):
        with pytest.raises(InstanceTooLargeError):
            freudenthal_multiplicities(_irrep('E7:1,0,0,0,0,0,0'), max_dim=50)

    @pytest.mark.parametrize('t', _types_up_to(3), ids=str)
    def test_every_small_irrep_agrees_with_freudenthal(self, t):
        for weight in dominant_weights(t, 200):
            d = IrrepDescriptor(t, weight)
            multiplicities = freudenthal_multiplicities(d)
            assert sum(multiplicities.values()) == weyl_dimension(d), d
            assert multiplicities[weight] == 1

    def test_raised_guard_admits_larger_irreps(self):
        d = _irrep('A1:600')
        assert weyl_dimension(d) > DEFAULT_MAX_DIM
        with pytest.raises(InstanceTooLargeError):
            freudenthal_multiplicities(d)
        multiplicities = freudenthal_multiplicities(d, max_dim=601)
        assert sum(multiplicities.values()) == 601
        assert set(multiplicities.values()) == {1}

    def test_recursion_step_must_be_integral(self):
        d = _irrep('A2:1,1')
        assert _quotient(d, d.highest_weight, 6, 3) == 2
        with pytest.raises(RepresentationError):
            _quotient(d, d.highest_weight, 3, 2)


class TestDuality:
    @pytest.mark.parametrize('text,expected', [
        ('A2:1,0', 'A2:0,1'), ('D6:0,0,0,0,1,0', 'D6:0,0,0,0,1,0'),
        ('B6:0,0,0,0,0,1', 'B6:0,0,0,0,0,1'),
        ('E6:1,0,0,0,0,0', 'E6:0,0,0,0,0,1'),
        ('D5:0,0,0,1,0', 'D5:0,0,0,0,1'),
    ])
    def test_dual(self, text, expected):
        assert str(dual(_irrep(text))) == expected

    @pytest.mark.parametrize('text', ['A1:1', 'A1:3', 'A5:0,0,1,0,0',
                                      'C2:1,0', 'E7:1,0,0,0,0,0,0',
                                      'D6:0,0,0,0,1,0'])
    def test_symplectic(self, text):
        assert form_type(_irrep(text)) == FormType.SYMPLECTIC

    @pytest.mark.parametrize('text', ['A1:2', 'B3:1,0,0', 'C2:0,1',
                                      'A3:0,1,0', 'G2:1,0'])
    def test_orthogonal(self, text):
        assert form_type(_irrep(text)) == FormType.ORTHOGONAL

    def test_not_self_dual_has_no_form(self):
        d = _irrep('A3:1,0,0')
        assert not is_self_dual(d)
        assert form_type(d) == FormType.NONE

    def test_tensor_form_type(self):
        symplectic = _irrep('A1:1')
        orthogonal = _irrep('B3:1,0,0')
        assert tensor_form_type([symplectic, orthogonal]) \
            == FormType.SYMPLECTIC
        assert tensor_form_type([symplectic, symplectic]) \
            == FormType.ORTHOGONAL
        assert tensor_form_type([symplectic, _irrep('A2:1,0')]) \
            == FormType.NONE

    @pytest.mark.parametrize('t', _types_up_to(6), ids=str)
    def test_dual_is_an_involution(self, t):
        for weight in dominant_weights(t, 10 ** 6):
            d = IrrepDescriptor(t, weight)
            once = dual(d)
            assert dual(once) == d
            assert weyl_dimension(once) == weyl_dimension(d)


_SYMPLECTIC = ['A1:1', 'A1:3', 'C2:1,0', 'C3:0,0,1', 'A5:0,0,1,0,0',
               'D6:0,0,0,0,1,0', 'E7:1,0,0,0,0,0,0']
_ORTHOGONAL = ['A1:2', 'A1:4', 'B3:1,0,0', 'C2:0,1', 'A3:0,1,0', 'G2:1,0',
               'D4:1,0,0,0']


class TestFormParity:
    @pytest.mark.parametrize('seed', range(100))
    def test_randomized_tensor_products(self, seed):
        rng = random.Random(seed)
        kinds = [rng.random() < 0.5 for _ in range(rng.randint(1, 4))]
        factors = [_irrep(rng.choice(_SYMPLECTIC if symplectic
                                     else _ORTHOGONAL))
                   for symplectic in kinds]
        expected = (FormType.SYMPLECTIC if sum(kinds) % 2
                    else FormType.ORTHOGONAL)
        module = ModuleDescriptor.irreducible(*factors)
        assert semisimple_form_type(module) == expected

        flipped = _irrep(rng.choice(_ORTHOGONAL if kinds[0]
                                    else _SYMPLECTIC))
        other = ModuleDescriptor.irreducible(flipped, *factors[1:])
        assert semisimple_form_type(other) not in (expected, FormType.NONE)

    def test_factor_without_form(self):
        module = ModuleDescriptor.parse('A1:1 * A2:1,0 * B3:1,0,0')
        assert semisimple_form_type(module) == FormType.NONE

    def test_needs_a_single_tensor_product(self):
        with pytest.raises(RepresentationError):
            semisimple_form_type(ModuleDescriptor.parse('A1:1 + A1:1'))


class TestStandardModules:
    @pytest.mark.parametrize('m,expected', [
        (3, ['A1:2']), (4, ['A1:1', 'A1:1']), (5, ['C2:0,1']),
        (6, ['A3:0,1,0']), (7, ['B3:1,0,0']), (8, ['D4:1,0,0,0']),
    ])
    def test_orthogonal(self, m, expected):
        assert [str(d) for d in orthogonal_standard(m)] == expected

    def test_special_linear(self):
        assert special_linear_standard(1) == []
        assert [str(d) for d in special_linear_standard(4)] == ['A3:1,0,0']
        with pytest.raises(RepresentationError):
            special_linear_standard(0)

    def test_symplectic(self):
        assert [str(d) for d in symplectic_standard(1)] == ['A1:1']
        assert [str(d) for d in symplectic_standard(3)] == ['C3:1,0,0']
        with pytest.raises(RepresentationError):
            orthogonal_standard(2)
