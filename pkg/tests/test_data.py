import pytest
import yaml
from pydantic import ValidationError

from src.data.data_ingestion import Params, load_golden, load_params
from src.data.data_preprocessing import (evaluate, expand_real_forms,
                                         parse_group_label,
                                         parse_module_label, parse_real_form)
from src.exceptions import GoldenDataError, RealFormError


def _names(types):
    return [str(t) for t in types]


class TestParams:
    def test_missing_file_gives_defaults(self, tmp_path):
        params = load_params(str(tmp_path / 'absent.yaml'))
        assert params == Params()
        assert params.classify.max_classical_rank == 16
        assert params.table1.n == 8

    def test_reads_file(self, params_file):
        params = load_params(params_file)
        assert params.classify.max_classical_rank == 6
        assert params.logging.to_file is False

    def test_rejects_out_of_range(self, tmp_path):
        path = tmp_path / 'params.yaml'
        path.write_text(yaml.safe_dump(
            {'classify': {'max_classical_rank': 1}}))
        with pytest.raises(ValidationError):
            load_params(str(path))


class TestGolden:
    def test_packaged_file(self, golden):
        assert golden.version == 1
        assert [row.key for row in golden.table1] == [
            'sl', 'so', 'sp', 'g2', 'f4', 'e6', 'e7', 'e8']
        assert len(golden.main_theorem) == 12
        assert all(entry.anchor for entry in golden.main_theorem)

    def test_missing_file(self, tmp_path):
        with pytest.raises(GoldenDataError):
            load_golden(str(tmp_path / 'absent.yaml'))

    def test_schema_mismatch(self, tmp_path):
        path = tmp_path / 'golden.yaml'
        path.write_text(yaml.safe_dump({'version': 1, 'table1': []}))
        with pytest.raises(GoldenDataError):
            load_golden(str(path))


class TestLabels:
    @pytest.mark.parametrize('expr,n,value', [
        ('n+2', 5, 7), ('4*n', 8, 32), ('2*n', 3, 6), ('112', None, 112),
    ])
    def test_evaluate(self, expr, n, value):
        assert evaluate(expr, n) == value

    @pytest.mark.parametrize('expr,n', [('n/2', 5), ('n+1', None),
                                        ('n +* 2', 3)])
    def test_evaluate_rejects(self, expr, n):
        with pytest.raises(GoldenDataError):
            evaluate(expr, n)

    @pytest.mark.parametrize('label,n,expected', [
        ('SL(2) x SO(n)', 4, ['A1', 'A1', 'A1']),
        ('Spin(12)', None, ['D6']),
        ('{e}', None, []),
        ('SO(5)', None, ['C2']),
        ('SO(6)', None, ['A3']),
        ('Sp(1)', None, ['A1']),
        ('SL(1)', None, []),
        ('SL(n+2)', 3, ['A4']),
        ('SL(3) x SL(3)', None, ['A2', 'A2']),
        ('E7', None, ['E7']),
    ])
    def test_group_label(self, label, n, expected):
        assert _names(parse_group_label(label, n)) == expected

    def test_unknown_group(self):
        with pytest.raises(GoldenDataError):
            parse_group_label('U(3)')

    @pytest.mark.parametrize('label,group,n,expected', [
        ('C^2 (x) C^7', 'SL(2) x G2', None, 'A1:1 * G2:1,0'),
        ('V(3pi_1)', 'SL(2)', None, 'A1:3'),
        ('C^n + C^n*', 'SL(n)', 4, 'A3:1,0,0 + A3:0,0,1'),
        ('C^(2*n) + C^(2*n)*', 'Sp(n)', 2, 'C2:1,0 + C2:1,0'),
        ('V(pi_5)', 'Spin(12)', None, 'D6:0,0,0,0,1,0'),
        ('C^2 (x) C^(n+2)', 'SL(2) x SO(n+2)', 5, 'A1:1 * B3:1,0,0'),
    ])
    def test_module_label(self, label, group, n, expected):
        assert str(parse_module_label(label, group, n)) == expected

    def test_module_label_dimension_mismatch(self):
        with pytest.raises(GoldenDataError):
            parse_module_label('C^2 (x) C^8', 'SL(2) x SO(7)')


class TestRealForms:
    def test_exceptional(self):
        factor = parse_real_form('e7(-25)').factors[0]
        assert factor.index == -25
        assert _names(factor.compact_types) == ['E6']
        assert factor.center_dim == 1

    def test_quaternionic_orthogonal(self):
        factor = parse_real_form('so*(12)').factors[0]
        assert str(factor.algebra) == 'D6'
        assert factor.index == -6
        assert _names(factor.compact_types) == ['A5']

    @pytest.mark.parametrize('name,hermitian', [
        ('su(1,5)', (1, 5)), ('su(5)', (0, 5)), ('sp(1,4)', (2, 8)),
        ('sl(2,R)', (1, 1)),
    ])
    def test_hermitian_signature(self, name, hermitian):
        assert parse_real_form(name).factors[0].hermitian == hermitian

    @pytest.mark.parametrize('name', ['sl(6,R)', 'e6(-26)', 'so(1,5)'])
    def test_outer_forms(self, name):
        assert not parse_real_form(name).factors[0].inner

    def test_sum_with_parameter(self):
        spec = parse_real_form('sl(2,R) + so(2,n)', 5)
        assert spec.name == 'sl(2,R) + so(2,5)'
        assert _names(spec.algebra) == ['A1', 'B3']
        assert spec.factors[1].index == -1

    @pytest.mark.parametrize('name', ['xyz(3)', 'su(a,b)', 'e7(3)'])
    def test_unknown(self, name):
        with pytest.raises(RealFormError):
            parse_real_form(name)

    def test_expand(self):
        assert expand_real_forms('su(k,n-k)', 5) == [
            'su(0,5)', 'su(1,4)', 'su(2,3)']
        assert expand_real_forms('sp(n,R)', 4) == ['sp(4,R)']
