import itertools

import pytest

from src.data.data_preprocessing import parse_module_label, parse_real_form
from src.exceptions import RealFormError, RepresentationError
from src.orbits import levi_of_stabilizer
from src.realforms import (RealFormGrading, enumerate_real_forms,
                           hermitian_signature, metric_options,
                           reproduce_compact_stabilizer_forms,
                           resolve_real_form, signature_report,
                           stabilizer_compactness, verify_main_theorem,
                           weyl_orbit)
from src.reptheory import IrrepDescriptor
from src.rootsys import SimpleType, Weight


def _type(text):
    return SimpleType.parse(text)


def _fundamental(text, index):
    t = _type(text)
    return Weight.fundamental(index, t.rank)


@pytest.fixture(scope='module')
def main_theorem_cases(golden):
    return {case.case: case for case in verify_main_theorem(5, golden)}


class TestGradings:
    def test_a1(self):
        forms = enumerate_real_forms(_type('A1'))
        assert [g.index for g in forms] == [-3, 1]
        assert [g.name for g in forms] == ['su(2)', 'sl(2,R)']

    def test_e7_indices(self):
        indices = {g.index for g in enumerate_real_forms(_type('E7'))}
        assert {-133, -25, -5, 7} <= indices

    def test_d6_has_quaternionic_form(self):
        forms = enumerate_real_forms(_type('D6'))
        star = [g for g in forms if g.index == -6]
        assert [str(t) for t in star[0].compact_types] == ['A5']
        assert star[0].name == 'so*(12)'

    @pytest.mark.parametrize('text', ['B3', 'D4', 'G2'])
    def test_index_is_constant_on_weyl_orbits(self, text):
        t = _type(text)
        for g in enumerate_real_forms(t):
            for eps in weyl_orbit(t, g.epsilon[0]):
                assert RealFormGrading.simple(t, eps).index == g.index

    def test_compact_form(self):
        g = RealFormGrading.simple(_type('B3'), (0, 0, 0))
        assert g.index == -21
        assert g.center_dim == 0

    @pytest.mark.parametrize('algebra,epsilon', [
        ('A2', (0, 2)), ('A2', (0, 0, 1)),
    ])
    def test_invalid_grading(self, algebra, epsilon):
        with pytest.raises(RealFormError):
            RealFormGrading.simple(_type(algebra), epsilon)

    def test_e7_split_form_never_has_compact_stabilizer(self):
        t = _type('E7')
        weight = _fundamental('E7', 1)
        for g in enumerate_real_forms(t):
            if g.index != 7:
                continue
            for eps in weyl_orbit(t, g.epsilon[0]):
                grading = RealFormGrading.simple(t, eps)
                assert not stabilizer_compactness(grading, weight)

    def test_zero_weight(self):
        g = RealFormGrading.simple(_type('A2'), (1, 0))
        with pytest.raises(RealFormError):
            stabilizer_compactness(g, Weight.zero(2))

    def test_weight_rank_mismatch(self):
        g = RealFormGrading.simple(_type('A2'), (1, 0))
        with pytest.raises(RealFormError):
            stabilizer_compactness(g, Weight((1, 0, 0)))

    def test_outer_form_cannot_be_resolved(self):
        with pytest.raises(RealFormError):
            resolve_real_form(parse_real_form('sl(6,R)'))


class TestSignature:
    @pytest.mark.parametrize('gamma,options', [
        ((6, 0), ((5, 0),)),
        ((0, 6), ((5, 0),)),
        ((1, 5), ((0, 5), (4, 1))),
        ((2, 10), ((1, 10), (9, 2))),
    ])
    def test_metric_options(self, gamma, options):
        assert metric_options(gamma) == options

    def test_e7_minus_25(self):
        spec = parse_real_form('e7(-25)')
        weight = _fundamental('E7', 1)
        g = resolve_real_form(spec, [weight])
        report = hermitian_signature(g, weight)
        assert report.h0_compact
        assert report.counts == (0, 27)
        assert report.is_negative_definite
        assert sum(report.counts) == 63 - 36

    def test_spinors_of_so_1_10(self):
        module = parse_module_label('V(pi_5)', 'Spin(11)')
        report = signature_report(parse_real_form('so(1,10)'), module)
        assert report.metric_signatures == ((10, 5),)

    def test_sl2_plus_g2_split(self):
        module = parse_module_label('C^2 (x) C^7', 'SL(2) x G2')
        report = signature_report(parse_real_form('sl(2,R) + g2(2)'),
                                  module)
        assert report.counts == (1, 5)
        assert report.gamma_signature == (2, 5)
        assert (1, 5) in report.metric_signatures

    def test_compact_form_is_definite(self):
        t = _type('C3')
        g = RealFormGrading.simple(t, (0, 0, 0))
        report = hermitian_signature(g, _fundamental('C3', 3))
        assert report.counts == (6, 0)
        assert report.metric_signatures == ((6, 0),)
        assert report.is_positive_definite

    def test_non_compact_stabilizer_has_no_metric(self):
        g = RealFormGrading.simple(_type('A1'), (1,))
        assert hermitian_signature(g, Weight((3,))).h0_compact
        g = RealFormGrading.simple(_type('E7'), (0, 0, 0, 0, 0, 0, 1))
        report = hermitian_signature(g, _fundamental('E7', 1))
        assert not report.h0_compact
        assert report.metric_signatures == ()

    @pytest.mark.parametrize('text', ['A1', 'A2', 'A3', 'B3', 'C3', 'G2',
                                      'B4', 'F4', 'D5', 'A5', 'E6', 'E7'])
    def test_counts_cover_the_roots_moving_the_weight(self, text):
        t = _type(text)
        positive = (t.dimension - t.rank) // 2
        weights = [_fundamental(text, i) for i in range(1, t.rank + 1)]
        weights.append(Weight((1,) * t.rank))
        for weight in weights:
            levi = levi_of_stabilizer(IrrepDescriptor(t, weight))
            fixed = sum((s.dimension - s.rank) // 2 for s in levi)
            for eps in itertools.product((0, 1), repeat=t.rank):
                g = RealFormGrading.simple(t, eps)
                report = hermitian_signature(g, weight)
                k, l = report.counts
                assert k + l == positive - fixed, (eps, weight)
                if report.h0_compact:
                    assert report.gamma_signature == (k + 1, l)

    @pytest.mark.parametrize('weight', [(1, -1), (-2, 0), (0, -1)])
    def test_rejects_non_dominant_weights(self, weight):
        g = RealFormGrading.simple(_type('A2'), (1, 0))
        with pytest.raises(RepresentationError):
            hermitian_signature(g, Weight(weight))
        with pytest.raises(RepresentationError):
            stabilizer_compactness(g, Weight(weight))


class TestMainTheorem:
    def test_twelve_cases(self, main_theorem_cases):
        assert list(main_theorem_cases) == [
            'i', 'ii', 'iii', 'iv', 'v', 'vi', 'vii', 'viii', 'ix', 'x',
            'xi', 'xii']

    @pytest.mark.parametrize('case,signature', [
        ('i', (5, 0)), ('ii', (11, 0)), ('iii', (0, 5)), ('iv', (0, 1)),
        ('v', (0, 9)), ('vi', (0, 6)), ('vii', (0, 15)), ('viii', (0, 27)),
        ('ix', (0, 6)), ('x', (10, 5)), ('xi', (1, 10)), ('xii', (1, 5)),
    ])
    def test_signatures(self, main_theorem_cases, case, signature):
        assert signature in main_theorem_cases[case].metric_signatures

    @pytest.mark.parametrize('case,index', [
        ('viii', -25), ('vii', -6), ('x', -35), ('iv', 1), ('v', 1),
    ])
    def test_indices(self, main_theorem_cases, case, index):
        assert main_theorem_cases[case].index == index

    def test_other_n(self, golden):
        cases = {c.case: c for c in verify_main_theorem(6, golden)}
        assert (1, 12) in cases['xi'].metric_signatures
        assert cases['ix'].center_dim == 2

    @pytest.mark.parametrize('n', [5, 6])
    def test_compact_stabilizer_forms(self, golden, n):
        report = reproduce_compact_stabilizer_forms(n, golden)
        assert len(report.discrepancies) == 1
        assert f'sl(2,R) + so(0,{n})' in report.discrepancies[0]
        unlisted = [f.real_form for f in report.forms if not f.listed]
        assert unlisted == [f'sl(2,R) + so(0,{n})']
        listed = {f.real_form for f in report.forms if f.listed}
        assert {'sl(2,R)', 'su(3,3)', 'so(1,10)', 'sp(3,R)', 'so*(12)',
                'e7(-25)', 'sl(2,R) + g2(2)'} <= listed
