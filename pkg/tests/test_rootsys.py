import json
from pathlib import Path

import pytest

from src.exceptions import RootSystemError
from src.rootsys import (RootSystem, SimpleType, Weight, automorphisms,
                         build_root_system, sub_root_system,
                         sub_root_system_type)

GOLDEN_DIR = Path(__file__).parent / 'golden'


def _type(text):
    return SimpleType.parse(text)


class TestSimpleType:
    @pytest.mark.parametrize('text', ['A0', 'B1', 'C1', 'D2', 'E5', 'E9',
                                      'F3', 'G3', 'H3', 'A', ''])
    def test_rejects_inadmissible(self, text):
        with pytest.raises(RootSystemError):
            SimpleType.parse(text)

    @pytest.mark.parametrize('text,canonical', [
        ('B2', 'C2'), ('D3', 'A3'), ('B3', 'B3'), ('D4', 'D4'),
    ])
    def test_canonical(self, text, canonical):
        assert str(_type(text).canonical()) == canonical

    @pytest.mark.parametrize('text', ['A4', 'B5', 'C3', 'D6', 'E6', 'E7',
                                      'E8', 'F4', 'G2'])
    def test_dimension_matches_roots(self, text):
        rs = build_root_system(_type(text))
        assert rs.dimension == _type(text).dimension
        assert rs.dimension == rs.rank + len(rs.roots)


class TestRootSystem:
    @pytest.mark.parametrize('text,positive,dimension', [
        ('A1', 1, 3), ('G2', 6, 14), ('F4', 24, 52), ('E6', 36, 78),
        ('E7', 63, 133), ('E8', 120, 248), ('B3', 9, 21), ('C4', 16, 36),
        ('D5', 20, 45),
    ])
    def test_root_counts(self, text, positive, dimension):
        rs = build_root_system(_type(text))
        assert len(rs.positive_roots) == positive
        assert len(rs.roots) == 2 * positive
        assert rs.dimension == dimension

    @pytest.mark.parametrize('name', ['g2', 'b3'])
    def test_matches_golden_json(self, name):
        document = json.loads((GOLDEN_DIR / f'{name}.json').read_text())
        rs = build_root_system(_type(document['type']))
        assert rs.to_dict() == document

    def test_json_round_trip(self):
        rs = build_root_system(_type('F4'))
        assert RootSystem.from_json(rs.to_json()) is rs

    def test_from_dict_rejects_tampered_roots(self):
        document = build_root_system(_type('G2')).to_dict()
        document['positive_roots'] = document['positive_roots'][:-1]
        with pytest.raises(RootSystemError):
            RootSystem.from_dict(document)

    def test_from_json_rejects_garbage(self):
        with pytest.raises(RootSystemError):
            RootSystem.from_json('{not json')

    def test_long_roots_have_length_two(self):
        rs = build_root_system(_type('G2'))
        assert max(rs.root_lengths.values()) == 2

    def test_highest_root_pairs_with_e7_minuscule(self):
        rs = build_root_system(_type('E7'))
        assert rs.pairing(Weight.fundamental(1, 7), rs.highest_root) == 1

    @pytest.mark.parametrize('text', ['A3', 'B4', 'C3', 'G2', 'F4'])
    def test_reflection_permutes_roots(self, text):
        rs = build_root_system(_type(text))
        roots = set(rs.roots)
        for alpha in rs.positive_roots:
            assert {rs.reflect(alpha, beta) for beta in roots} == roots

    def test_highest_root_is_dominant(self):
        for text in ('A5', 'B4', 'C4', 'D5', 'E6', 'E7', 'E8', 'F4', 'G2'):
            rs = build_root_system(_type(text))
            assert rs.fundamental_coords(rs.highest_root).is_dominant

    def test_fundamental_coords_reject_wrong_rank(self):
        rs = build_root_system(_type('A2'))
        with pytest.raises(RootSystemError):
            rs.fundamental_coords((1, 0, 0))

    def test_pairing_rank_mismatch(self):
        rs = build_root_system(_type('A2'))
        with pytest.raises(RootSystemError):
            rs.pairing(Weight((1, 0, 0)), rs.highest_root)


class TestSubRootSystems:
    @pytest.mark.parametrize('text,index,expected', [
        ('E7', 1, ['E6']), ('C3', 3, ['A2']), ('B6', 6, ['A5']),
        ('D6', 5, ['A5']), ('A5', 3, ['A2', 'A2']), ('F4', 4, ['B3']),
    ])
    def test_orthogonal_to_fundamental(self, text, index, expected):
        rs = build_root_system(_type(text))
        weight = Weight.fundamental(index, rs.rank)
        types = sub_root_system_type(
            rs, lambda root: rs.pairing(weight, root) == 0)
        assert [str(t) for t in types] == expected

    def test_non_closed_subset_is_rejected(self):
        rs = build_root_system(_type('A2'))
        simple = set(rs.simple_roots)
        with pytest.raises(RootSystemError):
            sub_root_system(rs, lambda root: root in simple)

    def test_empty_subsystem(self):
        rs = build_root_system(_type('G2'))
        assert sub_root_system(rs, lambda root: False).types == []

    @pytest.mark.parametrize('text,count', [
        ('A3', 2), ('D4', 6), ('E6', 2), ('B3', 1), ('E7', 1), ('D5', 2),
    ])
    def test_automorphisms(self, text, count):
        assert len(automorphisms(_type(text))) == count
