# golden label parsing

import re
from dataclasses import dataclass
from typing import Optional

import sympy

from src.exceptions import GoldenDataError, RealFormError
from src.logger import logging
from src.reptheory import (IrrepDescriptor, ModuleDescriptor, dual,
                           orthogonal_standard, special_linear_standard,
                           symplectic_standard)
from src.rootsys import Family, SimpleType, Weight

_N, _K = sympy.symbols('n k', integer=True)
_GROUP_PART = re.compile(r'^(SL|SO|Spin|Sp)\((.+)\)$')
_EXCEPTIONAL = re.compile(r'^([EFG])(\d)$')
_WEIGHT_TERM = re.compile(r'^(\d*)\s*pi_(\d+)$')
_STANDARD = re.compile(r'^C\^(.+?)(\*?)$')
_EXCEPTIONAL_FORM = re.compile(r'^([efg])(\d)\((-?\d+)\)$')
_CALL = re.compile(r'^([a-z]+\*?)\((.*)\)$')


def evaluate(expr, n: Optional[int] = None, k: Optional[int] = None) -> int:
    """Evaluate an integer expression in ``n`` (and ``k``) such as 'n+2'."""
    try:
        value = sympy.sympify(str(expr), locals={'n': _N, 'k': _K})
        substitutions = {}
        if n is not None:
            substitutions[_N] = n
        if k is not None:
            substitutions[_K] = k
        value = value.subs(substitutions)
    except (sympy.SympifyError, TypeError) as e:
        logging.error('Cannot evaluate %r: %s', expr, e)
        raise GoldenDataError(f"cannot evaluate {expr!r}") from e
    if not value.is_Integer:
        raise GoldenDataError(
            f"{expr!r} does not evaluate to an integer (n={n}, k={k})")
    return int(value)


def orthogonal_types(m: int) -> list[SimpleType]:
    """Simple types of so(m), small ranks resolved to canonical types."""
    if m <= 2:
        return []
    return [d.algebra for d in orthogonal_standard(m)]


def group_part_types(kind: str, m: int) -> list[SimpleType]:
    if kind == 'SL':
        return [d.algebra for d in special_linear_standard(m)] if m else []
    if kind in ('SO', 'Spin'):
        return orthogonal_types(m)
    if kind == 'Sp':
        return [d.algebra for d in symplectic_standard(m)] if m else []
    raise GoldenDataError(f"unknown group kind {kind!r}")


def _group_parts(label: str, n: Optional[int]) -> list[tuple[str, int]]:
    label = label.strip()
    if label == '{e}':
        return []
    parts = []
    for token in label.split(' x '):
        token = token.strip()
        match = _GROUP_PART.match(token)
        if match:
            parts.append((match.group(1), evaluate(match.group(2), n)))
            continue
        match = _EXCEPTIONAL.match(token)
        if match:
            parts.append((match.group(1), int(match.group(2))))
            continue
        raise GoldenDataError(f"cannot parse group label {token!r}")
    return parts


def _part_types(kind: str, m: int) -> list[SimpleType]:
    if kind in ('E', 'F', 'G'):
        return [SimpleType(Family(kind), m)]
    return group_part_types(kind, m)


def parse_group_label(label: str, n: Optional[int] = None
                      ) -> list[SimpleType]:
    """
    Simple factors of a group label such as 'SL(2) x SO(n)'.

    Args:
        label (str): group label; '{e}' is the trivial group.
        n (int): value of the parameter n.

    Returns:
        list: the simple types, in label order.
    """
    types = []
    for kind, m in _group_parts(label, n):
        types.extend(_part_types(kind, m))
    return types


def _standard_of_part(kind: str, m: int) -> list[IrrepDescriptor]:
    if kind == 'SL':
        return special_linear_standard(m)
    if kind in ('SO', 'Spin'):
        return orthogonal_standard(m)
    if kind == 'Sp':
        return symplectic_standard(m)
    if kind == 'G' and m == 2:
        return [IrrepDescriptor.fundamental(SimpleType(Family.G, 2), 1)]
    raise GoldenDataError(f"no standard module for {kind}{m}")


def _standard_dimension(kind: str, m: int) -> int:
    if kind == 'Sp':
        return 2 * m
    if kind == 'G':
        return 7
    return m


def _parse_weight(text: str, algebra: SimpleType) -> Weight:
    coords = [0] * algebra.rank
    for term in text.split('+'):
        match = _WEIGHT_TERM.match(term.strip())
        if match is None:
            raise GoldenDataError(f"cannot parse weight term {term!r}")
        index = int(match.group(2))
        if not 1 <= index <= algebra.rank:
            raise GoldenDataError(
                f"pi_{index} does not exist for {algebra}")
        coords[index - 1] += int(match.group(1) or 1)
    return Weight(tuple(coords))


def parse_module_label(label: str, group: str,
                       n: Optional[int] = None) -> ModuleDescriptor:
    """
    Module of a group label: 'V(3pi_1)', 'C^n + C^n*', 'C^2 (x) C^n'.

    'C^m' stands for the defining module of the matching group factor.
    """
    label = label.strip()
    parts = _group_parts(group, n)

    if label.startswith('V(') and label.endswith(')'):
        types = parse_group_label(group, n)
        if len(types) != 1:
            raise GoldenDataError(
                f"{label!r} needs a simple group, got {group!r}")
        weight = _parse_weight(label[2:-1], types[0])
        return ModuleDescriptor.irreducible(IrrepDescriptor(types[0], weight))

    if ' + ' in label:
        if len(parts) != 1:
            raise GoldenDataError(f"{label!r} needs a single group factor")
        kind, m = parts[0]
        u = tuple(_standard_of_part(kind, m))
        return ModuleDescriptor((u, tuple(dual(d) for d in u)))

    terms = [t.strip() for t in label.split('(x)')]
    if len(terms) != len(parts):
        raise GoldenDataError(
            f"{label!r} has {len(terms)} tensor factors for {group!r}")
    factors = []
    for term, (kind, m) in zip(terms, parts):
        match = _STANDARD.match(term)
        if match is None:
            raise GoldenDataError(f"cannot parse module term {term!r}")
        size = evaluate(match.group(1).strip('()'), n)
        if size != _standard_dimension(kind, m):
            raise GoldenDataError(
                f"{term!r} is not the defining module of {kind}({m})")
        factors.extend(_standard_of_part(kind, m))
    return ModuleDescriptor.irreducible(*factors)


@dataclass(frozen=True)
class RealFormFactor:
    """Real form of one simple factor, as index and maximal compact part."""

    name: str
    algebra: SimpleType
    index: int
    compact_types: tuple[SimpleType, ...]
    center_dim: int
    inner: bool = True
    hermitian: Optional[tuple[int, int]] = None

    @property
    def key(self) -> tuple:
        return (self.algebra, self.index, self.compact_types)


@dataclass(frozen=True)
class RealFormSpec:
    name: str
    factors: tuple[RealFormFactor, ...]

    @property
    def algebra(self) -> tuple[SimpleType, ...]:
        return tuple(f.algebra for f in self.factors)

    @property
    def key(self) -> tuple:
        return tuple(sorted(f.key for f in self.factors))


def _sorted(types) -> tuple[SimpleType, ...]:
    return tuple(sorted(t.canonical() for t in types))


def _single(types: list[SimpleType], name: str) -> SimpleType:
    if len(types) != 1:
        raise RealFormError(f"{name} is not a simple real form")
    return types[0]


_EXCEPTIONAL_FORMS = {
    ('e', 6, 2): ('A5', 'A1'), ('e', 6, -14): ('D5',), ('e', 6, -78): ('E6',),
    ('e', 7, 7): ('A7',), ('e', 7, -5): ('D6', 'A1'), ('e', 7, -25): ('E6',),
    ('e', 7, -133): ('E7',),
    ('e', 8, 8): ('D8',), ('e', 8, -24): ('E7', 'A1'),
    ('e', 8, -248): ('E8',),
    ('f', 4, 4): ('C3', 'A1'), ('f', 4, -20): ('B4',), ('f', 4, -52): ('F4',),
    ('g', 2, 2): ('A1', 'A1'), ('g', 2, -14): ('G2',),
}
_OUTER_EXCEPTIONAL = {('e', 6, 6), ('e', 6, -26)}


def _unitary(name: str, p: int, q: int) -> RealFormFactor:
    algebra = _single(group_part_types('SL', p + q), name)
    compact = group_part_types('SL', p) + group_part_types('SL', q)
    return RealFormFactor(name, algebra, 1 - (p - q) ** 2, _sorted(compact),
                          int(p > 0 and q > 0), hermitian=(p, q))


def _orthogonal(name: str, p: int, q: int) -> RealFormFactor:
    algebra = _single(orthogonal_types(p + q), name)
    index = p * q - p * (p - 1) // 2 - q * (q - 1) // 2
    compact = orthogonal_types(p) + orthogonal_types(q)
    inner = (p + q) % 2 == 1 or (p % 2 == 0 and q % 2 == 0)
    return RealFormFactor(name, algebra, index, _sorted(compact),
                          int(p == 2) + int(q == 2), inner=inner)


def _quaternionic(name: str, p: int, q: int) -> RealFormFactor:
    algebra = _single(group_part_types('Sp', p + q), name)
    index = 4 * p * q - p * (2 * p + 1) - q * (2 * q + 1)
    compact = group_part_types('Sp', p) + group_part_types('Sp', q)
    return RealFormFactor(name, algebra, index, _sorted(compact), 0,
                          hermitian=(2 * p, 2 * q))


def _parse_factor(name: str) -> RealFormFactor:
    match = _EXCEPTIONAL_FORM.match(name)
    if match:
        key = (match.group(1), int(match.group(2)), int(match.group(3)))
        algebra = SimpleType(Family(key[0].upper()), key[1])
        if key in _OUTER_EXCEPTIONAL:
            return RealFormFactor(name, algebra, key[2], (), 0, inner=False)
        if key not in _EXCEPTIONAL_FORMS:
            raise RealFormError(f"unknown real form {name!r}")
        compact = _sorted(SimpleType.parse(t) for t in _EXCEPTIONAL_FORMS[key])
        center = key[1] - sum(t.rank for t in compact)
        return RealFormFactor(name, algebra, key[2], compact, center)

    match = _CALL.match(name)
    if match is None:
        raise RealFormError(f"cannot parse real form {name!r}")
    family, args = match.group(1), [a.strip()
                                    for a in match.group(2).split(',')]
    try:
        if family == 'sl' and len(args) == 2 and args[1] == 'R':
            m = int(args[0])
            if m == 2:
                return _unitary(name, 1, 1)
            algebra = _single(group_part_types('SL', m), name)
            return RealFormFactor(name, algebra, m - 1,
                                  _sorted(orthogonal_types(m)), 0,
                                  inner=False)
        if family == 'sp' and len(args) == 2 and args[1] == 'R':
            m = int(args[0])
            algebra = _single(group_part_types('Sp', m), name)
            return RealFormFactor(name, algebra, m,
                                  _sorted(group_part_types('SL', m)), 1)
        numbers = [int(a) for a in args]
    except ValueError as e:
        raise RealFormError(f"cannot parse real form {name!r}") from e

    if family == 'su':
        p, q = (0, numbers[0]) if len(numbers) == 1 else numbers
        return _unitary(name, p, q)
    if family == 'so':
        p, q = (0, numbers[0]) if len(numbers) == 1 else numbers
        return _orthogonal(name, p, q)
    if family == 'so*' and len(numbers) == 1 and numbers[0] % 2 == 0:
        m = numbers[0] // 2
        algebra = _single(orthogonal_types(2 * m), name)
        return RealFormFactor(name, algebra, -m,
                              _sorted(group_part_types('SL', m)), 1)
    if family == 'sp':
        p, q = (0, numbers[0]) if len(numbers) == 1 else numbers
        return _quaternionic(name, p, q)
    raise RealFormError(f"unknown real form {name!r}")


def instantiate(name: str, n: Optional[int] = None,
                k: Optional[int] = None) -> str:
    """Substitute n and k in the arguments of a real-form template."""
    def substitute(match: re.Match) -> str:
        args = []
        for arg in match.group(1).split(','):
            arg = arg.strip()
            args.append(arg if arg == 'R' else str(evaluate(arg, n, k)))
        return '(' + ','.join(args) + ')'
    return re.sub(r'\(([^()]*)\)', substitute, name)


def expand_real_forms(template: str, n: int) -> list[str]:
    """Instances of a template; a free k runs over 0..n//2 (k <= n - k)."""
    if re.search(r'\bk\b', template) is None:
        return [instantiate(template, n)]
    return [instantiate(template, n, k) for k in range(n // 2 + 1)]


def parse_real_form(name: str, n: Optional[int] = None) -> RealFormSpec:
    """Parse 'su(p,q)', 'so*(2m)', 'e7(-25)' and sums joined by ' + '."""
    name = instantiate(name, n) if n is not None else name
    factors = tuple(_parse_factor(part.strip())
                    for part in name.split(' + '))
    return RealFormSpec(name=name, factors=factors)


def exceptional_real_form_names(algebra: SimpleType) -> list[str]:
    """Inner real forms of an exceptional algebra, named by their index."""
    family = algebra.family.value.lower()
    return [f"{family}{rank}({index})"
            for (f, rank, index) in _EXCEPTIONAL_FORMS
            if f == family and rank == algebra.rank]
