# real forms with compact stabilizer and the signature of the twelve cases
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Optional, Union

from src.data.data_ingestion import GoldenData, MainTheoremEntry, load_golden
from src.data.data_preprocessing import (RealFormSpec, evaluate,
                                         expand_real_forms, parse_group_label,
                                         parse_module_label, parse_real_form)
from src.exceptions import ClassificationViolation, RealFormError
from src.logger import logging
from src.orbits import is_lagrangian
from src.realforms.gradings import resolve_real_form, stabilizer_compactness
from src.realforms.signature import (SignatureReport, hermitian_signature,
                                     reducible_signature)
from src.reptheory import ModuleDescriptor
from src.rootsys import SimpleType, Weight, sorted_types, types_to_str


def _violation(message: str) -> None:
    logging.error(message)
    raise ClassificationViolation(message)


def _weights(module: ModuleDescriptor) -> list[Weight]:
    return [d.highest_weight for d in module.summands[0]]


def _stabilizer(module: ModuleDescriptor) -> tuple[tuple[SimpleType, ...],
                                                   int]:
    """Semisimple Levi H' of the stabilizer and the dimension of its centre."""
    levi = tuple(sorted_types(is_lagrangian(module).levi_types))
    rank = sum(t.rank for t in module.factors)
    return levi, rank - sum(t.rank for t in levi)


def _check_algebra(spec: RealFormSpec, module: ModuleDescriptor) -> None:
    if tuple(spec.algebra) != tuple(module.factors):
        _violation(f"{spec.name} is a real form of "
                   f"{types_to_str(spec.algebra)}, the module {module} lives "
                   f"over {types_to_str(module.factors)}")


def signature_report(spec: RealFormSpec,
                     module: ModuleDescriptor) -> SignatureReport:
    """Grading of ``spec`` with compact stabilizer, if any, and signature."""
    _check_algebra(spec, module)
    weights = _weights(module)
    grading = resolve_real_form(spec, weights)
    if len(module.summands) == 2:
        hermitian = spec.factors[0].hermitian
        if hermitian is None:
            raise RealFormError(
                f"{spec.name} carries no invariant Hermitian form on U")
        return reducible_signature(grading, module, hermitian)
    return hermitian_signature(grading, weights, module)


def _metric_matches(expected: Union[str, list[str]],
                    report: SignatureReport, n: int) -> bool:
    if expected == 'positive':
        return report.is_positive_definite
    if expected == 'negative':
        return report.is_negative_definite
    signature = tuple(evaluate(e, n) for e in expected)
    return signature in report.metric_signatures


@dataclass(frozen=True)
class MainTheoremCase:
    case: str
    space: str
    real_form: str
    grading_name: str
    index: int
    stabilizer: tuple[SimpleType, ...]
    center_dim: int
    metric_signatures: tuple[tuple[int, int], ...]
    expected_metric: Union[str, tuple[str, ...]]
    anchor: str

    def to_dict(self) -> dict[str, Any]:
        expected = self.expected_metric
        return {
            'case': self.case,
            'space': self.space,
            'real_form': self.real_form,
            'grading_name': self.grading_name,
            'index': self.index,
            'stabilizer': types_to_str(self.stabilizer),
            'center_dim': self.center_dim,
            'metric_signatures': [list(s) for s in self.metric_signatures],
            'expected_metric': (expected if isinstance(expected, str)
                                else list(expected)),
            'anchor': self.anchor,
        }


def verify_case(entry: MainTheoremEntry, n: int) -> MainTheoremCase:
    module = parse_module_label(entry.module, entry.group, n)
    spec = parse_real_form(entry.real_form, n)
    if not is_lagrangian(module).lagrangian:
        _violation(f"case {entry.case}): the orbit of {module} is not "
                   "Lagrangian")
    report = signature_report(spec, module)
    if not report.h0_compact:
        _violation(f"case {entry.case}): no grading of {spec.name} has a "
                   f"compact stabilizer on {module}")

    stabilizer, center_dim = _stabilizer(module)
    expected = tuple(sorted_types(parse_group_label(entry.stabilizer, n)))
    if stabilizer != expected or center_dim != entry.center_dim:
        _violation(f"case {entry.case}): stabilizer "
                   f"{types_to_str(stabilizer)} with centre {center_dim}, "
                   f"golden data says {entry.stabilizer} with centre "
                   f"{entry.center_dim}")
    if not _metric_matches(entry.metric, report, n):
        _violation(f"case {entry.case}): metric signatures "
                   f"{report.metric_signatures} do not match {entry.metric}")

    metric = (entry.metric if isinstance(entry.metric, str)
              else tuple(entry.metric))
    return MainTheoremCase(
        case=entry.case, space=entry.space, real_form=spec.name,
        grading_name=report.grading.name, index=report.index,
        stabilizer=stabilizer, center_dim=center_dim,
        metric_signatures=report.metric_signatures, expected_metric=metric,
        anchor=entry.anchor)


def verify_main_theorem(n: int = 5, golden: Optional[GoldenData] = None
                        ) -> list[MainTheoremCase]:
    """
    Re-derive compactness, index and signature for every listed case.

    Args:
        n (int): value of n in the parametric cases.
        golden (GoldenData): golden data; the packaged file by default.

    Returns:
        list: one MainTheoremCase per case, in the order of the golden data.
    """
    golden = golden or load_golden()
    cases = [verify_case(entry, n) for entry in golden.main_theorem]
    logging.info('Main theorem verified: %d cases at n = %d', len(cases), n)
    return cases


@dataclass(frozen=True)
class CompactStabilizerForm:
    group: str
    module: str
    real_form: str
    index: int
    stabilizer: tuple[SimpleType, ...]
    center_dim: int
    listed: bool

    def to_dict(self) -> dict[str, Any]:
        return {
            'group': self.group,
            'module': self.module,
            'real_form': self.real_form,
            'index': self.index,
            'stabilizer': types_to_str(self.stabilizer),
            'center_dim': self.center_dim,
            'listed': self.listed,
        }


@dataclass(frozen=True)
class CompactStabilizerReport:
    forms: tuple[CompactStabilizerForm, ...]
    discrepancies: tuple[str, ...] = field(default=())

    def to_dict(self) -> dict[str, Any]:
        return {
            'forms': [f.to_dict() for f in self.forms],
            'discrepancies': list(self.discrepancies),
        }


def _expected_keys(golden: GoldenData, n: int) -> dict[tuple, set]:
    expected: dict[tuple, set] = {}
    for entry in golden.compact_stabilizer_forms:
        module = parse_module_label(entry.module, entry.group, n)
        stabilizer, center_dim = _stabilizer(module)
        listed = tuple(sorted_types(parse_group_label(entry.stabilizer, n)))
        if stabilizer != listed or center_dim != entry.center_dim:
            _violation(f"{entry.group} on {entry.module}: stabilizer "
                       f"{types_to_str(stabilizer)} with centre "
                       f"{center_dim}, golden data says {entry.stabilizer} "
                       f"with centre {entry.center_dim}")
        label = (entry.group, entry.module)
        expected.setdefault(label, set()).add(
            parse_real_form(entry.real_form, n).key)
    return expected


def reproduce_compact_stabilizer_forms(
        n: int = 5, golden: Optional[GoldenData] = None
) -> CompactStabilizerReport:
    """
    Filter the real forms with an invariant real structure by compactness
    of the stabilizer, and compare with the listed compact-stabilizer forms.

    Forms without compact Cartan subalgebra are skipped. A listed form the
    filter rejects is a violation; a form it admits that is not listed is
    reported as a discrepancy.
    """
    golden = golden or load_golden()
    expected = _expected_keys(golden, n)
    forms = []
    discrepancies = []
    seen = set()
    for entry in golden.real_structures:
        if entry.when == 'n even' and n % 2:
            continue
        label = (entry.group, entry.module)
        module = parse_module_label(entry.module, entry.group, n)
        weights = _weights(module)
        stabilizer, center_dim = _stabilizer(module)
        for template in entry.real_forms:
            for name in expand_real_forms(template, n):
                spec = parse_real_form(name)
                if not all(f.inner for f in spec.factors):
                    logging.debug('%s: no compact Cartan subalgebra', name)
                    continue
                _check_algebra(spec, module)
                grading = resolve_real_form(spec, weights)
                if (label, spec.key) in seen or not stabilizer_compactness(
                        grading, weights):
                    continue
                seen.add((label, spec.key))
                listed = spec.key in expected.get(label, set())
                forms.append(CompactStabilizerForm(
                    group=entry.group, module=entry.module, real_form=name,
                    index=grading.index, stabilizer=stabilizer,
                    center_dim=center_dim, listed=listed))
                if not listed:
                    discrepancies.append(
                        f"{name} on {entry.module} over {entry.group} has a "
                        "compact stabilizer but is not listed")

    for label, keys in expected.items():
        for key in keys:
            if (label, key) not in seen:
                _violation(f"{label[0]} on {label[1]}: a listed form with "
                           f"index {sum(k[1] for k in key)} fails the "
                           "compactness test")
    logging.info('Compact stabilizer forms: %d admitted, %d unlisted',
                 len(forms), len(discrepancies))
    return CompactStabilizerReport(forms=tuple(forms),
                                   discrepancies=tuple(discrepancies))
