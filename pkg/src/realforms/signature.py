# signature of the Hermitian form on the cone and of the induced metric
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Optional, Sequence, Union

from src.exceptions import ClassificationViolation, RealFormError
from src.logger import logging
from src.realforms.gradings import (RealFormGrading, normalize_weights,
                                    stabilizer_compactness)
from src.reptheory import IrrepDescriptor, ModuleDescriptor
from src.rootsys import Weight, build_root_system

Signature = tuple[int, int]


@dataclass(frozen=True)
class SignatureReport:
    grading: RealFormGrading
    module: ModuleDescriptor
    index: int
    h0_compact: bool
    counts: Signature
    gamma_signature: Optional[Signature]
    metric_signatures: tuple[Signature, ...]
    reasons: tuple[str, ...] = field(default=())

    @property
    def is_positive_definite(self) -> bool:
        return any(k > 0 and l == 0 for k, l in self.metric_signatures)

    @property
    def is_negative_definite(self) -> bool:
        return any(k == 0 and l > 0 for k, l in self.metric_signatures)

    def to_dict(self) -> dict[str, Any]:
        return {
            'real_form': self.grading.name,
            'grading': self.grading.to_dict(),
            'module': str(self.module),
            'index': self.index,
            'h0_compact': self.h0_compact,
            'counts': list(self.counts),
            'gamma_signature': (list(self.gamma_signature)
                                if self.gamma_signature else None),
            'metric_signatures': [list(s) for s in self.metric_signatures],
            'reasons': list(self.reasons),
        }


def _metric(gamma: Signature, radial_positive: bool) -> Signature:
    k, l = gamma
    return (k - 1, l) if radial_positive else (l - 1, k)


def metric_options(gamma: Signature) -> tuple[Signature, ...]:
    """
    Metric signatures for gamma of signature (k, l) and either sign of tau.

    gamma(v, v) > 0 gives (k - 1, l), gamma(v, v) < 0 gives (l - 1, k);
    options with a negative entry are impossible and dropped.
    """
    options = {_metric(gamma, True), _metric(gamma, False)}
    return tuple(sorted(s for s in options if min(s) >= 0))


def root_counts(g: RealFormGrading, weights: Sequence[Weight]) -> Signature:
    """Compact and noncompact positive roots not orthogonal to the weight."""
    compact = noncompact = 0
    for factor, (t, w) in enumerate(zip(g.algebra, weights)):
        rs = build_root_system(t)
        for root in rs.positive_roots:
            if rs.pairing(w, root) == 0:
                continue
            if g.is_compact(factor, root):
                compact += 1
            else:
                noncompact += 1
    return compact, noncompact


def hermitian_signature(g: RealFormGrading,
                        weights: Union[Weight, Sequence[Weight]],
                        module: Optional[ModuleDescriptor] = None
                        ) -> SignatureReport:
    """
    Signature of gamma on the cone over the open orbit through v.

    The tangent space of the cone at v is C v plus one root line for every
    positive root not orthogonal to the highest weight. gamma is positive
    on v and on the compact root lines, negative on the noncompact ones,
    once tau is scaled so that gamma(v, v) > 0.
    """
    weights = normalize_weights(g, weights)
    if module is None:
        module = ModuleDescriptor.irreducible(*(
            IrrepDescriptor(t, w) for t, w in zip(g.algebra, weights)))
    h0_compact = stabilizer_compactness(g, weights)
    counts = root_counts(g, weights)
    if not h0_compact:
        return SignatureReport(
            grading=g, module=module, index=g.index, h0_compact=False,
            counts=counts, gamma_signature=None, metric_signatures=(),
            reasons=('the stabilizer is not compact: some root orthogonal '
                     'to the highest weight is noncompact',))
    gamma = (counts[0] + 1, counts[1])
    # -tau turns gamma into (l, k) with gamma(v, v) < 0
    metrics = tuple(sorted({_metric(gamma, True),
                            _metric((gamma[1], gamma[0]), False)}))
    return SignatureReport(
        grading=g, module=module, index=g.index, h0_compact=True,
        counts=counts, gamma_signature=gamma, metric_signatures=metrics,
        reasons=(f'{counts[0]} compact and {counts[1]} noncompact roots '
                 'move the highest weight',))


def reducible_signature(g: RealFormGrading, module: ModuleDescriptor,
                        hermitian: Signature) -> SignatureReport:
    """
    U + U* with gamma|U of signature (p, q) for su(p,q) or (2p, 2q) for
    sp(p,q): the open orbits are the non-null lines of U.
    """
    if len(module.summands) != 2 or len(g.algebra) != 1:
        raise RealFormError(
            f"{module} is not U + U* over a simple algebra")
    weight = module.summands[0][0].highest_weight
    h0_compact = stabilizer_compactness(g, weight)
    counts = root_counts(g, (weight,))
    options = metric_options(hermitian)
    reasons = [f'gamma restricted to U has signature {hermitian}']
    if h0_compact and counts not in options:
        message = (f"{module} under {g.name}: root counts {counts} are "
                   f"not among the metric signatures {options}")
        logging.error(message)
        raise ClassificationViolation(message)
    if not h0_compact:
        reasons.append('the stabilizer of the base point is not compact')
    return SignatureReport(
        grading=g, module=module, index=g.index, h0_compact=h0_compact,
        counts=counts, gamma_signature=tuple(hermitian),
        metric_signatures=options, reasons=tuple(reasons))
