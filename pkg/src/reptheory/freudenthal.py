"""Weight multiplicities by Freudenthal's recursion.

Only meant as an oracle for small modules; the size guard comes from
``reptheory.freudenthal_max_dim`` in params.yaml.
"""
from __future__ import annotations

from src.exceptions import InstanceTooLargeError, RepresentationError
from src.logger import logging
from src.reptheory.irreps import IrrepDescriptor, weyl_dimension
from src.rootsys import Weight, build_root_system

DEFAULT_MAX_DIM = 500


def _weight_layers(d: IrrepDescriptor) -> list[list[Weight]]:
    """Weights of V(lambda) grouped by depth below lambda.

    mu - alpha_i is a weight iff the alpha_i-string through mu reaches it,
    i.e. 1 <= <mu, alpha_i^v> + q with q the steps up from mu.
    """
    rs = build_root_system(d.algebra)
    simple_weights = [rs.fundamental_coords(root) for root in rs.simple_roots]
    known = {d.highest_weight}
    layers = [[d.highest_weight]]
    while layers[-1]:
        below = set()
        for mu in layers[-1]:
            for i, alpha in enumerate(simple_weights):
                q = 0
                upper = mu + alpha
                while upper in known:
                    q += 1
                    upper = upper + alpha
                if mu.coords[i] + q >= 1:
                    below.add(mu - alpha)
        known.update(below)
        layers.append(sorted(below))
    return layers[:-1]


def _quotient(d: IrrepDescriptor, mu: Weight, numerator: int,
              gap: int) -> int:
    multiplicity, remainder = divmod(numerator, gap)
    if remainder:
        raise RepresentationError(
            f"Freudenthal recursion for {d} is not integral at {mu}: "
            f"{numerator}/{gap}")
    return multiplicity


def freudenthal_multiplicities(d: IrrepDescriptor,
                               max_dim: int = DEFAULT_MAX_DIM
                               ) -> dict[Weight, int]:
    """Full weight-multiplicity table of the irreducible module ``d``."""
    dimension = weyl_dimension(d)
    if dimension > max_dim:
        raise InstanceTooLargeError(
            f"{d} has dimension {dimension} above the Freudenthal guard "
            f"{max_dim}; raise reptheory.freudenthal_max_dim in params.yaml "
            "to run it")

    rs = build_root_system(d.algebra)
    rho = Weight((1,) * rs.rank)
    positive = [rs.fundamental_coords(root) for root in rs.positive_roots]
    top = d.highest_weight + rho
    top_norm = rs.inner_product_scaled(top, top)

    multiplicities: dict[Weight, int] = {}
    for depth, layer in enumerate(_weight_layers(d)):
        for mu in layer:
            if depth == 0:
                multiplicities[mu] = 1
                continue
            total = 0
            for alpha in positive:
                shifted = mu + alpha
                while shifted in multiplicities:
                    total += (multiplicities[shifted]
                              * rs.inner_product_scaled(shifted, alpha))
                    shifted = shifted + alpha
            shifted_mu = mu + rho
            gap = top_norm - rs.inner_product_scaled(shifted_mu, shifted_mu)
            multiplicities[mu] = _quotient(d, mu, 2 * total, gap)

    logging.debug('Freudenthal table of %s: %d distinct weights',
                  d, len(multiplicities))
    return multiplicities
