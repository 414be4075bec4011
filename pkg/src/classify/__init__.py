from src.classify.enumeration import (bounded_symplectic_irreps,
                                      brute_force_bounded, dimension_bound,
                                      dominant_weights,
                                      enumerate_symplectic_bounded,
                                      simple_types_in_range)
from src.classify.classification import (ClassificationEntry,
                                         StandardExtension,
                                         classification_entry, classify_all,
                                         classify_semisimple, classify_simple,
                                         detect_standard_extension,
                                         semisimple_modules,
                                         standard_algebra_for)

__all__ = [
    'bounded_symplectic_irreps', 'brute_force_bounded', 'dimension_bound',
    'dominant_weights',
    'enumerate_symplectic_bounded', 'simple_types_in_range',
    'ClassificationEntry', 'StandardExtension', 'classification_entry',
    'classify_all', 'classify_semisimple', 'classify_simple',
    'detect_standard_extension', 'semisimple_modules',
    'standard_algebra_for',
]
