from src.reptheory.irreps import (FormType, IrrepDescriptor, ModuleDescriptor,
                                  TensorProduct, dual, dual_highest_weight,
                                  dual_module, form_type, is_self_dual,
                                  module_dimension, orthogonal_standard,
                                  semisimple_form_type,
                                  special_linear_standard,
                                  symplectic_standard, tensor_form_type,
                                  weyl_dimension, canonical_irrep,
                                  canonical_module_key, equivalent_irreps)
from src.reptheory.freudenthal import freudenthal_multiplicities

__all__ = [
    'FormType', 'IrrepDescriptor', 'ModuleDescriptor', 'TensorProduct',
    'dual', 'dual_highest_weight', 'dual_module', 'form_type',
    'is_self_dual', 'module_dimension', 'orthogonal_standard',
    'semisimple_form_type', 'special_linear_standard', 'symplectic_standard',
    'tensor_form_type', 'weyl_dimension', 'canonical_irrep',
    'canonical_module_key', 'equivalent_irreps',
    'freudenthal_multiplicities',
]
