from src.rootsys.types import (CONVENTION_NOTE, Family, Root, SimpleType,
                               Weight, types_to_str)
from src.rootsys.cartan import cartan_matrix, simple_root_lengths
from src.rootsys.root_system import (RootSystem, build_root_system, pairing,
                                     positive_roots_from_cartan)
from src.rootsys.subsystem import (SubRootSystem, SubRootSystemComponent,
                                   automorphisms, identify_cartan,
                                   sorted_types, sub_root_system,
                                   sub_root_system_type)

__all__ = [
    'CONVENTION_NOTE', 'Family', 'Root', 'SimpleType', 'Weight',
    'types_to_str', 'cartan_matrix', 'simple_root_lengths', 'RootSystem',
    'build_root_system', 'pairing', 'positive_roots_from_cartan',
    'SubRootSystem', 'SubRootSystemComponent', 'automorphisms',
    'identify_cartan', 'sorted_types', 'sub_root_system',
    'sub_root_system_type',
]
