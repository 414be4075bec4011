from src.orbits.orbit import (OrbitReport, is_lagrangian,
                              is_standard_special_linear_or_symplectic,
                              levi_of_stabilizer,
                              matches_sl2_times_orthogonal,
                              orbit_dimension_levi, orbit_dimension_roots,
                              orbit_report, tensor_orbit_dimension,
                              twice_is_root)

__all__ = [
    'OrbitReport', 'is_lagrangian', 'is_standard_special_linear_or_symplectic',
    'levi_of_stabilizer', 'matches_sl2_times_orthogonal',
    'orbit_dimension_levi', 'orbit_dimension_roots', 'orbit_report',
    'tensor_orbit_dimension', 'twice_is_root',
]
