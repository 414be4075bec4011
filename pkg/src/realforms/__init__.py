from src.realforms.gradings import (RealFormGrading, enumerate_real_forms,
                                    index, real_form_name, real_forms_of,
                                    resolve_real_form, stabilizer_compactness,
                                    weyl_orbit)
from src.realforms.signature import (SignatureReport, hermitian_signature,
                                     metric_options, reducible_signature,
                                     root_counts)
from src.realforms.main_theorem import (CompactStabilizerForm,
                                        CompactStabilizerReport,
                                        MainTheoremCase, signature_report,
                                        reproduce_compact_stabilizer_forms,
                                        verify_case, verify_main_theorem)

__all__ = [
    'RealFormGrading', 'enumerate_real_forms', 'index', 'real_form_name',
    'real_forms_of', 'resolve_real_form', 'stabilizer_compactness',
    'weyl_orbit', 'SignatureReport', 'hermitian_signature', 'metric_options',
    'reducible_signature', 'root_counts', 'CompactStabilizerForm',
    'CompactStabilizerReport', 'MainTheoremCase', 'signature_report',
    'reproduce_compact_stabilizer_forms', 'verify_case',
    'verify_main_theorem',
]
