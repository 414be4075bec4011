from src.grading.highest_root import (GRADES, HighestRootGrading,
                                      highest_root_grading,
                                      standard_module_of)
from src.grading.table1 import Table1Row, table1, table1_row

__all__ = [
    'GRADES', 'HighestRootGrading', 'highest_root_grading',
    'standard_module_of', 'Table1Row', 'table1', 'table1_row',
]
