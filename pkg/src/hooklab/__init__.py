"""Exact computations with hook-length formulas for skew shifted shapes."""
from .bicolored import BicoloredTableau, enumerate_bicolored, is_member, weight
from .bump import (
    InsertionTrace,
    insert,
    inverse_insert,
    repeated_insert,
    s_family,
    verify_bijection,
    verify_complexity,
    verify_sieve,
)
from .counting import enumerate_syt, f_classical, f_naruse, f_recursive
from .excited import ExcitedDiagram, MoveTableau, enumerate_excited
from .poly import (
    Poly,
    excited_enumerator,
    theorem1_lhs,
    theorem1_rhs,
    verify_theorem1,
    verify_theorem_z,
    verify_weighted_recursion,
    weighted_hook,
    x_var_z,
)
from .shapes import (
    Kind,
    StrictPartition,
    col_len,
    diagram,
    hook_length,
    hook_lengths,
    w_set,
    x_var,
)

__version__ = "0.1.0"
