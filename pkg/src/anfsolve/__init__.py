"""All-solution solver for Boolean equation systems in algebraic normal form."""

from .anf import (
    CONTRADICTION,
    AnfParseError,
    AnfPoly,
    OnSet,
    Term,
    cofactor,
    evaluate,
    on_set,
    parse_anf,
    parse_term,
    serialize_anf,
    serialize_term,
    support,
    term_product,
)
from .implicants import ImplicantSet, Verdict, generate_implicants, verify_implicant_set
from .solver import Formula, SolveResult, SolveStats, boolean_solve, choose_pivot, dedup_and_sort, reduce_formula
from .oracle import SolutionSet, brute_force_solutions, check_equivalence, expand_implicants
from .analysis import (
    SpeedupReport,
    amdahl_speedup,
    count_models,
    critical_speedup,
    extremal_weight_solutions,
    speedup_report,
)
from .generator import GenSpec, generate_system

__version__ = "0.1.0"
