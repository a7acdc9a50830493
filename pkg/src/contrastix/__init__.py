"""Exact solvers for logic-based contrastive explanations.

Given propositional inputs, the solvers compute size-minimal triples
(theta, theta', chi) answering "Why P but not Q?": theta & chi explains the
fact, theta' & chi the foil, and chi carries what both sides share.
"""

from .cnf import (
    CNF_BOTTOM,
    CNF_TOP,
    Clause,
    CnfFormula,
    Literal,
    PartialAssignment,
    canonicalize,
    cnf_size,
    format_cnf,
    to_cnf,
)
from .contrast import (
    is_likeness,
    is_strong_contrast,
    is_weak_contrast,
)
from .formula import (
    And,
    Atom,
    Bottom,
    Formula,
    FormulaSyntaxError,
    Not,
    Or,
    Symbol,
    Vocabulary,
    atoms,
    evaluate,
    format_formula,
    parse_formula,
    size,
)
from .oracle import (
    EnumerationBudget,
    FlipSet,
    OracleBudgetError,
    OracleResult,
    enumerate_cnf,
    oracle_min_flip,
    oracle_solve,
)
from .problem import ProblemInstance, Solution, SolveOptions, VerificationReport
from .sat import entails, equivalent, find_model, is_satisfiable
from .solver import (
    repair_inputs,
    search_iterative,
    solve,
    solve_cce,
    solve_cd,
    solve_ce,
    solve_gce,
    solve_sep,
    verify_solution,
)

__version__ = "0.1.0"

__all__ = [
    "And", "Atom", "Bottom", "CNF_BOTTOM", "CNF_TOP", "Clause", "CnfFormula",
    "EnumerationBudget", "FlipSet", "Formula", "FormulaSyntaxError", "Literal",
    "Not", "Or", "OracleBudgetError", "OracleResult", "PartialAssignment",
    "ProblemInstance", "Solution", "SolveOptions", "Symbol",
    "VerificationReport", "Vocabulary", "atoms", "canonicalize", "cnf_size",
    "entails", "enumerate_cnf", "equivalent", "evaluate", "find_model",
    "format_cnf", "format_formula", "is_likeness", "is_satisfiable",
    "is_strong_contrast", "is_weak_contrast", "oracle_min_flip", "oracle_solve",
    "parse_formula", "repair_inputs", "search_iterative", "size", "solve",
    "solve_cce", "solve_cd", "solve_ce", "solve_gce", "solve_sep", "to_cnf",
    "verify_solution",
]
