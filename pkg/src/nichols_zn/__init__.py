"""Realizability and finite-dimensionality of diagonal braidings over Z_n."""

from .braiding import GDD, BraidingMatrix, DegreeLattice, RootExp, canonical_form, gdd_of, permutation_similar
from .budget import BudgetExceeded, UnsupportedModulus
from .classify import (CaseLabel, Verdict, classify, enumerate_rank2, enumerate_rank3,
                       rank2_case, rank3_case, rank_ge4_verdict, weyl_orbit, weyl_reflect)
from .modarith import (QuadCongruence, SolutionSet, crt_combine, factorize, hensel_lift,
                       legendre, solve_linear, solve_quadratic, sqrt_mod_prime_power)
from .nichols import (BracketWord, is_quantum_linear_space, rank2_pbw_special, rank3_dimension,
                      rank3_pbw)
from .realize import (BilinearSystem, Realization, oracle_realize, rank2_solvable, rank2_solve,
                      rank3_solve_coprime, rank3_solve_t1_unit, realize_gdd, realize_matrix)

__all__ = [
    "BilinearSystem", "BracketWord", "BraidingMatrix", "DegreeLattice", "BudgetExceeded", "CaseLabel", "GDD",
    "QuadCongruence", "Realization", "RootExp", "SolutionSet", "UnsupportedModulus", "Verdict",
    "canonical_form", "classify", "crt_combine", "enumerate_rank2", "enumerate_rank3",
    "factorize", "gdd_of", "hensel_lift", "is_quantum_linear_space", "legendre",
    "oracle_realize", "permutation_similar", "rank2_case", "rank2_pbw_special",
    "rank2_solvable", "rank2_solve", "rank3_case", "rank3_dimension", "rank3_pbw",
    "rank3_solve_coprime", "rank3_solve_t1_unit", "rank_ge4_verdict", "realize_gdd",
    "realize_matrix", "solve_linear", "solve_quadratic", "sqrt_mod_prime_power",
    "weyl_orbit", "weyl_reflect",
]
