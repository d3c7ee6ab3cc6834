"""Exact verification of argument-shift subalgebras in S(g) and U(g)."""

__version__ = "0.1.0"

from .chevalley import LieAlgebraBasis, build_lie_algebra
from .centralizer import (
    degenerate_centralizer_check,
    monomial_eigenvalue,
    poisson_centralizer,
    verify_theorem1,
)
from .invariants import ad_invariant_space, extract_generators
from .pbw import EnvelopingAlgebra, check_quadratic_lift
from .polyring import BracketPencil, GammaFunctional, SparsePoly, gamma_of_bracket, poisson_bracket, psi_t
from .rootsys import RootSystemData, build_root_system
from .shift import a_mu_graded_dim, build_Q_mu, build_shift_family, directional_derivative

__all__ = [
    "BracketPencil",
    "EnvelopingAlgebra",
    "GammaFunctional",
    "LieAlgebraBasis",
    "RootSystemData",
    "SparsePoly",
    "a_mu_graded_dim",
    "ad_invariant_space",
    "build_Q_mu",
    "build_lie_algebra",
    "build_root_system",
    "build_shift_family",
    "check_quadratic_lift",
    "degenerate_centralizer_check",
    "directional_derivative",
    "extract_generators",
    "gamma_of_bracket",
    "monomial_eigenvalue",
    "poisson_bracket",
    "poisson_centralizer",
    "psi_t",
    "verify_theorem1",
]
