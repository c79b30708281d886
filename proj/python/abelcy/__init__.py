"""Exact computational algebra for Heisenberg-invariant Calabi-Yau threefolds.

Thin wrapper over the C++ core; see the project README for the full CLI.
"""

try:
    from ._abelcy import (
        AbelcyError,
        Polynomial,
        Ring,
        case_tags,
        default_prime,
        groebner,
        hilbert,
        identity_suite,
        invariant_basis,
        moore_matrix,
        normal_form,
        run_case,
        singular_scheme,
    )
except ImportError:  # in-tree builds expose the extension as a top-level module
    from _abelcy import (
        AbelcyError,
        Polynomial,
        Ring,
        case_tags,
        default_prime,
        groebner,
        hilbert,
        identity_suite,
        invariant_basis,
        moore_matrix,
        normal_form,
        run_case,
        singular_scheme,
    )

__all__ = [
    "AbelcyError",
    "Polynomial",
    "Ring",
    "case_tags",
    "default_prime",
    "groebner",
    "hilbert",
    "identity_suite",
    "invariant_basis",
    "moore_matrix",
    "normal_form",
    "run_case",
    "singular_scheme",
]
