"""Exact computations in the quotient ring F[x_{n x n}]/I_n.

The ring's standard monomials are indexed by permutations through Viennot's
shadow lines; its Hilbert series counts permutations by longest increasing
subsequence.  Submodules: :mod:`schensted_core`, :mod:`matrix_ring`,
:mod:`local_stats`, :mod:`rep_theory`, :mod:`checks`, :mod:`cli`.
"""

from .errors import DomainError, ParseError, ResourceGuardError
from .field import GF, QQ, field_from_name
from .guards import ResourceLimits, resource_limits
from .local_stats import (
    PermutationStatistic,
    builtin_statistic,
    decompose,
    indicator,
    junta_basis,
    minimal_locality,
)
from .matrix_ring import (
    evaluation_matrix,
    hilbert_series,
    ideal_generators,
    ideal_membership,
    marching_rewrite,
    normal_form,
    standard_monomial_basis,
)
from .polynomial import GridMonomial, Polynomial, format_polynomial, parse_polynomial
from .rep_theory import (
    alpha,
    character_table,
    check_equivariant_conjecture,
    check_novak_rhoades,
    graded_character,
    kronecker,
    kronecker_coefficient,
)
from .schensted_core import (
    Permutation,
    RookPlacement,
    ballot_check,
    insertion_schensted,
    lis,
    parse_permutation,
    parse_rook_placement,
    shadow_lines,
    shadow_set,
    shadow_set_to_permutation,
    viennot_schensted,
)

__version__ = "0.1.0"
