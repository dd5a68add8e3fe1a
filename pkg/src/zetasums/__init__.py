"""Exact special values of zeta and L-functions at non-positive integers.

Everything is computed in exact arithmetic: values are rationals (or
cyclotomic numbers for non-real characters), never floats.  Each special
value is reachable by independent routes -- Bernoulli closed forms and
definite integrals of partial-power-sum polynomials -- and the verification
suites check the routes against each other as exact equalities.
"""

from .arith import (
    INFINITY,
    CyclotomicElement,
    Rational,
    cyclotomic_polynomial,
    euler_phi,
    format_rational,
    is_prime,
    padic_valuation,
    parse_rational,
)
from .bernoulli import bernoulli_number, bernoulli_poly, euler_number, euler_poly
from .congruence import (
    INTEGER_BRANCH,
    PARITY_ZERO,
    POLE_BRANCH,
    PropA1Verdict,
    check_prop_a1,
    classify_quadratic_bernoulli,
    congruence_p2,
    power_sum_mod_p,
)
from .dirichlet import (
    CharacterError,
    DirichletCharacter,
    character_from_table,
    chi4,
    generalized_bernoulli_number,
    generalized_bernoulli_poly,
    parse_character,
    quadratic_character,
    tilde_bernoulli_poly,
    trivial_character,
)
from .lvalues import (
    PiPower,
    SpecialValueResult,
    char_power_sum_poly,
    char_sum_poly,
    chi4_value_euler,
    chi4_value_powersum,
    euler_number_half,
    hurwitz_value,
    hurwitz_value_integral,
    l_value,
    l_value_hurwitz,
    l_value_parity_integral,
    lerch_value,
    power_sum_half_integral,
    power_sum_half_integral_closed_form,
    twisted_l_value,
    twisted_l_value_hurwitz,
    verify_proof_identities,
    zeta_even_value,
    zeta_value,
    zeta_value_integral,
)
from .poly import Polynomial
from .report import Check, VerificationReport
from .suites import SUITES, run_suite
from .sums import (
    offset_power_sum_poly,
    offset_power_sum_poly_recursive,
    power_sum_poly,
    signed_area_poly,
)

__version__ = "0.1.0"

__all__ = [
    "INFINITY",
    "INTEGER_BRANCH",
    "PARITY_ZERO",
    "POLE_BRANCH",
    "SUITES",
    "Check",
    "CharacterError",
    "CyclotomicElement",
    "DirichletCharacter",
    "PiPower",
    "Polynomial",
    "PropA1Verdict",
    "Rational",
    "SpecialValueResult",
    "VerificationReport",
    "bernoulli_number",
    "bernoulli_poly",
    "char_power_sum_poly",
    "char_sum_poly",
    "character_from_table",
    "check_prop_a1",
    "chi4",
    "chi4_value_euler",
    "chi4_value_powersum",
    "classify_quadratic_bernoulli",
    "congruence_p2",
    "cyclotomic_polynomial",
    "euler_number",
    "euler_number_half",
    "euler_phi",
    "euler_poly",
    "format_rational",
    "generalized_bernoulli_number",
    "generalized_bernoulli_poly",
    "hurwitz_value",
    "hurwitz_value_integral",
    "is_prime",
    "l_value",
    "l_value_hurwitz",
    "l_value_parity_integral",
    "lerch_value",
    "offset_power_sum_poly",
    "offset_power_sum_poly_recursive",
    "padic_valuation",
    "parse_character",
    "parse_rational",
    "power_sum_half_integral",
    "power_sum_half_integral_closed_form",
    "power_sum_mod_p",
    "power_sum_poly",
    "quadratic_character",
    "run_suite",
    "signed_area_poly",
    "tilde_bernoulli_poly",
    "trivial_character",
    "twisted_l_value",
    "twisted_l_value_hurwitz",
    "verify_proof_identities",
    "zeta_even_value",
    "zeta_value",
    "zeta_value_integral",
]
