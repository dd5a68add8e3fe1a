"""Named verification suites: each re-derives a family of identities by two
independent routes and reports exact-equality results.

All library calls are pure, so suites may fan out over their parameter grids
with a thread pool (``jobs``); check order stays deterministic.
"""

from __future__ import annotations

import inspect
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

from . import congruence, lvalues
from .bernoulli import bernoulli_number, bernoulli_poly, euler_number, euler_poly
from .dirichlet import DirichletCharacter, chi4, generalized_bernoulli_poly, quadratic_character
from .poly import Polynomial
from .report import VerificationReport
from .sums import (
    offset_power_sum_poly,
    offset_power_sum_poly_recursive,
    power_sum_poly,
    signed_area_poly,
)

DEFAULT_A_GRID = (
    Fraction(1),
    Fraction(1, 2),
    Fraction(1, 3),
    Fraction(2, 3),
    Fraction(1, 4),
    Fraction(3, 4),
    Fraction(1, 5),
    Fraction(1, 7),
)

DEFAULT_CHARS = ("kronecker:3", "chi4", "kronecker:5", "kronecker:7", "kronecker:11")

DEFAULT_PRIMES = (3, 5, 7, 11, 13, 17, 19, 23)


def _char_grid(literals=DEFAULT_CHARS) -> list[DirichletCharacter]:
    from .dirichlet import parse_character

    return [parse_character(c) for c in literals]


def _pmap(fn, items, jobs: int = 1) -> list:
    if jobs <= 1:
        return [fn(item) for item in items]
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items))


def _reflect(p: Polynomial) -> Polynomial:
    """q(x) = p(1 - x)."""
    return p.scale_arg(-1).shift(-1)


def suite_hurwitz_integral(nmax: int = 30, a_values=DEFAULT_A_GRID, jobs: int = 1) -> VerificationReport:
    """Closed form vs. power-sum integral for zeta(-n, a) over the grid."""
    report = VerificationReport("hurwitz-integral")

    def run(n: int) -> list:
        return [
            (n, a, lvalues.hurwitz_value(n, a), lvalues.hurwitz_value_integral(n, a))
            for a in a_values
        ]

    for rows in _pmap(run, range(nmax + 1), jobs):
        for n, a, lhs, rhs in rows:
            report.add_equal("hurwitz-closed-vs-integral", f"n={n}, a={a}", lhs, rhs)
    return report


def suite_proof_identities(nmax: int = 30, a_values=DEFAULT_A_GRID, jobs: int = 1) -> VerificationReport:
    return lvalues.verify_proof_identities(nmax, a_values)


def suite_sums_oracle(nmax: int = 12, jobs: int = 1) -> VerificationReport:
    """Brute-force finite sums vs. polynomials, plus structural identities."""
    report = VerificationReport("sums-oracle")
    offsets = (Fraction(1), Fraction(1, 2), Fraction(1, 3), Fraction(1, 4), Fraction(2, 3), Fraction(3, 4))

    def run(n: int) -> list:
        rows = []
        for a in offsets:
            poly = offset_power_sum_poly(n, a)
            rows.append(("construction-agreement", f"n={n}, a={a}",
                         poly, offset_power_sum_poly_recursive(n, a)))
            for m in range(2, 13):
                brute = sum((Fraction(k) + a) ** n for k in range(m - 1))
                rows.append(("brute-force-sum", f"n={n}, a={a}, M={m}", poly(Fraction(m)), brute))
        return rows

    for rows in _pmap(run, range(nmax + 1), jobs):
        for identity, params, lhs, rhs in rows:
            report.add_equal(identity, params, lhs, rhs)

    # n = 0 is excluded: S_0(0) = -1, so the reflection combination is the
    # constant -1 there rather than 0.
    for n in range(1, 41):
        s = power_sum_poly(n)
        combo = s + (-1) ** n * _reflect(s)
        report.add_true("antisymmetry", f"n={n}", combo.is_zero(), str(combo))

    for k in range(11):
        phi = signed_area_poly(k)
        positive = all(phi(Fraction(i, 201)) > 0 for i in range(1, 201))
        report.add_true("sign-definiteness", f"k={k}, 200 samples", positive)
    return report


def suite_lfunction_routes(nmax: int = 12, chars=DEFAULT_CHARS, jobs: int = 1) -> VerificationReport:
    """All routes to L(-n, chi) agree; partial-sum polynomial matches brute force."""
    report = VerificationReport("lfunction-routes")
    characters = _char_grid(chars)

    def run(chi: DirichletCharacter) -> list:
        rows = []
        k = chi.modulus
        for n in range(nmax + 1):
            closed = lvalues.l_value(chi, n)
            sum_poly = lvalues.char_sum_poly(chi, n)
            rows.append(("char-sum-constant", f"chi={chi}, n={n}",
                         Polynomial.constant(closed), sum_poly))
            rows.append(("scaled-hurwitz", f"chi={chi}, n={n}",
                         closed, lvalues.l_value_hurwitz(chi, n)))
            same_parity = (chi.is_even and n % 2 == 0) or (chi.is_odd and n % 2 == 1)
            if same_parity:
                rows.append(("parity-integral", f"chi={chi}, n={n}",
                             closed, lvalues.l_value_parity_integral(chi, n)))
            partial = lvalues.char_power_sum_poly(chi, n)
            rows.append(("partial-sum-at-zero", f"chi={chi}, n={n}",
                         partial(Fraction(0)), Fraction(0)))
            for m in range(1, 7):
                brute = sum(
                    (chi(r) * Fraction(r) ** n for r in range(1, m * k + 1) if chi(r)),
                    Fraction(0),
                )
                rows.append(("partial-sum-brute", f"chi={chi}, n={n}, M={m}",
                             partial(Fraction(m)), brute))
        return rows

    for rows in _pmap(run, characters, jobs):
        for identity, params, lhs, rhs in rows:
            report.add_equal(identity, params, lhs, rhs)
    return report


def suite_chi4(nmax: int = 12, jobs: int = 1) -> VerificationReport:
    """The two integral representations of L(-n, chi4) against the closed form."""
    report = VerificationReport("chi4")
    chi = chi4()
    for n in range(1, nmax + 1):
        closed = lvalues.l_value(chi, n)
        report.add_equal("powersum-rep", f"n={n}", lvalues.chi4_value_powersum(n), closed)
        report.add_equal("euler-rep", f"n={n}", lvalues.chi4_value_euler(n), closed)
        report.add_equal("half-euler-number", f"n={n}", lvalues.euler_number_half(n), closed)
    report.add_equal("worked-example", "n=2", lvalues.l_value(chi, 2), Fraction(-1, 2))
    report.add_equal("euler-rep-internal", "n=0",
                     lvalues.chi4_value_euler(0), lvalues.euler_number_half(0))
    for n in range(0, nmax + 1, 2):
        report.add_equal(
            "quarter-scaling", f"n={n}",
            lvalues.l_value(chi, n),
            Fraction(4) ** (n + 1) / 2 * lvalues.hurwitz_value(n, Fraction(1, 4)),
        )
    for n in range(21):
        integral = euler_poly(Fraction(1), n).integrate(Fraction(0), Fraction(2))
        report.add_equal("euler-unit-integral", f"n={n}", integral, Fraction(2, n + 1))
    for n in range(nmax + 1):
        b = bernoulli_poly(2 * n + 1)
        report.add_equal("odd-quarter-reflection", f"n={n}",
                         b(Fraction(3, 4)), -b(Fraction(1, 4)))
    return report


def suite_parity_integral(nmax: int = 12, chars=DEFAULT_CHARS, jobs: int = 1) -> VerificationReport:
    """The [-1/2, 1/2] integral route and its parity hypothesis."""
    report = VerificationReport("parity-integral")
    for chi in _char_grid(chars):
        k = chi.modulus
        for n in range(nmax + 1):
            same_parity = (chi.is_even and n % 2 == 0) or (chi.is_odd and n % 2 == 1)
            if same_parity:
                report.add_equal("parity-integral", f"chi={chi}, n={n}",
                                 lvalues.l_value_parity_integral(chi, n),
                                 lvalues.l_value(chi, n))
                b = generalized_bernoulli_poly(chi, n)
                report.add_equal("midpoint-symmetry", f"chi={chi}, n={n}",
                                 b(Fraction(k, 2)), b(Fraction(-k, 2)))
            else:
                try:
                    lvalues.l_value_parity_integral(chi, n)
                    report.add_true("parity-rejection", f"chi={chi}, n={n}", False,
                                    "expected parity error was not raised")
                except ValueError:
                    report.add_true("parity-rejection", f"chi={chi}, n={n}", True)
    for n in range(2, 21, 2):
        report.add_equal("half-range-integral", f"n={n}",
                         lvalues.power_sum_half_integral(n),
                         lvalues.power_sum_half_integral_closed_form(n))
    return report


def suite_prop_a1(primes=DEFAULT_PRIMES, nmax: int = 12, jobs: int = 1) -> VerificationReport:
    """Integrality classification of quadratic B_{n,chi}, plus the mod-p^2
    congruence against brute-force twisted power sums."""
    report = VerificationReport("prop-a1")

    def run(p: int) -> list:
        return congruence.check_prop_a1(p, nmax)

    for verdicts in _pmap(run, primes, jobs):
        for v in verdicts:
            report.add_true(f"classification-{v.branch}", f"p={v.p}, n={v.n}",
                            v.holds, f"B = {v.b_value}")
    from .tables import GOLDEN_APPENDIX, GOLDEN_NMAX

    for p in primes:
        key = f"kronecker:{p}"
        if key not in GOLDEN_APPENDIX:
            continue
        for v in congruence.check_prop_a1(p, min(nmax, GOLDEN_NMAX)):
            cell_zero = GOLDEN_APPENDIX[key][v.n] == "0"
            report.add_true("zero-pattern", f"p={p}, n={v.n}",
                            cell_zero == (v.b_value == 0),
                            f"table cell zero={cell_zero}, B = {v.b_value}")
            if v.branch == congruence.PARITY_ZERO:
                report.add_true("parity-zero-vanishes", f"p={p}, n={v.n}",
                                v.b_value == 0, f"B = {v.b_value}")
    for p in (3, 5, 7):
        if p in primes:
            for n in range(9):
                report.extend(congruence.congruence_p2(p, n))
    return report


def suite_euler_props(nmax: int = 40, jobs: int = 1) -> VerificationReport:
    """The three defining properties of the c-weighted Euler polynomials."""
    report = VerificationReport("euler-props")
    c_grid = (Fraction(1), Fraction(2), Fraction(-1, 2), Fraction(3, 5), Fraction(-3), Fraction(7, 4))
    for c in c_grid:
        for n in range(nmax + 1):
            e_n = euler_poly(c, n)
            if n > 0:
                report.add_true("derivative-property", f"c={c}, n={n}",
                                e_n.derivative() == n * euler_poly(c, n - 1))
                lhs = e_n.shift(1) + c * e_n
                rhs = (1 + c) * Polynomial.monomial(n)
                report.add_true("functional-equation", f"c={c}, n={n}", lhs == rhs,
                                f"lhs={lhs}")
            report.add_equal("number-from-midpoint", f"c={c}, n={n}",
                             euler_number(c, n), 2**n * e_n(Fraction(1, 2)))
    report.add_equal("classical-numbers", "c=1, n=0..10",
                     [euler_number(Fraction(1), n) for n in range(11)],
                     [Fraction(v) for v in (1, 0, -1, 0, 5, 0, -61, 0, 1385, 0, -50521)])
    return report


def suite_bernoulli_props(nmax: int = 40, jobs: int = 1) -> VerificationReport:
    """Difference equation, reflection, midpoint and odd-index vanishing."""
    report = VerificationReport("bernoulli-props")
    for n in range(1, nmax + 1):
        b = bernoulli_poly(n)
        report.add_true("difference-equation", f"n={n}",
                        b.shift(1) - b == n * Polynomial.monomial(n - 1))
        report.add_true("reflection", f"n={n}", _reflect(b) == (-1) ** n * b)
        report.add_equal("midpoint", f"n={n}", b(Fraction(1, 2)),
                         (Fraction(2) ** (1 - n) - 1) * bernoulli_number(n))
    for n in range(1, (nmax - 1) // 2 + 1):
        b = bernoulli_poly(2 * n + 1)
        for point in (Fraction(0), Fraction(1), Fraction(1, 2)):
            report.add_equal("odd-vanishing", f"n={2*n+1}, x={point}", b(point), Fraction(0))
    report.add_equal("base-values", "n=0,1",
                     [bernoulli_number(0), bernoulli_number(1)],
                     [Fraction(1), Fraction(-1, 2)])
    return report


SUITES = {
    "hurwitz-integral": suite_hurwitz_integral,
    "proof-identities": suite_proof_identities,
    "sums-oracle": suite_sums_oracle,
    "lfunction-routes": suite_lfunction_routes,
    "chi4": suite_chi4,
    "parity-integral": suite_parity_integral,
    "prop-a1": suite_prop_a1,
    "euler-props": suite_euler_props,
    "bernoulli-props": suite_bernoulli_props,
}


def run_suite(name: str, **kwargs) -> VerificationReport:
    """Run a named suite, passing through only the parameters it accepts."""
    try:
        fn = SUITES[name]
    except KeyError:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(sorted(SUITES))}")
    accepted = inspect.signature(fn).parameters
    return fn(**{k: v for k, v in kwargs.items() if k in accepted and v is not None})
