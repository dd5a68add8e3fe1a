"""Reference tables of generalized Bernoulli numbers, and table building.

GOLDEN_APPENDIX is a static exact-rational fixture (n = 0..12 per column)
used as a regression anchor that is independent of the computation path.
The ``B`` column holds the plain Bernoulli numbers.
"""

from __future__ import annotations

from fractions import Fraction

from .arith import format_rational
from .bernoulli import bernoulli_number
from .dirichlet import generalized_bernoulli_number, parse_character

GOLDEN_NMAX = 12

GOLDEN_APPENDIX: dict[str, tuple[str, ...]] = {
    "B": ("1", "-1/2", "1/6", "0", "-1/30", "0", "1/42", "0", "-1/30", "0", "5/66", "0", "-691/2730"),
    "kronecker:3": ("0", "-1/3", "0", "2/3", "0", "-10/3", "0", "98/3", "0", "-1618/3", "0", "40634/3", "0"),
    "chi4": ("0", "-1/2", "0", "3/2", "0", "-25/2", "0", "427/2", "0", "-12465/2", "0", "555731/2", "0"),
    "kronecker:5": ("0", "0", "4/5", "0", "-8", "0", "804/5", "0", "-5776", "0", "1651004/5", "0", "-27622104"),
    "kronecker:7": ("0", "-1", "0", "48/7", "0", "-160", "0", "8176", "0", "-5086656/7", "0", "99070928", "0"),
    "kronecker:11": ("0", "-1", "0", "18", "0", "-12750/11", "0", "152082", "0", "-33743250", "0", "11392546506", "0"),
    "kronecker:13": ("0", "0", "4", "0", "-232", "0", "401556/13", "0", "-7482704", "0", "2890943420", "0", "-1634752049016"),
    "kronecker:17": ("0", "0", "8", "0", "-656", "0", "138984", "0", "-958428704/17", "0", "37040430040", "0", "-35766492971568"),
    "kronecker:19": ("0", "-1", "0", "66", "0", "-13450", "0", "5303074", "0", "-66751985430/19", "0", "3539203405562", "0"),
    "kronecker:23": ("0", "-3", "0", "144", "0", "-34080", "0", "18665136", "0", "-17895000384", "0", "605747775717744/23", "0"),
}

#: The column groupings of the two reference tables.
TABLE1_CHARS = ("B", "kronecker:3", "chi4", "kronecker:5", "kronecker:7", "kronecker:11")
TABLE2_CHARS = ("kronecker:13", "kronecker:17", "kronecker:19", "kronecker:23")


def table_cell(char_literal: str, n: int) -> str:
    """Exact rendering of one table cell: the plain Bernoulli number for
    column ``B``, otherwise the generalized Bernoulli number."""
    if char_literal == "B":
        return format_rational(bernoulli_number(n))
    chi = parse_character(char_literal)
    value = generalized_bernoulli_number(chi, n)
    if not isinstance(value, Fraction):
        return str(value)
    return format_rational(value)


def build_table(char_literals, n_lo: int, n_hi: int) -> list[list[str]]:
    """Rows [n, cell, cell, ...] for n in the inclusive range, all exact strings."""
    if not 0 <= n_lo <= n_hi <= 64:
        raise ValueError("n range must lie within 0..64")
    rows = []
    for n in range(n_lo, n_hi + 1):
        rows.append([str(n)] + [table_cell(c, n) for c in char_literals])
    return rows


def golden_diff(char_literals, n_lo: int, n_hi: int) -> list[str]:
    """Compare computed cells against the embedded fixture; returns diff lines
    (empty means full match).  Raises if a requested cell has no fixture."""
    for c in char_literals:
        if c not in GOLDEN_APPENDIX:
            raise ValueError(f"no golden data for character {c!r}")
    if not 0 <= n_lo <= n_hi <= GOLDEN_NMAX:
        raise ValueError(f"golden data covers n = 0..{GOLDEN_NMAX} only")
    diffs = []
    for n in range(n_lo, n_hi + 1):
        for c in char_literals:
            computed = table_cell(c, n)
            expected = GOLDEN_APPENDIX[c][n]
            if computed != expected:
                diffs.append(f"n={n} {c}: computed {computed} != expected {expected}")
    return diffs
