"""Command-line interface.

Commands:
  value   -- print one exact special value (zeta, hurwitz, lvalue, twisted,
             chi4, lerch, bernoulli, gbernoulli)
  table   -- tabulate generalized Bernoulli numbers; optionally compare
             cell-for-cell against the embedded reference fixture
  verify  -- run a named identity-verification suite
  plot    -- sample polynomial families to CSV/JSON and render a PNG figure

Exit codes: 0 success / all checks passed, 1 verification or I/O failure,
2 usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import lvalues, plotting, suites, tables
from .arith import format_rational, parse_rational
from .bernoulli import bernoulli_number, bernoulli_poly
from .dirichlet import generalized_bernoulli_number, generalized_bernoulli_poly, parse_character, tilde_bernoulli_poly
from .lvalues import SpecialValueResult
from .sums import offset_power_sum_poly, power_sum_poly, signed_area_poly


class UsageError(ValueError):
    pass


def _parse_range(text: str) -> tuple[Fraction, Fraction]:
    parts = text.split("..")
    if len(parts) != 2:
        raise UsageError(f"range must look like lo..hi, got {text!r}")
    lo, hi = parse_rational(parts[0]), parse_rational(parts[1])
    if hi <= lo:
        raise UsageError(f"range is empty: {text}")
    return lo, hi


def _parse_int_range(text: str) -> tuple[int, int]:
    parts = text.split("..")
    if len(parts) == 1:
        n = int(parts[0])
        return n, n
    if len(parts) != 2:
        raise UsageError(f"range must look like lo..hi, got {text!r}")
    return int(parts[0]), int(parts[1])


def _parse_int_list(text: str) -> list[int]:
    return [int(v) for v in text.split(",") if v.strip()]


def _nonpositive_index(s: int, what: str) -> int:
    if s > 0:
        raise UsageError(f"{what} is exact only at non-positive integers, got {s}")
    return -s


# -- value ---------------------------------------------------------------------

def _value_zeta(args) -> SpecialValueResult:
    s = args.n
    if s > 0:
        if s % 2:
            raise UsageError("zeta at positive odd integers has no known exact form")
        if args.route and args.route != "closed_form":
            raise UsageError("positive even zeta values support only the closed form")
        return SpecialValueResult(lvalues.zeta_even_value(s // 2), "closed_form", (s,))
    n = -s
    if args.route == "integral":
        return SpecialValueResult(lvalues.zeta_value_integral(n), "integral", (s,))
    return SpecialValueResult(lvalues.zeta_value(n), "closed_form", (s,))


def _value_hurwitz(args) -> SpecialValueResult:
    n = _nonpositive_index(args.n, "hurwitz zeta")
    a = parse_rational(args.a)
    if args.route == "integral":
        return SpecialValueResult(lvalues.hurwitz_value_integral(n, a), "integral", (args.n, a))
    return SpecialValueResult(lvalues.hurwitz_value(n, a), "closed_form", (args.n, a))


def _value_lvalue(args) -> SpecialValueResult:
    n = _nonpositive_index(args.n, "L(s, chi)")
    chi = parse_character(args.char)
    if args.route == "integral":
        return SpecialValueResult(lvalues.l_value_parity_integral(chi, n), "integral", (args.n, str(chi)))
    if args.route == "hurwitz_scaled":
        return SpecialValueResult(lvalues.l_value_hurwitz(chi, n), "hurwitz_scaled", (args.n, str(chi)))
    return SpecialValueResult(lvalues.l_value(chi, n), "closed_form", (args.n, str(chi)))


def _value_twisted(args) -> SpecialValueResult:
    n = _nonpositive_index(args.n, "L(s, a, chi)")
    chi = parse_character(args.char)
    a = parse_rational(args.a)
    if args.route == "hurwitz_scaled":
        return SpecialValueResult(lvalues.twisted_l_value_hurwitz(chi, n, a), "hurwitz_scaled", (args.n, a, str(chi)))
    return SpecialValueResult(lvalues.twisted_l_value(chi, n, a), "closed_form", (args.n, a, str(chi)))


def _value_chi4(args) -> SpecialValueResult:
    n = _nonpositive_index(args.n, "L(s, chi4)")
    if args.route == "euler_poly":
        return SpecialValueResult(lvalues.chi4_value_euler(n), "euler_poly", (args.n,))
    if args.route == "closed_form":
        return SpecialValueResult(lvalues.l_value(parse_character("chi4"), n), "closed_form", (args.n,))
    return SpecialValueResult(lvalues.chi4_value_powersum(n), "integral", (args.n,))


def _value_lerch(args) -> SpecialValueResult:
    c = parse_rational(args.c)
    a = parse_rational(args.a)
    return SpecialValueResult(lvalues.lerch_value(c, args.k, a), "euler_poly", (str(c), args.k, a))


def _value_bernoulli(args):
    if args.n < 0:
        raise UsageError("Bernoulli index must be >= 0")
    if args.poly:
        return bernoulli_poly(args.n)
    return bernoulli_number(args.n)


def _value_gbernoulli(args):
    if args.n < 0:
        raise UsageError("generalized Bernoulli index must be >= 0")
    chi = parse_character(args.char)
    if args.tilde:
        return tilde_bernoulli_poly(chi, args.n)
    if args.poly:
        return generalized_bernoulli_poly(chi, args.n)
    return generalized_bernoulli_number(chi, args.n)


def cmd_value(args) -> int:
    handler = {
        "zeta": _value_zeta,
        "hurwitz": _value_hurwitz,
        "lvalue": _value_lvalue,
        "twisted": _value_twisted,
        "chi4": _value_chi4,
        "lerch": _value_lerch,
        "bernoulli": _value_bernoulli,
        "gbernoulli": _value_gbernoulli,
    }[args.kind]
    result = handler(args)
    if isinstance(result, SpecialValueResult):
        value = result.value
        if isinstance(value, Fraction):
            rendered = format_rational(value)
        else:
            rendered = str(value)
        if getattr(args, "route", None):
            print(f"{rendered} ({result.route})")
        else:
            print(rendered)
    else:
        print(format_rational(result) if isinstance(result, Fraction) else str(result))
    return 0


# -- table ----------------------------------------------------------------------

def _render_markdown(header: list[str], rows: list[list[str]]) -> str:
    lines = ["| " + " | ".join(header) + " |",
             "|" + "|".join("---" for _ in header) + "|"]
    for row in rows:
        lines.append("| " + " | ".join(row) + " |")
    return "\n".join(lines)


def cmd_table(args) -> int:
    chars = [c.strip() for c in args.chars.split(",") if c.strip()]
    if not chars:
        raise UsageError("--chars must list at least one character")
    n_lo, n_hi = _parse_int_range(args.n)
    for literal in chars:
        if literal != "B":
            parse_character(literal)  # validate early for a clean usage error
    if args.golden:
        diffs = tables.golden_diff(chars, n_lo, n_hi)
        if diffs:
            print(f"golden mismatch ({len(diffs)} cells):")
            for d in diffs:
                print("  " + d)
            return 1
        total = (n_hi - n_lo + 1) * len(chars)
        print(f"golden match: {total} cells identical")
        return 0
    rows = tables.build_table(chars, n_lo, n_hi)
    header = ["n"] + chars
    if args.format == "csv":
        print(",".join(header))
        for row in rows:
            print(",".join(row))
    elif args.format == "json":
        print(json.dumps({"columns": header, "rows": rows}, indent=2))
    else:
        print(_render_markdown(header, rows))
    return 0


# -- verify -----------------------------------------------------------------------

def cmd_verify(args) -> int:
    kwargs = {"jobs": args.jobs}
    if args.nmax is not None:
        kwargs["nmax"] = args.nmax
    if args.primes:
        kwargs["primes"] = tuple(_parse_int_list(args.primes))
    if args.a_set:
        kwargs["a_values"] = tuple(parse_rational(v) for v in args.a_set.split(","))
    report = suites.run_suite(args.suite, **kwargs)
    print(report.render(verbose=args.verbose))
    return 0 if report.ok else 1


# -- plot -------------------------------------------------------------------------

def _plot_poly(target: str, n: int, a: Fraction | None):
    if target == "sn":
        return power_sum_poly(n), f"S_{n}"
    if target == "sna":
        if a is None:
            raise UsageError("plot sna requires --a")
        return offset_power_sum_poly(n, a), f"S_{n},a={a}"
    if target == "phi":
        return signed_area_poly(n), f"phi_{n}"
    raise UsageError(f"unknown plot target {target!r}")


def cmd_plot(args) -> int:
    if args.samples < 2:
        raise UsageError("--samples must be >= 2")
    lo, hi = _parse_range(args.range)
    indices = _parse_int_list(args.n)
    if not indices:
        raise UsageError("--n must list at least one index")
    a = parse_rational(args.a) if args.a else None
    series = []
    for n in indices:
        if n < 0:
            raise UsageError("indices must be >= 0")
        poly, label = _plot_poly(args.target, n, a)
        series.append(plotting.sample_poly(poly, label, lo, hi, args.samples))
    fmt = args.format
    if fmt is None:
        fmt = "json" if args.out and args.out.endswith(".json") else "csv"
    payload = plotting.series_to_json(series) if fmt == "json" else plotting.series_to_csv(series)
    if not args.out:
        sys.stdout.write(payload)
        return 0
    try:
        with open(args.out, "w") as fh:
            fh.write(payload)
        written = [args.out]
        if not args.no_figure:
            figure_path = os.path.splitext(args.out)[0] + ".png"
            plotting.render_figure(series, figure_path, title=args.target)
            written.append(figure_path)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    print("wrote " + ", ".join(written))
    return 0


# -- parser ------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="zetasums",
        description="Exact zeta and L-function values at non-positive integers.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    value = sub.add_parser("value", help="print one exact value")
    vsub = value.add_subparsers(dest="kind", required=True)

    p = vsub.add_parser("zeta", help="zeta(s) for s <= 0, or s positive even (pi power)")
    p.add_argument("--n", type=int, required=True, help="the argument s")
    p.add_argument("--route", choices=["closed_form", "integral"])

    p = vsub.add_parser("hurwitz", help="zeta(s, a) for s <= 0")
    p.add_argument("--n", type=int, required=True, help="the argument s")
    p.add_argument("--a", required=True, help="offset in (0, 1]")
    p.add_argument("--route", choices=["closed_form", "integral"])

    p = vsub.add_parser("lvalue", help="L(s, chi) for s <= 0")
    p.add_argument("--char", required=True, help="character literal")
    p.add_argument("--n", type=int, required=True, help="the argument s")
    p.add_argument("--route", choices=["closed_form", "integral", "hurwitz_scaled"])

    p = vsub.add_parser("twisted", help="L(s, a, chi) for s <= 0")
    p.add_argument("--char", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--a", required=True)
    p.add_argument("--route", choices=["closed_form", "hurwitz_scaled"])

    p = vsub.add_parser("chi4", help="L(s, chi4) for s <= 0")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--route", choices=["integral", "euler_poly", "closed_form"])

    p = vsub.add_parser("lerch", help="Lerch value at 1 - k for weight c")
    p.add_argument("--c", required=True, help="weight, not 0 or -1")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--a", required=True, help="positive rational offset")

    p = vsub.add_parser("bernoulli", help="Bernoulli number or polynomial")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--poly", action="store_true")

    p = vsub.add_parser("gbernoulli", help="generalized Bernoulli number or polynomial")
    p.add_argument("--char", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--poly", action="store_true")
    p.add_argument("--tilde", action="store_true", help="the shifted polynomial variant")

    table = sub.add_parser("table", help="tabulate generalized Bernoulli numbers")
    table.add_argument("--chars", required=True, help="comma list; B means plain Bernoulli numbers")
    table.add_argument("--n", default="0..12", help="inclusive index range lo..hi")
    table.add_argument("--format", choices=["markdown", "csv", "json"], default="markdown")
    table.add_argument("--golden", choices=["appendix"], help="compare against the embedded fixture")

    verify = sub.add_parser("verify", help="run a verification suite")
    verify.add_argument("suite", choices=sorted(suites.SUITES))
    verify.add_argument("--nmax", type=int)
    verify.add_argument("--primes", help="comma list of odd primes")
    verify.add_argument("--a-set", dest="a_set", help="comma list of rational offsets")
    verify.add_argument("--jobs", type=int, default=1)
    verify.add_argument("--verbose", action="store_true", help="list every check")

    plot = sub.add_parser("plot", help="sample polynomial families to files")
    plot.add_argument("target", choices=["sn", "sna", "phi"])
    plot.add_argument("--n", required=True, help="comma list of indices")
    plot.add_argument("--a", help="offset for sna")
    plot.add_argument("--range", required=True, help="rational range lo..hi")
    plot.add_argument("--samples", type=int, default=101)
    plot.add_argument("--out", help="output path; stdout when omitted")
    plot.add_argument("--format", choices=["csv", "json"])
    plot.add_argument("--no-figure", action="store_true", help="skip the PNG figure")

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    commands = {"value": cmd_value, "table": cmd_table, "verify": cmd_verify, "plot": cmd_plot}
    try:
        return commands[args.command](args)
    except (UsageError, ValueError, ZeroDivisionError) as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
