"""Sampled plot series: exact rational samples, delimited output, figures.

Series are sampled at equally spaced rational abscissae and serialized with
both the exact values and decimal approximations (12 significant digits,
round-half-even).  All comparisons elsewhere use the exact values; decimals
are display-only.  ``render_figure`` draws the same series to a PNG next to
the delimited output.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from decimal import ROUND_HALF_EVEN, localcontext
from decimal import Decimal
from fractions import Fraction

from .arith import format_rational
from .poly import Polynomial


def decimal_approx(q: Fraction, digits: int = 12) -> str:
    """Decimal string with the given number of significant digits."""
    with localcontext() as ctx:
        ctx.prec = digits
        ctx.rounding = ROUND_HALF_EVEN
        d = Decimal(q.numerator) / Decimal(q.denominator)
    return str(d)


@dataclass(frozen=True)
class PlotSeries:
    """A labelled series of exact (x, y) samples with strictly increasing x."""

    label: str
    points: tuple[tuple[Fraction, Fraction], ...]

    def __post_init__(self):
        if len(self.points) < 2:
            raise ValueError("a plot series needs at least 2 samples")
        xs = [p[0] for p in self.points]
        if any(b <= a for a, b in zip(xs, xs[1:])):
            raise ValueError("sample abscissae must be strictly increasing")


def sample_poly(poly: Polynomial, label: str, lo: Fraction, hi: Fraction, samples: int) -> PlotSeries:
    """Evaluate a polynomial at ``samples`` equally spaced rational points."""
    if samples < 2:
        raise ValueError("samples must be >= 2")
    lo, hi = Fraction(lo), Fraction(hi)
    if hi <= lo:
        raise ValueError(f"empty range: {lo}..{hi}")
    step = (hi - lo) / (samples - 1)
    points = []
    for i in range(samples):
        x = lo + i * step
        points.append((x, Fraction(poly(x))))
    return PlotSeries(label, tuple(points))


def series_to_csv(series_list: list[PlotSeries]) -> str:
    """One row per point: label, exact x, exact y, decimal x, decimal y."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["label", "x", "y", "xf", "yf"])
    for s in series_list:
        for x, y in s.points:
            writer.writerow(
                [s.label, format_rational(x), format_rational(y), decimal_approx(x), decimal_approx(y)]
            )
    return buf.getvalue()


def series_to_json(series_list: list[PlotSeries]) -> str:
    payload = {
        "series": [
            {
                "label": s.label,
                "points": [
                    {
                        "x": format_rational(x),
                        "y": format_rational(y),
                        "xf": float(decimal_approx(x)),
                        "yf": float(decimal_approx(y)),
                    }
                    for x, y in s.points
                ],
            }
            for s in series_list
        ]
    }
    return json.dumps(payload, indent=2) + "\n"


def render_figure(series_list: list[PlotSeries], path: str, title: str | None = None) -> None:
    """Draw all series into one PNG."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    fig, ax = plt.subplots(figsize=(8, 5))
    for s in series_list:
        xs = [float(x) for x, _ in s.points]
        ys = [float(y) for _, y in s.points]
        ax.plot(xs, ys, label=s.label)
    ax.axhline(0.0, color="0.6", linewidth=0.8)
    ax.set_xlabel("x")
    ax.set_ylabel("value")
    if title:
        ax.set_title(title)
    ax.grid(True, alpha=0.3)
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
