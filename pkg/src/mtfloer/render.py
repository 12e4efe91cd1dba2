"""Profile renderers: ASCII staircase, deterministic SVG, matplotlib PNG.

The SVG emitter is hand-rolled so that output is byte-identical across
runs: coordinates are computed in exact arithmetic with fixed integer
scales and serialized through one formatting path.  Lattice points are
joined piecewise-linearly and a horizontal guide line is drawn just
above every odd integer in range, so wells show up as the finite
intervals where the graph dips below a guide.

The PNG path goes through matplotlib (Agg) and is meant for reports,
not for byte-stable comparisons.
"""

from __future__ import annotations

from fractions import Fraction

from .gradings import GradingProfile

GUIDE_OFFSET = Fraction(1, 4)   # guide sits this far above its odd integer
X_SCALE = 24                    # pixels per lattice unit
Y_SCALE = 16
MARGIN = 30


def lattice_values(profile: GradingProfile, window: tuple[int, int]):
    """[(x2, F(x2/2))] over the doubled lattice of the window."""
    lo, hi = window
    return [(x2, profile.evaluate2(x2)) for x2 in range(2 * lo, 2 * hi + 1)]


def _odd_range(values) -> range:
    ys = [v for _, v in values]
    lo, hi = min(ys), max(ys)
    start = lo if lo % 2 else lo + 1
    return range(start, hi + 1, 2)


def ascii_plot(profile: GradingProfile, window: tuple[int, int]) -> str:
    """Character plot: one column per lattice point, 'o' at the value,
    guide rows of '-' on the odd integers, and a value table footer."""
    values = lattice_values(profile, window)
    ys = [v for _, v in values]
    y_lo, y_hi = min(ys), max(ys)
    guides = set(_odd_range(values))
    lines = []
    for y in range(y_hi, y_lo - 1, -1):
        fill = "-" if y in guides else " "
        row = "".join("o" if v == y else fill for _, v in values)
        lines.append(f"{y:>5} |{row}")
    footer = ["", "x:    " + " ".join(_fmt_half(x2) for x2, _ in values),
              "F(x): " + " ".join(str(v) for _, v in values)]
    return "\n".join(lines + footer)


def _fmt_half(x2: int) -> str:
    return str(x2 // 2) if x2 % 2 == 0 else f"{x2}/2"


def svg_plot(profile: GradingProfile, window: tuple[int, int]) -> str:
    """Deterministic SVG staircase with guide lines."""
    values = lattice_values(profile, window)
    ys = [v for _, v in values]
    y_lo, y_hi = min(ys), max(ys)
    x2_lo = values[0][0]
    x2_hi = values[-1][0]

    def px(x2) -> str:
        return _num(MARGIN + Fraction(X_SCALE * (x2 - x2_lo), 2))

    def py(y) -> str:
        return _num(MARGIN + Y_SCALE * (Fraction(y_hi) - Fraction(y)))

    width = _num(2 * MARGIN + Fraction(X_SCALE * (x2_hi - x2_lo), 2))
    height = _num(2 * MARGIN + Y_SCALE * (y_hi - y_lo))
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" '
        f'height="{height}" viewBox="0 0 {width} {height}">',
        f'<rect width="{width}" height="{height}" fill="white"/>',
    ]
    for n in _odd_range(values):
        y = py(Fraction(n) + GUIDE_OFFSET)
        parts.append(
            f'<line x1="{px(x2_lo)}" y1="{y}" x2="{px(x2_hi)}" y2="{y}" '
            f'stroke="#bbbbbb" stroke-width="1" stroke-dasharray="4,3"/>')
    points = " ".join(f"{px(x2)},{py(v)}" for x2, v in values)
    parts.append(
        f'<polyline points="{points}" fill="none" stroke="black" '
        f'stroke-width="1.5"/>')
    for x2, v in values:
        parts.append(
            f'<circle cx="{px(x2)}" cy="{py(v)}" r="2" fill="black"/>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def _num(value: Fraction | int) -> str:
    frac = Fraction(value)
    if frac.denominator == 1:
        return str(frac.numerator)
    return str(float(frac))   # denominators here are 2 or 4: exact floats


def png_plot(profile: GradingProfile, window: tuple[int, int], path: str) -> None:
    """Render the staircase to a PNG file via matplotlib."""
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    values = lattice_values(profile, window)
    xs = [x2 / 2 for x2, _ in values]
    ys = [v for _, v in values]
    fig, ax = plt.subplots(figsize=(8, 4.5))
    for n in _odd_range(values):
        ax.axhline(n + float(GUIDE_OFFSET), color="0.75", lw=0.8, ls="--")
    ax.plot(xs, ys, marker="o", ms=3, lw=1.2, color="black")
    ax.set_xlabel("x")
    ax.set_ylabel("F(x)")
    ax.set_title(f"profile, period {profile.period}, "
                 f"slope {profile.slope}")
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
