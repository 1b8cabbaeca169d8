"""One generating curve per exponent regime, classified and plotted.

The long-run shape of the axis-started solution changes qualitatively at
alpha = 0, -2, -4.  This script grades one representative exponent from each
regime (plus the two circle exponents sitting exactly on the boundaries) and
saves the curves; the verdicts come with the measured evidence that backs
them, e.g. axis-crossing counts or the worst deviation from a fitted circle.
"""

from pathlib import Path

from axistat import classify_alpha, write_curve_svg

OUT = Path(__file__).parent / "output"
OUT.mkdir(exist_ok=True)

GALLERY = (1.0, -1.0, -2.0, -3.0, -4.0, -5.0)

rows = []
for alpha in GALLERY:
    report, traj = classify_alpha(alpha)
    rows.append((alpha, report, traj))
    ev = []
    if report.crossing_count:
        bound = ">=" if report.crossing_count_is_lower_bound else "=="
        ev.append(f"crossings {bound} {report.crossing_count}")
    if report.circle_fit_residual is not None:
        ev.append(f"circle residual {report.circle_fit_residual:.2e}")
    if report.verdict.value.startswith("CLOSED"):
        ev.append(f"min |p| = {report.min_position_norm:.2e}")
    print(f"alpha = {alpha:5.1f}  ->  {report.verdict.value:35s} "
          f"[{', '.join(ev) if ev else 'graph evidence only'}]")

# graphs and closed curves on separate canvases (very different extents)
open_rows = [(a, t) for a, r, t in rows if a > -2.0]
closed_rows = [(a, t) for a, r, t in rows if a <= -2.0]
write_curve_svg([t for _, t in open_rows], OUT / "gallery_graphs.svg",
                labels=[f"alpha = {a:g}" for a, _ in open_rows],
                title="graph-like regimes (alpha > -2)")
write_curve_svg([t for _, t in closed_rows], OUT / "gallery_closed.svg",
                labels=[f"alpha = {a:g}" for a, _ in closed_rows],
                title="closed regimes (alpha <= -2)")
print("wrote", OUT / "gallery_graphs.svg")
print("wrote", OUT / "gallery_closed.svg")
