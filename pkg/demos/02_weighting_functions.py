"""The three intensity-weighting functions, tabulated and charted.

Each weighting kind maps a normalized intensity z to an importance g(z);
per-image factors divide by the sum so they always add up to 1.  The
chart written to demos/output/weightings.svg shows how the gaussian kind
hugs the bright end while tanh saturates early and the sigmoid switches
around midgray.
"""

from pathlib import Path

import numpy as np

from intensim import weighting_factors, weighting_function
from intensim.chart import render_line_chart

OUT = Path(__file__).parent / "output"


def main():
    z = np.linspace(0.0, 1.0, 101)
    kinds = ("gaussian", "tanh", "sigmoid")

    print("g(z) samples:")
    print("  z     " + "".join(f"{k:>10s}" for k in kinds))
    for zi in (0.0, 0.25, 0.5, 0.75, 1.0):
        row = "".join(f"{weighting_function(zi, k):10.4f}" for k in kinds)
        print(f"  {zi:.2f}  {row}")

    img = np.array([[0.1, 0.4], [0.6, 0.9]])
    print("\nfactors for a 2x2 image [[0.1, 0.4], [0.6, 0.9]]:")
    for k in kinds:
        f = weighting_factors(img, k)
        flat = ", ".join(f"{v:.4f}" for v in f.ravel())
        print(f"  {k:9s} [{flat}]  (sum {f.sum():.12f})")

    OUT.mkdir(exist_ok=True)
    series = [(k, list(zip(z, weighting_function(z, k)))) for k in kinds]
    svg = render_line_chart([("weighting functions g(z)", series)])
    path = OUT / "weightings.svg"
    path.write_text(svg)
    print(f"\nchart written to {path}")


if __name__ == "__main__":
    main()
