"""
Level crossings, exceptional points and an eigenvalue plot
===========================================================

Real roots of Disc_E(q) are checked against Jacobi eigenvalues.  The
complex roots are exceptional points; the nearest one bounds the radius
of convergence of perturbation series in lambda.
"""

import sys
from pathlib import Path

from paramdisc import benzene_huckel, classify_crossings, sweep
from paramdisc.output import emit_svg, sweep_to_csv

H = benzene_huckel()
rep = classify_crossings(H)

for c in rep.crossings:
    levels = [[k + 1 for k in idx] for idx, _ in c.clusters]
    print(f"lambda = {c.lam:+.3f}: levels {levels} meet")

for ep in rep.exceptional_points:
    print(f"exceptional point {ep.value:.6f}  |lambda| = {ep.modulus:.6f}")
print("convergence radius", rep.convergence_radius)

# a coarse sweep as CSV, then the full plot
print(sweep_to_csv(sweep(H, -2, 2, 5)), end="")

out = Path(sys.argv[1]) if len(sys.argv) > 1 else Path("levels.svg")
out.write_bytes(emit_svg(sweep(H, -2, 2, 401)))
print("wrote", out)
