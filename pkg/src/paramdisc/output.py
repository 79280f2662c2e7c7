"""
Serialization of analysis results: JSON reports, CSV sweeps and SVG plots.

Every float is written with 17 significant digits so that output is exact
enough to round-trip and byte-stable across runs.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

from . import __version__
from .errors import DomainError
from .matrix import DegeneracyProfile
from .poly import UniPoly, format_rational
from .spectra import CrossingReport, SweepTable
from .symmetry import SymmetryReport

SCHEMA_VERSION = "1.0"


def format_float(x: float) -> str:
    x = float(x)
    if not math.isfinite(x):
        raise DomainError(f"cannot serialize non-finite float {x}")
    if x == 0.0:
        x = 0.0  # drop the sign of negative zero
    return format(x, ".17g")


def dumps(obj, indent: int = 2, _level: int = 0) -> str:
    """JSON encoder that writes floats with :func:`format_float`."""
    pad = " " * (indent * (_level + 1))
    end = " " * (indent * _level)
    if isinstance(obj, bool) or obj is None or isinstance(obj, (int, str)):
        return json.dumps(obj)
    if isinstance(obj, float):
        return format_float(obj)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f"{pad}{json.dumps(str(k))}: {dumps(v, indent, _level + 1)}" for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + end + "}"
    if isinstance(obj, (list, tuple)):
        if not obj:
            return "[]"
        if all(not isinstance(v, (dict, list, tuple)) for v in obj):
            return "[" + ", ".join(dumps(v) for v in obj) + "]"
        items = [f"{pad}{dumps(v, indent, _level + 1)}" for v in obj]
        return "[\n" + ",\n".join(items) + "\n" + end + "]"
    raise DomainError(f"cannot serialize {type(obj).__name__}")


# -- structured pieces -------------------------------------------------------

def poly_to_json(P, names: dict | None = None) -> dict:
    """``{"text": ..., "coefficients": ...}``; bivariate coefficients nest one level."""
    if not isinstance(P, UniPoly):
        return {"text": format_rational(P), "coefficients": [format_rational(P)]}

    def coeff(c):
        if isinstance(c, UniPoly):
            return [format_rational(x) for x in c.coeffs]
        return format_rational(c)

    return {
        "text": P.to_string(names),
        "variable": P.var,
        "coefficients": [coeff(c) for c in P.coeffs],
    }


def degeneracy_to_json(profile: DegeneracyProfile, names=None) -> dict:
    return {
        "persistent_degeneracy": profile.persistent_degeneracy,
        "branches": [
            {"factor": poly_to_json(b.factor, names), "multiplicity": b.multiplicity, "degree": b.degree}
            for b in profile.branches
        ],
    }


def symmetry_to_json(rep: SymmetryReport) -> dict:
    return {
        "order": rep.order,
        "abelian": rep.abelian,
        "signed": rep.signed,
        "degeneracy_expected": rep.degeneracy_expected,
        "degeneracy_observed": rep.degeneracy_observed,
        "consistent": rep.consistent,
        "note": rep.note,
        "elements": [{"images": g.one_based(), "signs": list(g.signs)} for g in rep.elements],
    }


def _root_json(root) -> dict:
    return {
        "lambda": root.value,
        "interval": [format_rational(root.lo), format_rational(root.hi)],
        "exact": root.exact,
        "multiplicity": root.multiplicity,
    }


def crossings_to_json(rep: CrossingReport, names=None) -> dict:
    crossings = []
    for c in rep.crossings:
        d = _root_json(c.root)
        d["eigenvalues"] = list(c.eigenvalues)
        d["pairs"] = [[i + 1, j + 1] for i, j in c.pairs]
        d["clusters"] = [{"levels": [k + 1 for k in idx], "value": v} for idx, v in c.clusters]
        crossings.append(d)
    return {
        "char_poly": poly_to_json(rep.char_poly, names),
        "disc_before_reduction_zero": rep.identically_zero_before_reduction,
        "discriminant_before_reduction": poly_to_json(rep.discriminant_before_reduction, names),
        "reduced_poly": poly_to_json(rep.reduced_poly, names),
        "discriminant": poly_to_json(rep.discriminant, names),
        "degeneracy": degeneracy_to_json(rep.degeneracy, names),
        "crossings": crossings,
        "unconfirmed": [_root_json(r) for r in rep.unconfirmed],
        "exceptional_points": [
            {
                "re": e.value.real,
                "im": e.value.imag,
                "modulus": e.modulus,
                "multiplicity": e.root.multiplicity,
                "residual": e.root.residual,
            }
            for e in rep.exceptional_points
        ],
        "convergence_radius": rep.convergence_radius,
        "tolerances": {"lambda_tol": rep.lambda_tol, "gap_tol": rep.gap_tol},
    }


def analysis_report(doc, crossing: CrossingReport, symmetry: SymmetryReport) -> dict:
    """The full report: every section plus provenance (tool version, input digest)."""
    body = crossings_to_json(crossing)
    report = {
        "schema_version": SCHEMA_VERSION,
        "tool": {"name": "paramdisc", "version": __version__},
        "input_digest": doc.digest(),
        "n": doc.n,
        "parameter": doc.parameter,
    }
    report.update(body)
    report["symmetry"] = symmetry_to_json(symmetry)
    return report


# -- CSV ---------------------------------------------------------------------

def sweep_to_csv(table: SweepTable) -> str:
    n = table.eigenvalues.shape[1]
    lines = [",".join(["lambda"] + [f"E{k + 1}" for k in range(n)])]
    for lam, ev in table.rows():
        lines.append(",".join([format_float(lam)] + [format_float(x) for x in ev]))
    return "\n".join(lines) + "\n"


# -- SVG ---------------------------------------------------------------------

PALETTE = ("#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b",
           "#e377c2", "#7f7f7f", "#bcbd22", "#17becf")


@dataclass(frozen=True)
class PlotFrame:
    """Maps data coordinates (lambda, E) to SVG pixels and back."""

    lam_min: float
    lam_max: float
    e_min: float
    e_max: float
    width: int = 640
    height: int = 480
    margin: int = 60

    def x(self, lam: float) -> float:
        span = self.width - 2 * self.margin
        return self.margin + (lam - self.lam_min) / (self.lam_max - self.lam_min) * span

    def y(self, e: float) -> float:
        span = self.height - 2 * self.margin
        return self.height - self.margin - (e - self.e_min) / (self.e_max - self.e_min) * span

    def lam(self, x: float) -> float:
        span = self.width - 2 * self.margin
        return self.lam_min + (x - self.margin) / span * (self.lam_max - self.lam_min)

    def energy(self, y: float) -> float:
        span = self.height - 2 * self.margin
        return self.e_min + (self.height - self.margin - y) / span * (self.e_max - self.e_min)


def plot_frame(table: SweepTable) -> PlotFrame:
    lo = float(table.eigenvalues.min())
    hi = float(table.eigenvalues.max())
    pad = 0.05 * (hi - lo) if hi > lo else 1.0
    return PlotFrame(float(table.lambdas[0]), float(table.lambdas[-1]), lo - pad, hi + pad)


def _ticks(lo: float, hi: float, count: int = 5) -> list:
    return [lo + (hi - lo) * k / (count - 1) for k in range(count)]


def emit_svg(table: SweepTable, title: str = "Eigenvalues") -> bytes:
    """Self-contained SVG 1.1 plot with one polyline per eigenvalue index."""
    if table is None or len(table) == 0:
        raise DomainError("cannot plot an empty sweep")
    f = plot_frame(table)
    left, right = f.margin, f.width - f.margin
    top, bottom = f.margin, f.height - f.margin
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{f.width}" '
        f'height="{f.height}" viewBox="0 0 {f.width} {f.height}">',
        f'<title>{title}</title>',
        f'<rect x="0" y="0" width="{f.width}" height="{f.height}" fill="white"/>',
        f'<g id="axes" stroke="black" stroke-width="1">',
        f'<line x1="{left}" y1="{bottom}" x2="{right}" y2="{bottom}"/>',
        f'<line x1="{left}" y1="{top}" x2="{left}" y2="{bottom}"/>',
        "</g>",
        '<g id="ticks" font-family="sans-serif" font-size="11" fill="black">',
    ]
    for lam in _ticks(f.lam_min, f.lam_max):
        x = f.x(lam)
        out.append(f'<line x1="{x:.3f}" y1="{bottom}" x2="{x:.3f}" y2="{bottom + 5}" stroke="black"/>')
        out.append(f'<text x="{x:.3f}" y="{bottom + 18}" text-anchor="middle">{lam:.3g}</text>')
    for e in _ticks(f.e_min, f.e_max):
        y = f.y(e)
        out.append(f'<line x1="{left - 5}" y1="{y:.3f}" x2="{left}" y2="{y:.3f}" stroke="black"/>')
        out.append(f'<text x="{left - 8}" y="{y + 4:.3f}" text-anchor="end">{e:.3g}</text>')
    out.append(f'<text x="{(left + right) / 2:.1f}" y="{f.height - 15}" text-anchor="middle">lambda</text>')
    out.append(f'<text x="15" y="{(top + bottom) / 2:.1f}" text-anchor="middle" '
               f'transform="rotate(-90 15 {(top + bottom) / 2:.1f})">E</text>')
    out.append("</g>")
    out.append('<g id="levels" fill="none" stroke-width="1.5">')
    for k in range(table.eigenvalues.shape[1]):
        pts = " ".join(f"{f.x(lam):.6f},{f.y(e):.6f}" for lam, e in zip(table.lambdas, table.eigenvalues[:, k]))
        color = PALETTE[k % len(PALETTE)]
        out.append(f'<polyline id="E{k + 1}" class="level" stroke="{color}" points="{pts}"/>')
    out.append("</g>")
    out.append("</svg>")
    return ("\n".join(out) + "\n").encode("utf-8")
