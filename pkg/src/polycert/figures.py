"""Figure rendering for the report path.

Each function writes one PNG next to the delimited output and returns the
path.  Rendering is headless (Agg) and deterministic for a fixed input.
"""

from __future__ import annotations

import os

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from .certify import Certificate
from .poly import SparsePolynomial
from .roots import RootFindReport
from .trigmin import from_ratio_tail

DPI = 150


def _unit_circle(ax):
    t = np.linspace(0, 2 * np.pi, 512)
    ax.plot(np.cos(t), np.sin(t), color="black", lw=0.8)


def save_ratio_disk(zs, ratios, path: str, degree: int) -> str:
    """Scatter of |zP'| / (deg |P|) over the sampled disk."""
    fig, ax = plt.subplots(figsize=(6.4, 5.6))
    sc = ax.scatter(zs.real, zs.imag, c=ratios, s=2, cmap="viridis", vmin=0.0)
    _unit_circle(ax)
    ax.set_aspect("equal")
    ax.set_xlabel("Re z")
    ax.set_ylabel("Im z")
    ax.set_title(f"|zP'| / ({degree}|P|) over the closed disk")
    fig.colorbar(sc, ax=ax, label="ratio")
    fig.tight_layout()
    fig.savefig(path, dpi=DPI)
    plt.close(fig)
    return path


def save_circle_profile(P: SparsePolynomial, path: str, grid: int = 2048) -> str:
    """|zP'| against deg|P| along the unit circle."""
    theta = np.linspace(0, 2 * np.pi, grid, endpoint=False)
    z = np.exp(1j * theta)
    kn = P.degree()
    lhs = np.abs(z * P.derivative()(z))
    rhs = kn * np.abs(P(z))
    fig, ax = plt.subplots(figsize=(7.2, 4.2))
    ax.plot(theta, lhs, lw=1.0, label="|zP'(z)|")
    ax.plot(theta, rhs, lw=1.0, label=f"{kn}|P(z)|")
    ax.set_xlabel("arg z")
    ax.set_ylabel("magnitude")
    ax.set_title("Derivative bound along the unit circle")
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=DPI)
    plt.close(fig)
    return path


def save_tail_minima(P: SparsePolynomial, certificate: Certificate, path: str) -> str:
    """Ratio tails against the 1/2 threshold, with certified witnesses marked."""
    x = np.linspace(0, 2 * np.pi, 2048)
    fig, ax = plt.subplots(figsize=(7.2, 4.6))
    for nu, result in certificate.per_nu:
        tail = from_ratio_tail(P, nu)
        ax.plot(x, tail.values(x), lw=0.9, label=f"nu = {nu}")
        ax.plot([result.witness_x], [result.witness_value], "k.", ms=5)
    ax.axhline(0.5, color="red", lw=1.0, ls="--", label="threshold 1/2")
    ax.set_xlabel("x")
    ax.set_ylabel("Re of ratio tail on the circle")
    ax.set_title(f"Tail minima (verdict: {certificate.verdict})")
    if certificate.per_nu and len(certificate.per_nu) <= 10:
        ax.legend(fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=DPI)
    plt.close(fig)
    return path


def save_root_map(report: RootFindReport, path: str, outer_bound: float | None = None) -> str:
    """Root locations against the unit circle (and an optional outer bound)."""
    fig, ax = plt.subplots(figsize=(5.8, 5.8))
    for loc, mult in report.roots.roots:
        ax.plot([loc.real], [loc.imag], "rx", ms=7)
        if mult > 1:
            ax.annotate(f"x{mult}", (loc.real, loc.imag), fontsize=8,
                        textcoords="offset points", xytext=(4, 4))
    _unit_circle(ax)
    if outer_bound is not None:
        t = np.linspace(0, 2 * np.pi, 512)
        ax.plot(outer_bound * np.cos(t), outer_bound * np.sin(t),
                color="gray", lw=0.8, ls=":")
    ax.set_aspect("equal")
    ax.set_xlabel("Re z")
    ax.set_ylabel("Im z")
    ax.set_title("Root locations")
    fig.tight_layout()
    fig.savefig(path, dpi=DPI)
    plt.close(fig)
    return path


def ensure_directory(path: str) -> str:
    os.makedirs(path, exist_ok=True)
    return path
