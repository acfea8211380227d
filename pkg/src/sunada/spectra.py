"""Symmetrized adjacency matrices of labeled digraphs and their spectra."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Union

import numpy as np

from .algebra import UsageError
from .schreier import SchreierGraph

__all__ = [
    "NumericError",
    "DenseSymMatrix",
    "SpectrumReport",
    "adjacency_matrix",
    "eigenvalues_symmetric",
    "spectra_equal",
    "spectrum_report_json",
]

DEFAULT_TOL = 1e-9


class NumericError(RuntimeError):
    """Eigenvalue computation failed or missed the requested tolerance."""

    def __init__(self, message: str, residual: float | None = None):
        super().__init__(message)
        self.residual = residual


class DenseSymMatrix:
    """Dense real matrix, exactly symmetric by construction."""

    __slots__ = ("entries",)

    def __init__(self, entries):
        a = np.array(entries, dtype=float)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise UsageError(f"expected a square matrix, got shape {a.shape}")
        if not (a == a.T).all():
            raise UsageError("matrix is not exactly symmetric")
        a.setflags(write=False)
        self.entries = a

    @property
    def dimension(self) -> int:
        return self.entries.shape[0]


@dataclass(frozen=True)
class SpectrumReport:
    eigenvalues: tuple[float, ...]
    residual: float


def adjacency_matrix(graph: SchreierGraph) -> DenseSymMatrix:
    """Sum of P + P^T over the per-label arc permutations P.

    A loop arc contributes 2 to its diagonal entry, so every label adds
    exactly 2 to each row sum.
    """
    n = graph.vertex_count
    a = np.zeros((n, n), dtype=np.int64)
    for src, dst, _ in graph.arcs:
        a[src, dst] += 1
        a[dst, src] += 1
    return DenseSymMatrix(a)


def eigenvalues_symmetric(matrix: DenseSymMatrix, tol: float = DEFAULT_TOL) -> SpectrumReport:
    """All eigenvalues with multiplicity, ascending, plus the worst residual
    max |A v - lambda v| over the computed eigenpairs.

    Raises NumericError if the solver fails to converge or the residual ends
    up above tol.
    """
    if matrix.dimension < 1:
        raise UsageError("spectrum of an empty matrix is undefined")
    if not tol > 0:
        raise UsageError(f"tolerance must be positive, got {tol}")
    try:
        values, vectors = np.linalg.eigh(matrix.entries)
    except np.linalg.LinAlgError as exc:
        raise NumericError(f"eigenvalue iteration did not converge: {exc}") from exc
    residual = float(np.max(np.abs(matrix.entries @ vectors - vectors * values)))
    if residual > tol:
        raise NumericError(
            f"eigenpair residual {residual:.3e} exceeds tolerance {tol:.3e}",
            residual=residual)
    ordered = tuple(float(v) for v in np.sort(values))
    return SpectrumReport(eigenvalues=ordered, residual=residual)


Spectrum = Union[SpectrumReport, Sequence[float]]


def _eigenvalue_list(spectrum: Spectrum) -> list[float]:
    if isinstance(spectrum, SpectrumReport):
        return list(spectrum.eigenvalues)
    return [float(v) for v in spectrum]


def spectra_equal(s1: Spectrum, s2: Spectrum, tol: float = DEFAULT_TOL) -> bool:
    """Entrywise comparison after ascending sort; different sizes are unequal."""
    if not tol > 0:
        raise UsageError(f"tolerance must be positive, got {tol}")
    v1 = sorted(_eigenvalue_list(s1))
    v2 = sorted(_eigenvalue_list(s2))
    if len(v1) != len(v2):
        return False
    return all(abs(a - b) <= tol for a, b in zip(v1, v2))


def _round_sig(value: float) -> float:
    rounded = float(f"{value:.12g}")
    return 0.0 if rounded == 0.0 else rounded


def spectrum_report_json(report: SpectrumReport) -> dict:
    """JSON form with eigenvalues at 12 significant digits for byte-stable output."""
    return {
        "dimension": len(report.eigenvalues),
        "eigenvalues": [_round_sig(v) for v in report.eigenvalues],
        "residual": _round_sig(report.residual),
    }
