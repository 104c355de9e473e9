"""Eigenvalues of symmetric matrices and the scaled-Laplacian spectrum.

The density matrix of a graph with at least one edge is rho(G) = L(G) / d_G
where d_G = 2m = tr L(G). Its spectrum is a probability distribution: the
eigenvalues are nonnegative, sum to 1, and at least one is 0 (the all-ones
kernel of L). Floating point only approximates that, so this module owns the
tolerance policy: eigenvalues within ``tol`` of 0 are snapped to exactly 0,
and anything below ``-tol`` is treated as a hard error rather than noise.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .graphs import Graph, laplacian

DEFAULT_TOL = 1e-12


@dataclass(frozen=True)
class Spectrum:
    """Eigenvalues in descending order, plus the tolerance they were cleaned with."""

    values: tuple[float, ...]
    tol: float


def eigenvalues_symmetric(mat, tol: float = DEFAULT_TOL) -> list[float]:
    """Eigenvalues of a symmetric matrix, descending.

    Rejects non-square and (beyond ``tol`` relative to the Frobenius norm)
    non-symmetric input; a defensive trace check guards against a silently
    wrong decomposition.
    """
    a = np.asarray(mat, dtype=np.float64)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    if a.shape[0] < 1:
        raise ValueError("matrix must have at least one row")
    scale = max(1.0, float(np.linalg.norm(a)))
    if not np.all(np.abs(a - a.T) <= tol * scale):
        raise ValueError("matrix is not symmetric within tolerance")
    w = np.linalg.eigvalsh(a)  # ascending; raises LinAlgError on failure
    if abs(float(w.sum()) - float(np.trace(a))) > a.shape[0] * max(tol, 1e-15) * scale:
        raise ArithmeticError("eigenvalue sum drifted from the trace")
    return [float(x) for x in w[::-1]]


def density_spectrum(g: Graph, tol: float = DEFAULT_TOL) -> Spectrum:
    """Spectrum of rho(G) = L(G)/d_G, cleaned to an exact distribution shape.

    Raises for edgeless graphs (d_G = 0), for eigenvalues below ``-tol``
    (L is positive semidefinite, so that would be a solver bug), and if the
    cleaned values fail to sum to 1 within n*tol or lost the kernel zero.
    """
    if g.m == 0:
        raise ValueError("density matrix undefined: graph has no edges")
    d = 2 * g.m
    vals = []
    for x in eigenvalues_symmetric(laplacian(g), tol=tol):
        y = x / d
        if y < -tol:
            raise ArithmeticError(f"negative eigenvalue {y} from a positive semidefinite matrix")
        vals.append(0.0 if abs(y) <= tol else y)
    if abs(math.fsum(vals) - 1.0) > g.n * tol:
        raise ArithmeticError("cleaned spectrum does not sum to 1")
    if vals[-1] != 0.0:
        raise ArithmeticError("kernel eigenvalue did not clean to exactly 0")
    return Spectrum(tuple(vals), tol)
