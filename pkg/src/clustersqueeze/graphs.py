"""Cluster model: weighted adjacency matrices, local phases, nullifier map.

The graph file format (UTF-8 text) is:

* first non-comment line: the mode count N,
* each following non-comment line: ``i j w`` with 0-based integer node
  indices and a real weight; ``i == j`` sets a self-loop,
* lines starting with ``#`` are ignored,
* a repeated unordered pair ``(i, j)`` is an error.
"""

from __future__ import annotations

import numpy as np

from .errors import (
    DimensionMismatch,
    DuplicateEdge,
    IndexOutOfRange,
    NotSymmetric,
    ParseError,
)
from .tolerances import DEFAULT_TOLERANCES, Tolerances


def adjacency_matrix(values, tol: Tolerances = DEFAULT_TOLERANCES) -> np.ndarray:
    """Validate and exactly symmetrize a real weighted adjacency matrix.

    Input asymmetry beyond the input tolerance is an error; below it the
    matrix is replaced by (A + A.T) / 2 so downstream code may rely on exact
    symmetry.
    """
    a = np.asarray(values, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"adjacency matrix must be square, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise ValueError("adjacency weights must be finite")
    defect = float(np.max(np.abs(a - a.T))) if a.size else 0.0
    if defect > tol.input_asymmetry * max(1.0, float(np.max(np.abs(a)))):
        raise NotSymmetric(f"input asymmetry {defect:.3e} exceeds tolerance")
    return (a + a.T) / 2.0


def phase_vector(values, n: int | None = None) -> np.ndarray:
    """Validate local rotation angles and reduce them to (-pi, pi]."""
    theta = np.atleast_1d(np.asarray(values, dtype=float))
    if theta.ndim != 1:
        raise ValueError("phases must form a 1-D vector")
    if not np.all(np.isfinite(theta)):
        raise ValueError("phase angles must be finite")
    if n is not None and theta.shape[0] != n:
        raise DimensionMismatch(
            f"expected {n} phases, got {theta.shape[0]}"
        )
    reduced = np.mod(theta + np.pi, 2.0 * np.pi) - np.pi
    return np.where(reduced == -np.pi, np.pi, reduced)


def nullifier_map(A, theta, tol: Tolerances = DEFAULT_TOLERANCES) -> np.ndarray:
    """N x 2N coefficient matrix of the nullifiers.

    Acting on the stacked mode-operator vector (b, b^dagger), row j gives the
    collective quadrature combination whose variance measures how well a
    state approximates the ideal cluster.  The left block is
    ``-(A + i 1) e^{i Theta}`` and the right block its entrywise conjugate.
    """
    a = adjacency_matrix(A, tol)
    th = phase_vector(theta, a.shape[0])
    eye = np.eye(a.shape[0])
    phases = np.exp(1j * th)
    left = -(a + 1j * eye) * phases[None, :]
    right = -(a - 1j * eye) * phases.conj()[None, :]
    return np.hstack([left, right])


def parse_graph(text: str, tol: Tolerances = DEFAULT_TOLERANCES) -> np.ndarray:
    """Parse the graph file format into a symmetric adjacency matrix."""
    n: int | None = None
    a: np.ndarray | None = None
    seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if n is None:
            if len(tokens) != 1:
                raise ParseError(
                    f"line {lineno}: expected a single mode count, got {line!r}"
                )
            try:
                n = int(tokens[0])
            except ValueError:
                raise ParseError(
                    f"line {lineno}: mode count {tokens[0]!r} is not an integer"
                ) from None
            if n <= 0:
                raise ParseError(f"line {lineno}: mode count must be positive")
            a = np.zeros((n, n))
            continue
        if len(tokens) != 3:
            raise ParseError(
                f"line {lineno}: expected 'i j w', got {line!r}"
            )
        try:
            i, j = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise ParseError(
                f"line {lineno}: node indices must be integers, got {line!r}"
            ) from None
        try:
            w = float(tokens[2])
        except ValueError:
            raise ParseError(
                f"line {lineno}: weight {tokens[2]!r} is not a number"
            ) from None
        if not np.isfinite(w):
            raise ParseError(f"line {lineno}: weight must be finite")
        if not (0 <= i < n and 0 <= j < n):
            raise IndexOutOfRange(
                f"line {lineno}: node index out of range for {n} modes"
            )
        key = (min(i, j), max(i, j))
        if key in seen:
            raise DuplicateEdge(f"line {lineno}: duplicate edge ({i}, {j})")
        seen.add(key)
        a[i, j] = w
        a[j, i] = w
    if n is None:
        raise ParseError("empty graph file: missing mode count")
    return adjacency_matrix(a, tol)


def format_graph(A, tol: Tolerances = DEFAULT_TOLERANCES) -> str:
    """Serialize an adjacency matrix to the graph file format.

    Weights use the shortest representation that round-trips a double, so
    parse(format(A)) reproduces A exactly.
    """
    a = adjacency_matrix(A, tol)
    n = a.shape[0]
    lines = [str(n)]
    for i in range(n):
        for j in range(i, n):
            if a[i, j] != 0.0:
                lines.append(f"{i} {j} {float(a[i, j])!r}")
    return "\n".join(lines) + "\n"
