"""Input validation helpers shared across the package."""

from __future__ import annotations

import numpy as np

ORTHONORMAL_TOL = 1e-10
UNIT_NORM_TOL = 1e-8


def as_complex_matrix(a, name="matrix"):
    """Coerce to a 2-D complex ndarray, raising a clear error otherwise."""
    arr = np.asarray(a)
    if arr.ndim == 1:
        arr = arr[:, None]
    if arr.ndim != 2:
        raise ValueError(f"{name} must be 2-D, got shape {arr.shape}")
    if not np.all(np.isfinite(arr.real)) or not np.all(np.isfinite(arr.imag)):
        raise ValueError(f"{name} contains non-finite entries")
    return arr.astype(complex, copy=False)


def as_complex_vector(v, n=None, name="vector"):
    arr = np.asarray(v).astype(complex, copy=False).ravel()
    if n is not None and arr.size != n:
        raise ValueError(f"{name} must have length {n}, got {arr.size}")
    if not np.all(np.isfinite(arr.real)) or not np.all(np.isfinite(arr.imag)):
        raise ValueError(f"{name} contains non-finite entries")
    return arr


def check_unit_columns(f, tol=UNIT_NORM_TOL, name="precoder matrix"):
    """Require every column of ``f`` to have unit Euclidean norm."""
    f = as_complex_matrix(f, name)
    norms = np.linalg.norm(f, axis=0)
    err = np.abs(norms - 1.0).max() if norms.size else 0.0
    if err > tol:
        raise ValueError(
            f"{name} columns must be unit norm (max deviation {err:.3g} > {tol:g})"
        )
    return f


def check_orthonormal_columns(w, tol=ORTHONORMAL_TOL, name="combiner"):
    """Require ``w^H w`` to equal the identity within ``tol``."""
    w = as_complex_matrix(w, name)
    gram = w.conj().T @ w
    err = np.abs(gram - np.eye(w.shape[1])).max()
    if err > tol:
        raise ValueError(
            f"{name} columns must be orthonormal (max deviation {err:.3g} > {tol:g})"
        )
    return w


def check_hermitian(x, tol=1e-10, name="matrix"):
    x = as_complex_matrix(x, name)
    if x.shape[0] != x.shape[1]:
        raise ValueError(f"{name} must be square, got shape {x.shape}")
    err = np.abs(x - x.conj().T).max()
    if err > tol * max(1.0, np.abs(x).max()):
        raise ValueError(f"{name} is not Hermitian (max asymmetry {err:.3g})")
    return 0.5 * (x + x.conj().T)


def check_angle_interval(interval, name="angle range"):
    lo, hi = float(interval[0]), float(interval[1])
    if not np.isfinite(lo) or not np.isfinite(hi):
        raise ValueError(f"{name} must be finite")
    if hi < lo:
        raise ValueError(f"{name} must satisfy lo <= hi, got ({lo}, {hi})")
    return lo, hi


def circular_distance(a, b):
    """Shortest angular distance between two azimuths, in [0, pi]."""
    d = np.abs(a - b) % (2.0 * np.pi)
    return np.minimum(d, 2.0 * np.pi - d)
