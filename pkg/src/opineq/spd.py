"""Dense symmetric positive-definite matrix algebra.

Eigendecomposition is the single primitive behind every matrix function
here; no iterative schemes. All order comparisons are tolerance-aware
relative to the operator norm of the right-hand side.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import NotPositiveDefinite

DEFAULT_TOL = 1e-8

MATRIX_FUNCTIONS = ("sqrt", "inv", "inv_sqrt", "square", "log")

_SCALAR_FUNCS = {
    "sqrt": np.sqrt,
    "inv": lambda v: 1.0 / v,
    "inv_sqrt": lambda v: 1.0 / np.sqrt(v),
    "square": np.square,
    "log": np.log,
}


def symmetrize(raw) -> np.ndarray:
    """Return (X + X^T)/2, the symmetric part of a square matrix."""
    raw = np.asarray(raw, dtype=float)
    if raw.ndim != 2 or raw.shape[0] != raw.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {raw.shape}")
    return 0.5 * (raw + raw.T)


@dataclass(frozen=True)
class SpectralInterval:
    """Closed interval [lo, hi] with lo > 0, holding spectrum bounds."""

    lo: float
    hi: float

    def __post_init__(self):
        if not (0.0 < self.lo <= self.hi):
            raise ValueError(f"invalid spectral interval [{self.lo}, {self.hi}]")


@dataclass(frozen=True)
class CheckVerdict:
    """Outcome of one ordering check.

    ``min_gap_eig`` is the smallest eigenvalue of RHS - LHS for matrix
    comparisons, or the plain difference rhs - lhs for scalar ones.
    The check holds when min_gap_eig >= -tol_used * ||RHS||.
    """

    holds: bool
    min_gap_eig: float
    rel_slack: float
    tol_used: float


class SpdMatrix:
    """Symmetric positive-definite matrix with a cached eigendecomposition.

    Instances are immutable. Positivity is checked at construction via a
    Cholesky factorization; the eigendecomposition is computed lazily on
    first use, or inherited directly when built with :meth:`from_eigh`.
    """

    __slots__ = ("_entries", "_eigenvalues", "_eigenvectors")

    def __init__(self, entries, _eig=None):
        entries = symmetrize(entries)
        if _eig is None:
            try:
                np.linalg.cholesky(entries)
            except np.linalg.LinAlgError:
                raise NotPositiveDefinite(
                    "matrix has an eigenvalue <= 0; not positive definite"
                ) from None
            self._eigenvalues = None
            self._eigenvectors = None
        else:
            self._eigenvalues, self._eigenvectors = _eig
        entries.setflags(write=False)
        self._entries = entries

    @classmethod
    def from_eigh(cls, eigenvalues, eigenvectors) -> "SpdMatrix":
        """Build from known spectral factors without re-decomposing.

        ``eigenvalues`` must be strictly positive; ``eigenvectors`` holds
        orthonormal columns. Eigenvalues are sorted ascending and the
        columns permuted to match.
        """
        vals = np.asarray(eigenvalues, dtype=float).reshape(-1)
        vecs = np.asarray(eigenvectors, dtype=float)
        if vecs.shape != (vals.size, vals.size):
            raise ValueError("eigenvector matrix shape does not match eigenvalues")
        if np.any(vals <= 0.0):
            raise NotPositiveDefinite(f"eigenvalues must be > 0, got min {vals.min()}")
        gram_defect = np.abs(vecs.T @ vecs - np.eye(vals.size)).max()
        if gram_defect > 1e-10:
            raise ValueError(f"eigenvector columns not orthonormal (defect {gram_defect:.3e})")
        order = np.argsort(vals, kind="stable")
        vals = vals[order].copy()
        vecs = vecs[:, order].copy()
        entries = (vecs * vals) @ vecs.T
        vals.setflags(write=False)
        vecs.setflags(write=False)
        return cls(entries, _eig=(vals, vecs))

    def _ensure_eig(self):
        if self._eigenvalues is None:
            vals, vecs = np.linalg.eigh(self._entries)
            vals.setflags(write=False)
            vecs.setflags(write=False)
            self._eigenvalues = vals
            self._eigenvectors = vecs

    @property
    def dim(self) -> int:
        return self._entries.shape[0]

    @property
    def entries(self) -> np.ndarray:
        return self._entries

    @property
    def eigenvalues(self) -> np.ndarray:
        """Eigenvalues in ascending order."""
        self._ensure_eig()
        return self._eigenvalues

    @property
    def eigenvectors(self) -> np.ndarray:
        """Orthonormal eigenvectors, column i pairing with eigenvalue i."""
        self._ensure_eig()
        return self._eigenvectors

    def _apply(self, name: str) -> "SpdMatrix":
        vals = _SCALAR_FUNCS[name](self.eigenvalues)
        return SpdMatrix.from_eigh(vals, self.eigenvectors)

    def sqrt(self) -> "SpdMatrix":
        return self._apply("sqrt")

    def inv(self) -> "SpdMatrix":
        return self._apply("inv")

    def inv_sqrt(self) -> "SpdMatrix":
        return self._apply("inv_sqrt")

    def square(self) -> "SpdMatrix":
        return self._apply("square")

    def scaled(self, factor: float) -> "SpdMatrix":
        """Return factor * A for factor > 0, reusing the cached frame."""
        if self._eigenvalues is not None:
            return SpdMatrix.from_eigh(factor * self._eigenvalues, self._eigenvectors)
        return SpdMatrix(factor * self._entries)

    def quad_form(self, x: np.ndarray) -> float:
        """<Ax, x> for a vector x."""
        return float(x @ self._entries @ x)

    def __repr__(self):
        return f"SpdMatrix(dim={self.dim})"


def make_spd(raw) -> SpdMatrix:
    """Symmetrize a square matrix and wrap it as an SpdMatrix.

    Raises NotPositiveDefinite if the symmetric part has an eigenvalue
    <= 0, and ValueError for non-square input.
    """
    return SpdMatrix(raw)


def matrix_function(a: SpdMatrix, name: str) -> np.ndarray:
    """Apply f(A) = Q f(Lambda) Q^T for f in MATRIX_FUNCTIONS.

    Returns plain symmetric entries; all functions except ``log`` stay
    positive definite, ``log`` may be indefinite.
    """
    if name not in _SCALAR_FUNCS:
        raise ValueError(f"unknown matrix function {name!r}; expected one of {MATRIX_FUNCTIONS}")
    if name == "log":
        vecs = a.eigenvectors
        return symmetrize((vecs * np.log(a.eigenvalues)) @ vecs.T)
    return a._apply(name).entries


def _as_entries(x) -> np.ndarray:
    if isinstance(x, SpdMatrix):
        return x.entries
    return np.asarray(x, dtype=float)


def operator_norm(x) -> float:
    """Largest absolute eigenvalue of a symmetric matrix."""
    if isinstance(x, SpdMatrix):
        vals = x.eigenvalues
        return float(max(abs(vals[0]), abs(vals[-1])))
    vals = np.linalg.eigvalsh(symmetrize(x))
    return float(max(abs(vals[0]), abs(vals[-1])))


def spectral_norm(x) -> float:
    """Largest singular value; valid for non-symmetric products too."""
    return float(np.linalg.norm(_as_entries(x), 2))


def spectral_bounds(a: SpdMatrix) -> SpectralInterval:
    """Exact (lambda_min, lambda_max) of an SpdMatrix."""
    vals = a.eigenvalues
    return SpectralInterval(float(vals[0]), float(vals[-1]))


def loewner_leq(lhs, rhs, tol: float = DEFAULT_TOL, atol: float = 0.0) -> CheckVerdict:
    """Check LHS <= RHS in the Loewner order.

    holds iff lambda_min(RHS - LHS) >= -max(tol * ||RHS||, atol); the
    absolute floor ``atol`` is only for degenerate edges where RHS can
    vanish identically.
    """
    le = _as_entries(lhs)
    re = _as_entries(rhs)
    if le.shape != re.shape:
        raise ValueError(f"dimension mismatch: {le.shape} vs {re.shape}")
    gap = float(np.linalg.eigvalsh(symmetrize(re - le))[0])
    norm = operator_norm(rhs)
    holds = gap >= -max(tol * norm, atol)
    rel = gap / norm if norm > 0.0 else gap
    return CheckVerdict(holds=holds, min_gap_eig=gap, rel_slack=rel, tol_used=tol)


def scalar_leq(lhs: float, rhs: float, tol: float = DEFAULT_TOL,
               scale: float | None = None, atol: float = 0.0) -> CheckVerdict:
    """Scalar analogue of loewner_leq: holds iff rhs - lhs >= -max(tol*scale, atol).

    ``scale`` defaults to |rhs|; checkers pass a sturdier scale when the
    right side can degenerate to zero.
    """
    gap = float(rhs) - float(lhs)
    if scale is None:
        scale = abs(float(rhs))
    holds = gap >= -max(tol * scale, atol)
    rel = gap / scale if scale > 0.0 else gap
    return CheckVerdict(holds=holds, min_gap_eig=gap, rel_slack=rel, tol_used=tol)


def loewner_ratio(lhs, rhs: SpdMatrix) -> float:
    """Scale-free attained ratio lambda_max(R^{-1/2} L R^{-1/2}).

    Equals 1 exactly when LHS = RHS and stays <= 1 + tol whenever
    LHS <= RHS holds to tolerance.
    """
    w = rhs.inv_sqrt().entries
    conj = symmetrize(w @ _as_entries(lhs) @ w)
    return float(np.linalg.eigvalsh(conj)[-1])
