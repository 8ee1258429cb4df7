"""Hypothesis regimes and seeded samplers that satisfy them exactly.

Each sampler pins the spectral endpoints of what it draws, so the stated
scalar bounds are attained rather than merely respected; near-tightness
of the classical constants is then observable, not accidental.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import InfeasibleRegime
from .spd import SpdMatrix, SpectralInterval

# Spectrum window used for the free factor A in the relative regime,
# where the hypothesis constrains only B relative to A.
RELATIVE_BASE_WINDOW = SpectralInterval(0.5, 2.0)


class RegimeId(str, Enum):
    """Hypothesis regimes, one per family of theorem preconditions."""

    RELATIVE = "relative"                   # mA <= B <= MA, 1 < m < M
    SHIFTED = "shifted"                     # mI <= m'A <= B <= MI, m' > 1
    SANDWICH = "sandwich"                   # mI <= A <= m'I <= M'I <= B <= MI
    SELF_INVERSE_LOW = "self_inverse_low"   # mI <= m'A <= A^{-1} <= MI, m' > 1
    SELF_INVERSE_HIGH = "self_inverse_high" # mI <= m'A^{-1} <= A <= MI, m' > 1
    PLAIN = "plain"                         # mI <= A <= MI


@dataclass(frozen=True)
class BoundParams:
    """Scalar regime parameters (m, m', M', M) governing a hypothesis.

    m_prime and M_prime default to m and M for regimes that do not use
    them. h = M/m and K_h = (h+1)^2 / (4h) are derived.
    """

    m: float
    M: float
    m_prime: float = None
    M_prime: float = None

    def __post_init__(self):
        if self.m_prime is None:
            object.__setattr__(self, "m_prime", self.m)
        if self.M_prime is None:
            object.__setattr__(self, "M_prime", self.M)
        for name in ("m", "m_prime", "M_prime", "M"):
            value = getattr(self, name)
            if not (isinstance(value, (int, float)) and value > 0.0 and math.isfinite(value)):
                raise ValueError(f"{name} must be a positive finite number, got {value!r}")
            object.__setattr__(self, name, float(value))

    @property
    def h(self) -> float:
        return self.M / self.m

    @property
    def K_h(self) -> float:
        h = self.h
        return (h + 1.0) ** 2 / (4.0 * h)

    def as_dict(self) -> dict:
        return {"m": self.m, "m_prime": self.m_prime, "M_prime": self.M_prime, "M": self.M}


def regime_feasible(regime: RegimeId, params: BoundParams) -> tuple[bool, str]:
    """Check the parameter box against a regime's hypothesis chain.

    Returns (ok, reason); reason names the violated bound when not ok.
    """
    m, mp, Mp, M = params.m, params.m_prime, params.M_prime, params.M
    if regime is RegimeId.PLAIN:
        if m > M:
            return False, f"plain needs m <= M: {m} > {M}"
        return True, ""
    if regime is RegimeId.RELATIVE:
        if not 1.0 < m:
            return False, f"relative needs 1 < m: m = {m}"
        if not m < M:
            return False, f"relative needs m < M: {m} >= {M}"
        return True, ""
    if regime is RegimeId.SHIFTED:
        if not mp > 1.0:
            return False, f"shifted needs m_prime > 1: m_prime = {mp}"
        if m > M:
            return False, f"shifted needs m <= M: {m} > {M}"
        return True, ""
    if regime is RegimeId.SANDWICH:
        if not m <= mp:
            return False, f"sandwich needs m <= m_prime: {m} > {mp}"
        if not mp <= Mp:
            return False, f"sandwich needs m_prime <= M_prime: {mp} > {Mp}"
        if not Mp <= M:
            return False, f"sandwich needs M_prime <= M: {Mp} > {M}"
        return True, ""
    if regime in (RegimeId.SELF_INVERSE_LOW, RegimeId.SELF_INVERSE_HIGH):
        if not mp > 1.0:
            return False, f"{regime.value} needs m_prime > 1: m_prime = {mp}"
        root = math.sqrt(mp)
        if m > root:
            return False, f"{regime.value} needs m <= sqrt(m_prime): {m} > {root}"
        if root > M:
            return False, f"{regime.value} needs sqrt(m_prime) <= M: {root} > {M}"
        return True, ""
    raise ValueError(f"unknown regime {regime!r}")


def require_feasible(regime: RegimeId, params: BoundParams):
    ok, reason = regime_feasible(regime, params)
    if not ok:
        raise InfeasibleRegime(reason)


def regime_window(regime: RegimeId, params: BoundParams) -> SpectralInterval:
    """Admissible spectrum window for the single constrained operator.

    plain: [m, M]; shifted (window for A): [m/m', M/m'];
    self_inverse_low: [max(m/m', 1/M), 1/sqrt(m')];
    self_inverse_high: [sqrt(m'), min(m'/m, M)].
    """
    require_feasible(regime, params)
    m, mp, M = params.m, params.m_prime, params.M
    if regime is RegimeId.PLAIN:
        return SpectralInterval(m, M)
    if regime is RegimeId.SHIFTED:
        return SpectralInterval(m / mp, M / mp)
    if regime is RegimeId.SELF_INVERSE_LOW:
        return SpectralInterval(max(m / mp, 1.0 / M), 1.0 / math.sqrt(mp))
    if regime is RegimeId.SELF_INVERSE_HIGH:
        return SpectralInterval(math.sqrt(mp), min(mp / m, M))
    raise ValueError(f"no single-operator window for regime {regime.value}")


def haar_orthogonal(dim: int, rng: np.random.Generator) -> np.ndarray:
    """Haar-distributed orthogonal matrix via QR with R-diagonal sign fix."""
    z = rng.standard_normal((dim, dim))
    q, r = np.linalg.qr(z)
    d = np.diag(r)
    return q * (d / np.abs(d))


def sample_spd(dim: int, interval: SpectralInterval, rng: np.random.Generator) -> SpdMatrix:
    """Random SPD matrix with spectrum in [lo, hi] and both endpoints attained.

    Eigenvalues are uniform in the window with the smallest pinned to lo
    and the largest to hi (dim >= 2); eigenvectors come from a Haar
    orthogonal frame. dim = 1 yields the single eigenvalue lo.
    """
    if dim < 1:
        raise ValueError(f"dim must be >= 1, got {dim}")
    if dim == 1:
        vals = np.array([interval.lo])
    elif interval.lo == interval.hi:
        vals = np.full(dim, interval.lo)
    else:
        vals = np.sort(rng.uniform(interval.lo, interval.hi, size=dim))
        vals[0] = interval.lo
        vals[-1] = interval.hi
    return SpdMatrix.from_eigh(vals, haar_orthogonal(dim, rng))


def sample_unit_vector(dim: int, rng: np.random.Generator) -> np.ndarray:
    """Gaussian direction normalized to unit length."""
    while True:
        x = rng.standard_normal(dim)
        norm = np.linalg.norm(x)
        if norm > 1e-12:
            return x / norm


def sample_orthonormal_pair(dim: int, rng: np.random.Generator) -> tuple[np.ndarray, np.ndarray]:
    """Two orthonormal vectors (x, y), Gram-Schmidt on Gaussian draws."""
    if dim < 2:
        raise ValueError("orthonormal pair needs dim >= 2")
    while True:
        x = sample_unit_vector(dim, rng)
        y = rng.standard_normal(dim)
        y -= (x @ y) * x
        norm = np.linalg.norm(y)
        if norm > 1e-8:
            return x, y / norm


def sample_relative_pair(dim: int, m: float, M: float,
                         rng: np.random.Generator) -> tuple[SpdMatrix, SpdMatrix]:
    """(A, B) with mA <= B <= MA and 1 < m < M.

    B = A^{1/2} C A^{1/2} for C drawn in [m, M], so the relative spectrum
    of B against A lands exactly in the stated window.
    """
    require_feasible(RegimeId.RELATIVE, BoundParams(m=m, M=M))
    a = sample_spd(dim, RELATIVE_BASE_WINDOW, rng)
    c = sample_spd(dim, SpectralInterval(m, M), rng)
    root = a.sqrt().entries
    b = SpdMatrix(root @ c.entries @ root)
    return a, b


def sample_shifted_pair(dim: int, m: float, m_prime: float, M: float,
                        rng: np.random.Generator) -> tuple[SpdMatrix, SpdMatrix]:
    """(A, B) with mI <= m'A <= B <= MI and m' > 1.

    A is drawn in [m/m', M/m']; B = (1-t) m'A + t MI for t uniform in
    (0, 1], a convex path that keeps both order relations exact. B is a
    polynomial in A, so it shares A's eigenvector frame.
    """
    params = BoundParams(m=m, M=M, m_prime=m_prime)
    require_feasible(RegimeId.SHIFTED, params)
    a = sample_spd(dim, regime_window(RegimeId.SHIFTED, params), rng)
    t = 1.0 - rng.uniform(0.0, 1.0)
    b_vals = (1.0 - t) * m_prime * a.eigenvalues + t * M
    return a, SpdMatrix.from_eigh(b_vals, a.eigenvectors)


def sample_sandwich_pair(dim: int, params: BoundParams,
                         rng: np.random.Generator) -> tuple[SpdMatrix, SpdMatrix]:
    """(A, B) with mI <= A <= m'I <= M'I <= B <= MI."""
    require_feasible(RegimeId.SANDWICH, params)
    a = sample_spd(dim, SpectralInterval(params.m, params.m_prime), rng)
    b = sample_spd(dim, SpectralInterval(params.M_prime, params.M), rng)
    return a, b


def sample_self_inverse(dim: int, m: float, m_prime: float, M: float, variant: str,
                        rng: np.random.Generator) -> SpdMatrix:
    """A satisfying mI <= m'A <= A^{-1} <= MI (low) or mI <= m'A^{-1} <= A <= MI (high).

    The window algebra reduces both variants to m <= sqrt(m') <= M; an
    empty window raises InfeasibleRegime naming the violated bound.
    """
    if variant not in ("low", "high"):
        raise ValueError(f"variant must be 'low' or 'high', got {variant!r}")
    regime = RegimeId.SELF_INVERSE_LOW if variant == "low" else RegimeId.SELF_INVERSE_HIGH
    params = BoundParams(m=m, M=M, m_prime=m_prime)
    return sample_spd(dim, regime_window(regime, params), rng)


@dataclass(frozen=True)
class IsometryPair:
    """Two n x r column-orthonormal matrices with orthogonal ranges."""

    x: np.ndarray
    y: np.ndarray

    def __post_init__(self):
        x, y = np.asarray(self.x, dtype=float), np.asarray(self.y, dtype=float)
        if x.shape != y.shape or x.ndim != 2:
            raise ValueError("isometries must share an n x r shape")
        r = x.shape[1]
        for name, mat in (("x", x), ("y", y)):
            defect = np.abs(mat.T @ mat - np.eye(r)).max()
            if defect > 1e-12:
                raise ValueError(f"{name} columns not orthonormal (defect {defect:.3e})")
        cross = np.abs(x.T @ y).max()
        if cross > 1e-12:
            raise ValueError(f"ranges not orthogonal (|x^T y| max {cross:.3e})")
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "y", y)


def sample_orthogonal_isometries(n: int, r: int, rng: np.random.Generator) -> IsometryPair:
    """First r and last r columns of a Haar orthogonal n x n matrix."""
    if 2 * r > n:
        raise ValueError(f"need 2r <= n, got r = {r}, n = {n}")
    q = haar_orthogonal(n, rng)
    return IsometryPair(x=q[:, :r].copy(), y=q[:, n - r:].copy())


def sample_congruence_family(n: int, k: int, rng: np.random.Generator) -> tuple[np.ndarray, ...]:
    """Matrices U_j = D_j Q with sum_j U_j^T U_j = I.

    Q is Haar orthogonal and the D_j are diagonal positive weights
    normalized so sum_j D_j^2 = I; k = 1 returns a single orthogonal
    matrix.
    """
    if k < 1:
        raise ValueError(f"family size must be >= 1, got {k}")
    q = haar_orthogonal(n, rng)
    weights = rng.uniform(0.2, 1.0, size=(k, n))
    weights /= np.sqrt((weights ** 2).sum(axis=0))
    return tuple(weights[j][:, None] * q for j in range(k))
