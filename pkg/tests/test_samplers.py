import math

import numpy as np
import pytest

from opineq import (
    RELATIVE_BASE_WINDOW,
    BoundParams,
    InfeasibleRegime,
    IsometryPair,
    RegimeId,
    SpectralInterval,
    haar_orthogonal,
    regime_feasible,
    regime_window,
    require_feasible,
    sample_congruence_family,
    sample_orthogonal_isometries,
    sample_orthonormal_pair,
    sample_relative_pair,
    sample_sandwich_pair,
    sample_self_inverse,
    sample_shifted_pair,
    sample_spd,
    sample_unit_vector,
)

DIMS = (2, 3, 4, 8)
DRAWS = 250
SLACK = 1e-10


def test_bound_params_defaults_and_derived():
    p = BoundParams(m=0.5, M=4.0)
    assert (p.m_prime, p.M_prime) == (0.5, 4.0)
    assert p.h == pytest.approx(8.0)
    assert p.K_h == pytest.approx(81.0 / 32.0)
    assert p.as_dict() == {"m": 0.5, "m_prime": 0.5, "M_prime": 4.0, "M": 4.0}


@pytest.mark.parametrize("bad", [0.0, -1.0, math.inf, math.nan])
def test_bound_params_rejects_nonpositive(bad):
    with pytest.raises(ValueError):
        BoundParams(m=bad, M=4.0)


def test_feasibility_matches_scalar_brute_force():
    """Window emptiness decided on a dense scalar grid must agree with
    the closed-form rules, for every regime that reduces to one window.

    The grid alone misses windows that collapse to a single point such
    as (m, m', M) = (0.5, 4, 2), so every candidate boundary value is
    appended before testing satisfiability."""
    base = np.linspace(1e-3, 20.0, 4000)
    grid = [0.5 * k for k in range(1, 11)]
    for m in grid:
        for mp in grid:
            for M in grid:
                params = BoundParams(m=m, M=M, m_prime=mp)
                edges = [m / mp, 1.0 / M, 1.0 / math.sqrt(mp),
                         math.sqrt(mp), mp / m, M]
                lams = np.concatenate([base, edges])
                low_ok = regime_feasible(RegimeId.SELF_INVERSE_LOW, params)[0]
                chain = (m <= mp * lams) & (mp * lams <= 1.0 / lams) & (1.0 / lams <= M)
                brute = mp > 1.0 and bool(np.any(chain))
                assert low_ok == brute, (m, mp, M, "low")
                high_ok = regime_feasible(RegimeId.SELF_INVERSE_HIGH, params)[0]
                chain = (m <= mp / lams) & (mp / lams <= lams) & (lams <= M)
                brute = mp > 1.0 and bool(np.any(chain))
                assert high_ok == brute, (m, mp, M, "high")
                shifted_ok = regime_feasible(RegimeId.SHIFTED, params)[0]
                assert shifted_ok == (mp > 1.0 and m <= M), (m, mp, M, "shifted")


def test_feasibility_other_regimes():
    assert regime_feasible(RegimeId.PLAIN, BoundParams(m=1.0, M=1.0))[0]
    assert not regime_feasible(RegimeId.PLAIN, BoundParams(m=2.0, M=1.0))[0]
    assert regime_feasible(RegimeId.RELATIVE, BoundParams(m=1.5, M=2.0))[0]
    assert not regime_feasible(RegimeId.RELATIVE, BoundParams(m=1.0, M=2.0))[0]
    assert not regime_feasible(RegimeId.RELATIVE, BoundParams(m=2.0, M=2.0))[0]
    good = BoundParams(m=1.0, m_prime=2.0, M_prime=3.0, M=4.0)
    assert regime_feasible(RegimeId.SANDWICH, good)[0]
    bad = BoundParams(m=1.0, m_prime=3.5, M_prime=3.0, M=4.0)
    ok, reason = regime_feasible(RegimeId.SANDWICH, bad)
    assert not ok and "m_prime <= M_prime" in reason


def test_require_feasible_raises_with_reason():
    with pytest.raises(InfeasibleRegime, match="m_prime > 1"):
        require_feasible(RegimeId.SHIFTED, BoundParams(m=1.0, M=4.0, m_prime=1.0))


def test_regime_window_closed_forms():
    p = BoundParams(m=0.5, M=4.0, m_prime=2.0)
    w = regime_window(RegimeId.PLAIN, p)
    assert (w.lo, w.hi) == (0.5, 4.0)
    w = regime_window(RegimeId.SHIFTED, p)
    assert (w.lo, w.hi) == (0.25, 2.0)
    w = regime_window(RegimeId.SELF_INVERSE_LOW, p)
    assert w.lo == pytest.approx(max(0.25, 0.25))
    assert w.hi == pytest.approx(1.0 / math.sqrt(2.0))
    w = regime_window(RegimeId.SELF_INVERSE_HIGH, p)
    assert w.lo == pytest.approx(math.sqrt(2.0))
    assert w.hi == pytest.approx(min(4.0, 4.0))
    with pytest.raises(ValueError, match="window"):
        regime_window(RegimeId.SANDWICH, BoundParams(m=1.0, m_prime=2.0, M_prime=3.0, M=4.0))


def test_haar_orthogonal_is_orthogonal(rng):
    for dim in DIMS:
        q = haar_orthogonal(dim, rng)
        assert np.allclose(q.T @ q, np.eye(dim), atol=1e-12)


def test_sample_spd_pins_endpoints(rng):
    window = SpectralInterval(0.7, 3.1)
    for dim in DIMS:
        for _ in range(50):
            a = sample_spd(dim, window, rng)
            vals = a.eigenvalues
            assert vals[0] == pytest.approx(window.lo, abs=SLACK)
            assert vals[-1] == pytest.approx(window.hi, abs=SLACK)
            assert np.all(vals >= window.lo - SLACK)
            assert np.all(vals <= window.hi + SLACK)


def test_sample_spd_degenerate_and_dim_one(rng):
    a = sample_spd(1, SpectralInterval(0.7, 3.1), rng)
    assert a.eigenvalues[0] == pytest.approx(0.7)
    b = sample_spd(3, SpectralInterval(2.0, 2.0), rng)
    assert np.allclose(b.entries, 2.0 * np.eye(3))
    with pytest.raises(ValueError):
        sample_spd(0, SpectralInterval(1.0, 2.0), rng)


def test_sample_unit_vector_and_pair(rng):
    for dim in DIMS:
        x = sample_unit_vector(dim, rng)
        assert np.linalg.norm(x) == pytest.approx(1.0)
        x, y = sample_orthonormal_pair(dim, rng)
        assert np.linalg.norm(x) == pytest.approx(1.0)
        assert np.linalg.norm(y) == pytest.approx(1.0)
        assert abs(x @ y) < 1e-10
    with pytest.raises(ValueError):
        sample_orthonormal_pair(1, rng)


def _min_eig(mat):
    return float(np.linalg.eigvalsh(0.5 * (mat + mat.T))[0])


def test_relative_draws_satisfy_hypothesis(rng):
    m, M = 1.5, 4.0
    for dim in DIMS:
        for _ in range(DRAWS):
            a, b = sample_relative_pair(dim, m, M, rng)
            inv_root = a.inv_sqrt().entries
            rel = np.linalg.eigvalsh(inv_root @ b.entries @ inv_root)
            assert rel[0] >= m - SLACK * M
            assert rel[-1] <= M + SLACK * M
            assert a.eigenvalues[0] >= RELATIVE_BASE_WINDOW.lo - SLACK
    with pytest.raises(InfeasibleRegime):
        sample_relative_pair(2, 0.9, 4.0, rng)


def test_shifted_draws_satisfy_chain(rng):
    m, mp, M = 1.0, 2.0, 8.0
    for dim in DIMS:
        for _ in range(DRAWS):
            a, b = sample_shifted_pair(dim, m, mp, M, rng)
            # mI <= m'A <= B <= MI, each link to absolute slack
            assert a.eigenvalues[0] * mp >= m - SLACK * M
            assert _min_eig(b.entries - mp * a.entries) >= -SLACK * M
            assert b.eigenvalues[-1] <= M + SLACK * M
    with pytest.raises(InfeasibleRegime):
        sample_shifted_pair(2, 1.0, 1.0, 8.0, rng)


def test_sandwich_draws_satisfy_ordering(rng):
    params = BoundParams(m=1.0, m_prime=2.0, M_prime=3.0, M=4.0)
    for dim in DIMS:
        for _ in range(DRAWS):
            a, b = sample_sandwich_pair(dim, params, rng)
            assert a.eigenvalues[0] >= params.m - SLACK
            assert a.eigenvalues[-1] <= params.m_prime + SLACK
            assert b.eigenvalues[0] >= params.M_prime - SLACK
            assert b.eigenvalues[-1] <= params.M + SLACK
    with pytest.raises(InfeasibleRegime):
        sample_sandwich_pair(2, BoundParams(m=1.0, m_prime=3.5, M_prime=3.0, M=4.0), rng)


def test_self_inverse_draws_satisfy_chain(rng):
    m, mp, M = 0.5, 2.0, 4.0
    for dim in DIMS:
        for _ in range(DRAWS):
            low = sample_self_inverse(dim, m, mp, M, "low", rng)
            for lam in low.eigenvalues:
                assert m - SLACK <= mp * lam
                assert mp * lam <= 1.0 / lam + SLACK
                assert 1.0 / lam <= M + SLACK
            high = sample_self_inverse(dim, m, mp, M, "high", rng)
            for lam in high.eigenvalues:
                assert m - SLACK <= mp / lam
                assert mp / lam <= lam + SLACK
                assert lam <= M + SLACK
    with pytest.raises(ValueError, match="variant"):
        sample_self_inverse(2, m, mp, M, "middle", rng)
    with pytest.raises(InfeasibleRegime):
        sample_self_inverse(2, 3.0, 2.0, 4.0, "low", rng)


def test_orthogonal_isometries(rng):
    for n, r in ((4, 2), (8, 3), (2, 1)):
        pair = sample_orthogonal_isometries(n, r, rng)
        assert np.allclose(pair.x.T @ pair.x, np.eye(r), atol=1e-12)
        assert np.allclose(pair.y.T @ pair.y, np.eye(r), atol=1e-12)
        assert np.abs(pair.x.T @ pair.y).max() < 1e-12
    with pytest.raises(ValueError, match="2r <= n"):
        sample_orthogonal_isometries(3, 2, rng)


def test_isometry_pair_validation():
    e1 = np.array([[1.0], [0.0]])
    e2 = np.array([[0.0], [1.0]])
    IsometryPair(e1, e2)
    with pytest.raises(ValueError, match="orthonormal"):
        IsometryPair(2.0 * e1, e2)
    with pytest.raises(ValueError, match="orthogonal"):
        IsometryPair(e1, e1)
    with pytest.raises(ValueError, match="shape"):
        IsometryPair(np.eye(2), e2)


def test_congruence_family_normalized(rng):
    for k in (1, 2, 4):
        family = sample_congruence_family(3, k, rng)
        assert len(family) == k
        total = sum(u.T @ u for u in family)
        assert np.allclose(total, np.eye(3), atol=1e-12)
    with pytest.raises(ValueError):
        sample_congruence_family(3, 0, rng)


def test_draws_are_reproducible():
    a = sample_spd(4, SpectralInterval(1.0, 2.0), np.random.default_rng(7))
    b = sample_spd(4, SpectralInterval(1.0, 2.0), np.random.default_rng(7))
    assert np.array_equal(a.entries, b.entries)
