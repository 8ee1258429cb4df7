import numpy as np
import pytest

from opineq import (
    DEFAULT_TOL,
    NotPositiveDefinite,
    SpdMatrix,
    SpectralInterval,
    loewner_leq,
    loewner_ratio,
    make_spd,
    matrix_function,
    operator_norm,
    scalar_leq,
    spectral_bounds,
    spectral_norm,
    symmetrize,
)
from oracles import eig2_symmetric


def test_symmetrize_returns_symmetric_part():
    raw = np.array([[1.0, 2.0], [0.0, 3.0]])
    sym = symmetrize(raw)
    assert np.allclose(sym, sym.T)
    assert np.allclose(sym, [[1.0, 1.0], [1.0, 3.0]])


def test_symmetrize_rejects_non_square():
    with pytest.raises(ValueError, match="square"):
        symmetrize(np.ones((2, 3)))


def test_construction_rejects_indefinite():
    with pytest.raises(NotPositiveDefinite):
        make_spd(np.diag([1.0, -0.5]))
    with pytest.raises(NotPositiveDefinite):
        make_spd(np.diag([1.0, 0.0]))


def test_entries_are_read_only():
    a = make_spd(np.diag([1.0, 2.0]))
    with pytest.raises(ValueError):
        a.entries[0, 0] = 99.0


def test_from_eigh_sorts_and_reconstructs(rng):
    vals = np.array([3.0, 1.0, 2.0])
    q = np.linalg.qr(rng.standard_normal((3, 3)))[0]
    a = SpdMatrix.from_eigh(vals, q)
    assert np.all(np.diff(a.eigenvalues) >= 0)
    assert np.allclose(sorted(vals), a.eigenvalues)
    assert np.allclose(a.entries, (q * vals) @ q.T)


def test_from_eigh_validates_inputs():
    with pytest.raises(ValueError, match="shape"):
        SpdMatrix.from_eigh([1.0, 2.0], np.eye(3))
    with pytest.raises(NotPositiveDefinite):
        SpdMatrix.from_eigh([1.0, -2.0], np.eye(2))
    skewed = np.array([[1.0, 0.5], [0.0, 1.0]])
    with pytest.raises(ValueError, match="orthonormal"):
        SpdMatrix.from_eigh([1.0, 2.0], skewed)


def test_matrix_functions_match_2x2_closed_form():
    # [[p, q], [q, p]] has eigenvalues p -+ q on the fixed frame (1, +-1)/sqrt2
    p, q = 2.0, 0.5
    a = make_spd(np.array([[p, q], [q, p]]))
    lo, hi = eig2_symmetric(p, q)
    assert np.allclose(a.eigenvalues, [lo, hi])
    frame = np.array([[1.0, 1.0], [-1.0, 1.0]]) / np.sqrt(2.0)
    for name, f in (("sqrt", np.sqrt), ("inv", lambda v: 1.0 / v),
                    ("inv_sqrt", lambda v: 1.0 / np.sqrt(v)),
                    ("square", np.square), ("log", np.log)):
        expected = (frame * f(np.array([lo, hi]))) @ frame.T
        assert np.allclose(matrix_function(a, name), expected), name


def test_matrix_function_roundtrips(rng):
    q = np.linalg.qr(rng.standard_normal((4, 4)))[0]
    a = SpdMatrix.from_eigh(rng.uniform(0.5, 3.0, size=4), q)
    assert np.allclose(a.sqrt().square().entries, a.entries)
    assert np.allclose(a.inv().inv().entries, a.entries)
    assert np.allclose(a.inv_sqrt().entries, a.inv().sqrt().entries)


def test_matrix_function_unknown_name():
    a = make_spd(np.eye(2))
    with pytest.raises(ValueError, match="unknown matrix function"):
        matrix_function(a, "exp")


def test_scaled_rescales_spectrum():
    a = make_spd(np.diag([1.0, 3.0]))
    assert np.allclose(a.scaled(2.0).eigenvalues, [2.0, 6.0])


def test_quad_form():
    a = make_spd(np.diag([2.0, 5.0]))
    x = np.array([1.0, 1.0]) / np.sqrt(2.0)
    assert a.quad_form(x) == pytest.approx(3.5)


def test_operator_norm_and_spectral_bounds():
    a = make_spd(np.diag([0.5, 2.0, 7.0]))
    assert operator_norm(a) == pytest.approx(7.0)
    # indefinite symmetric input goes by largest magnitude
    assert operator_norm(np.diag([-9.0, 1.0])) == pytest.approx(9.0)
    interval = spectral_bounds(a)
    assert (interval.lo, interval.hi) == pytest.approx((0.5, 7.0))


def test_spectral_norm_of_nonsymmetric_product():
    a = np.diag([1.0, 4.0])
    b = np.array([[1.0, 1.0], [0.0, 1.0]])
    assert spectral_norm(a @ b) == pytest.approx(np.linalg.norm(a @ b, 2))


def test_spectral_interval_validation():
    with pytest.raises(ValueError):
        SpectralInterval(0.0, 1.0)
    with pytest.raises(ValueError):
        SpectralInterval(2.0, 1.0)
    assert SpectralInterval(1.0, 1.0).lo == 1.0


def test_loewner_leq_basic_order():
    a = np.diag([1.0, 2.0])
    b = np.diag([1.5, 2.5])
    assert loewner_leq(a, b).holds
    assert not loewner_leq(b, a).holds


def test_loewner_leq_tolerance_boundary():
    # gap of -tol * ||rhs|| must still pass, anything clearly below fails
    rhs = np.eye(2)
    tol = 1e-8
    good = np.eye(2) * (1.0 + 0.5 * tol)
    bad = np.eye(2) * (1.0 + 10.0 * tol)
    assert loewner_leq(good, rhs, tol).holds
    assert not loewner_leq(bad, rhs, tol).holds


def test_loewner_leq_atol_floor():
    zero = np.zeros((2, 2))
    slightly_negative = np.diag([1e-13, 0.0])
    assert not loewner_leq(slightly_negative, zero, tol=1e-8).holds
    assert loewner_leq(slightly_negative, zero, tol=1e-8, atol=1e-12).holds


def test_loewner_leq_dimension_mismatch():
    with pytest.raises(ValueError, match="mismatch"):
        loewner_leq(np.eye(2), np.eye(3))


def test_loewner_leq_verdict_fields():
    verdict = loewner_leq(np.diag([1.0, 1.0]), np.diag([2.0, 4.0]))
    assert verdict.min_gap_eig == pytest.approx(1.0)
    assert verdict.rel_slack == pytest.approx(0.25)
    assert verdict.tol_used == DEFAULT_TOL


def test_scalar_leq_scale_and_atol():
    assert scalar_leq(1.0, 1.0).holds
    assert not scalar_leq(1.0 + 1e-6, 1.0).holds
    # explicit scale widens the band even when rhs is tiny
    assert scalar_leq(1e-9, 0.0, tol=1e-8, scale=1.0).holds
    assert not scalar_leq(1e-9, 0.0, tol=1e-8, scale=1e-6).holds
    assert scalar_leq(1e-13, 0.0, scale=0.0, atol=1e-12).holds


def test_loewner_ratio_commuting_closed_form():
    lhs = np.diag([1.0, 6.0])
    rhs = make_spd(np.diag([2.0, 8.0]))
    assert loewner_ratio(lhs, rhs) == pytest.approx(0.75)
    assert loewner_ratio(rhs.entries, rhs) == pytest.approx(1.0)


def test_loewner_ratio_congruence_invariance(rng):
    q = np.linalg.qr(rng.standard_normal((3, 3)))[0]
    lhs = SpdMatrix.from_eigh([1.0, 2.0, 3.0], q)
    rhs = SpdMatrix.from_eigh([2.0, 4.0, 4.0], q)
    assert loewner_ratio(lhs.entries, rhs) == pytest.approx(0.75)
