"""The refined inequalities themselves, one worked instance each.

The refinement divides a classical constant by kappa(c) = 1 + (ln c)^2/8
(natural log) raised to the power the squaring structure calls for, so
every refined bound is at least as strong as its classical parent.

Run with: python3 demos/04_refined_bounds.py
"""

import numpy as np

from opineq import (
    BoundParams,
    check_kantorovich_refined,
    check_lemma_refined_amgm,
    check_lin_chain,
    check_lin_refined_squared,
    check_wielandt_operator,
    identity_map,
    kantorovich_constant,
    make_spd,
    refinement_constants,
    refinement_factor,
    sample_relative_pair,
    sample_self_inverse,
    sample_orthogonal_isometries,
    sample_spd,
    scalar_refined_amgm,
    SpectralInterval,
)


def show(rec):
    print(f"  {rec.theorem_id:22s} lhs={rec.lhs_value:.6f} rhs={rec.rhs_value:.6f} "
          f"ratio={rec.ratio:.6f} holds={rec.verdict.holds}")


def main():
    rng = np.random.default_rng(21)
    print("kappa(4) =", refinement_factor(4.0), " K(4) =", kantorovich_constant(4.0))

    print("scalar arithmetic-geometric gap with the kappa factor:")
    show(scalar_refined_amgm(1.0, 4.0))

    print("matrix version under m A <= B:")
    a, b = sample_relative_pair(3, 2.0, 6.0, rng)
    show(check_lemma_refined_amgm(a, b, 2.0))

    print("kantorovich with the squared divisor:")
    a = sample_self_inverse(3, 0.5, 2.0, 4.0, "low", rng)
    x = rng.standard_normal(3)
    show(check_kantorovich_refined(a, x / np.linalg.norm(x), 0.5, 2.0, 4.0))

    print("squared operator bound, both reading orders:")
    boxed = BoundParams(m=1.0, m_prime=2.0, M_prime=3.0, M=4.0)
    a = sample_spd(3, SpectralInterval(1.0, 2.0), rng)
    b = sample_spd(3, SpectralInterval(3.0, 4.0), rng)
    for variant in ("mapped_mean", "mean_of_maps"):
        show(check_lin_refined_squared(identity_map(3), a, b, boxed, variant))

    print("every intermediate chain link behind the squared bound:")
    for rec in check_lin_chain(identity_map(3), a, b, boxed):
        print(f"  {rec.detail:20s} ratio={rec.ratio:.6f} holds={rec.verdict.holds}")

    print("operator wielandt, three strengths on one instance:")
    # spectrum inside [sqrt(m'), m'/m] so the refined window also accepts it
    big = sample_spd(4, SpectralInterval(2.0, 8.0 / 3.0), rng)
    pair = sample_orthogonal_isometries(4, 1, rng)
    wparams = BoundParams(m=1.5, M=4.0, m_prime=4.0)
    for variant in ("bhatia_davis", "gumus", "refined"):
        show(check_wielandt_operator(identity_map(1), big, pair, wparams, variant))

    print("classical constants next to their refined counterparts:")
    table = refinement_constants(boxed)
    for row in table.rows:
        print(f"  {row.name:12s} classical={row.classical:.6f} "
              f"refined={row.refined:.6f} shrink={row.improvement_ratio:.4f}")


if __name__ == "__main__":
    main()
