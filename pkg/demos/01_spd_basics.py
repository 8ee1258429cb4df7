"""Tour of the SPD layer: construction, matrix functions, order checks.

Run with: python3 demos/01_spd_basics.py
"""

import numpy as np

from opineq import loewner_leq, loewner_ratio, make_spd, spectral_bounds, symmetrize


def main():
    rng = np.random.default_rng(7)
    raw = rng.standard_normal((4, 4))
    a = make_spd(raw @ raw.T + 4.0 * np.eye(4))
    print("eigenvalues of A:", np.round(np.linalg.eigvalsh(a.entries), 4))
    print("spectral bounds:", spectral_bounds(a))

    # sqrt and square are inverse to each other up to float noise
    back = a.sqrt().square()
    print("||sqrt(A)^2 - A|| =", np.linalg.norm(back.entries - a.entries))

    # shifting by a positive multiple of I preserves the Loewner order
    b = make_spd(a.entries + 0.5 * np.eye(4))
    verdict = loewner_leq(a, b)
    print("A <= A + 0.5 I:", verdict.holds, " min gap eig:", f"{verdict.min_gap_eig:.4f}")

    # the order fails in both directions for a generic pair
    c = make_spd(symmetrize(rng.standard_normal((4, 4))) + 6.0 * np.eye(4))
    print("A <= C:", loewner_leq(a, c).holds, " C <= A:", loewner_leq(c, a).holds)

    # ratio 1.0 means the inequality is tight somewhere in the spectrum
    print("tightness of A against itself:", loewner_ratio(a, a))


if __name__ == "__main__":
    main()
