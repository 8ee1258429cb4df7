"""Constraint regimes and the matched samplers.

Every refined bound holds on a specific parameter window. This script
prints the windows, draws instances, and verifies the advertised
constraints numerically.

Run with: python3 demos/03_regimes_and_samplers.py
"""

import numpy as np

from opineq import (
    BoundParams,
    RegimeId,
    regime_feasible,
    regime_window,
    sample_relative_pair,
    sample_sandwich_pair,
    sample_self_inverse,
    sample_shifted_pair,
)


def rel_spectrum(a, b):
    inv_root = a.inv_sqrt().entries
    return np.linalg.eigvalsh(inv_root @ b.entries @ inv_root)


def main():
    rng = np.random.default_rng(3)
    params = BoundParams(m=0.5, m_prime=2.0, M=4.0)
    print("params:", params.as_dict())
    print("derived h = M/m:", params.h, " K(h):", params.K_h)

    for regime in (RegimeId.SELF_INVERSE_LOW, RegimeId.SELF_INVERSE_HIGH,
                   RegimeId.SHIFTED):
        window = regime_window(regime, params)
        print(f"{regime.value:18s} feasible={regime_feasible(regime, params)[0]} "
              f"window=[{window.lo:.4f}, {window.hi:.4f}]")

    # relative pair: spectrum of A^{-1/2} B A^{-1/2} lands in [m, M]
    a, b = sample_relative_pair(3, 2.0, 5.0, rng)
    print("relative spectrum:", np.round(rel_spectrum(a, b), 4))

    # shifted pair: m I <= m' A <= B <= M I
    a, b = sample_shifted_pair(3, 0.5, 2.0, 4.0, rng)
    chain = (np.linalg.eigvalsh(2.0 * a.entries - 0.5 * np.eye(3))[0],
             np.linalg.eigvalsh(b.entries - 2.0 * a.entries)[0],
             np.linalg.eigvalsh(4.0 * np.eye(3) - b.entries)[0])
    print("shifted chain min eigs (all >= 0):", np.round(chain, 6))

    # sandwich pair: spectra pinned inside [m, m'] and [M', M]
    boxed = BoundParams(m=1.0, m_prime=2.0, M_prime=3.0, M=4.0)
    a, b = sample_sandwich_pair(3, boxed, rng)
    print("sandwich spectra:", np.round(np.linalg.eigvalsh(a.entries), 3),
          np.round(np.linalg.eigvalsh(b.entries), 3))

    # self-inverse windows pin A between m I and its own inverse scaled
    low = sample_self_inverse(4, 0.5, 2.0, 4.0, "low", rng)
    print("low-window spectrum:", np.round(np.linalg.eigvalsh(low.entries), 4))

    # infeasible windows refuse to sample instead of quietly clipping
    bad = BoundParams(m=3.0, m_prime=2.0, M=4.0)
    ok, reason = regime_feasible(RegimeId.SELF_INVERSE_LOW, bad)
    print("low window feasible at m=3, m'=2, M=4:", ok, "|", reason)


if __name__ == "__main__":
    main()
