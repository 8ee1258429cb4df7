"""Error types raised by construction and hypothesis checks."""


class NotPositiveDefinite(ValueError):
    """Raised when a matrix required to be positive definite is not."""


class InfeasibleRegime(ValueError):
    """Raised when parameters or operands violate a hypothesis regime.

    The message names the violated bound, e.g. ``"self_inverse_low needs
    m <= sqrt(m_prime): 3 > 2"``.
    """
