"""Privacy-loss accounting for the subsampled Gaussian mechanism.

The bound minimized here is

    eps(sigma, T, beta, delta) = min_{alpha > 1} [ ln(1/delta)/(alpha-1)
                                                   + alpha beta^2 T / (2 sigma^2) ]

With A = ln(1/delta) and B = beta^2 T / (2 sigma^2) the minimizer is
alpha* = 1 + sqrt(A/B) and the minimum is 2 sqrt(A B) + B. A dense grid
search over alpha is kept alongside as an independent oracle.
"""

import math

import numpy as np

from ..errors import ConfigError, ContractError


def _check_common(sigma, steps, beta, delta):
    if sigma < 0:
        raise ConfigError(f"sigma must be >= 0, got {sigma}")
    if steps < 0:
        raise ConfigError(f"step count must be >= 0, got {steps}")
    if not 0.0 < beta <= 1.0:
        raise ConfigError(f"sampling rate must lie in (0,1], got {beta}")
    if not 0.0 < delta < 1.0:
        raise ConfigError(f"delta must lie in (0,1), got {delta}")


def rdp_epsilon(sigma: float, steps: int, beta: float, delta: float):
    """Closed-form (epsilon, alpha*) of the composition bound.

    steps=0 gives epsilon=0 (the infimum as alpha grows without bound);
    sigma=0 with steps>0 reports infinite privacy loss.
    """
    _check_common(sigma, steps, beta, delta)
    if steps == 0:
        return 0.0, math.inf
    if sigma == 0.0:
        return math.inf, math.inf
    a = math.log(1.0 / delta)
    b = beta * beta * steps / (2.0 * sigma * sigma)
    alpha_star = 1.0 + math.sqrt(a / b)
    return 2.0 * math.sqrt(a * b) + b, alpha_star


def default_alpha_grid() -> np.ndarray:
    """Orders 1.001..512, finer near 1 where the objective is steep."""
    return np.concatenate(
        [np.arange(1.001, 3.0, 0.001), np.arange(3.0, 512.01, 0.01)]
    )


def rdp_epsilon_grid(sigma, steps, beta, delta, alpha_grid=None) -> float:
    """Pointwise minimum of the bound over an explicit alpha grid."""
    _check_common(sigma, steps, beta, delta)
    grid = default_alpha_grid() if alpha_grid is None else np.asarray(alpha_grid, dtype=np.float64)
    if grid.size == 0:
        raise ContractError("empty alpha grid")
    if np.any(grid <= 1.0):
        raise ContractError("alpha grid must lie in (1, inf)")
    if steps == 0:
        return 0.0
    if sigma == 0.0:
        return math.inf
    a = math.log(1.0 / delta)
    b = beta * beta * steps / (2.0 * sigma * sigma)
    return float(np.min(a / (grid - 1.0) + grid * b))
