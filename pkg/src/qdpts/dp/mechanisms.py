"""Per-sample clipping and the Gaussian mechanism over flat gradient vectors."""

import warnings
from dataclasses import dataclass

import numpy as np

from ..errors import ConfigError, ContractError


@dataclass(frozen=True)
class PrivacyConfig:
    """Clip bound, noise multiplier, target delta and sampling rate.

    ``enabled=False`` means plain averaging: no clipping, no noise, and no
    generator draw, so a disabled run is bit-identical to sigma=0 with an
    infinite clip bound.
    """

    enabled: bool = True
    clip_c: float = 1.0
    sigma: float = 1.0
    delta: float = 1e-5
    sample_rate: float | None = None

    def __post_init__(self):
        if self.enabled:
            if not self.clip_c > 0:
                raise ConfigError(f"clip bound must be positive, got {self.clip_c}")
            if self.sigma < 0:
                raise ConfigError(f"noise multiplier must be >= 0, got {self.sigma}")
            if not 0.0 < self.delta < 1.0:
                raise ConfigError(f"delta must lie in (0,1), got {self.delta}")
        if self.sample_rate is not None and not 0.0 < self.sample_rate <= 1.0:
            raise ConfigError(f"sample rate must lie in (0,1], got {self.sample_rate}")

    def warn_if_delta_large(self, n_samples: int) -> None:
        if self.enabled and self.delta >= 1.0 / max(n_samples, 1):
            warnings.warn(
                f"delta={self.delta} is not below 1/N={1.0 / n_samples:.3e}; "
                "the guarantee is weak at this scale",
                stacklevel=2,
            )


def clip_global(g: np.ndarray, clip_c: float) -> np.ndarray:
    """Scale to at most the clip bound in l2 norm; shorter vectors pass
    through unchanged (bit-exactly)."""
    if not clip_c > 0:
        raise ConfigError(f"clip bound must be positive, got {clip_c}")
    g = np.asarray(g, dtype=np.float64)
    norm = float(np.linalg.norm(g))
    if norm <= clip_c or norm == 0.0:
        return g
    return g * (clip_c / norm)


def aggregate_noisy(per_sample, cfg: PrivacyConfig, rng) -> np.ndarray:
    """Clip each per-sample gradient, sum, add N(0, sigma^2 C^2) noise, and
    divide by the batch size. sigma=0 draws nothing from the generator."""
    grads = list(per_sample)
    if not grads:
        raise ContractError("empty batch")
    dim = grads[0].shape
    for g in grads:
        if g.shape != dim:
            raise ContractError(f"gradient shape mismatch: {g.shape} vs {dim}")
    if not cfg.enabled:
        total = np.zeros(dim)
        for g in grads:
            total += g
        return total / len(grads)
    total = np.zeros(dim)
    for g in grads:
        total += clip_global(g, cfg.clip_c)
    if cfg.sigma > 0:
        total += rng.standard_normal(dim) * (cfg.sigma * cfg.clip_c)
    return total / len(grads)
