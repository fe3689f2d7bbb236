"""Differentially private optimization: clipping, Gaussian noise, Adam,
and the privacy-loss accountant."""

from .accountant import default_alpha_grid, rdp_epsilon, rdp_epsilon_grid
from .adam import AdamState, adam_step
from .mechanisms import PrivacyConfig, aggregate_noisy, clip_global

__all__ = [
    "AdamState",
    "PrivacyConfig",
    "adam_step",
    "aggregate_noisy",
    "clip_global",
    "default_alpha_grid",
    "rdp_epsilon",
    "rdp_epsilon_grid",
]
