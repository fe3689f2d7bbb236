"""Shared parameter initializers (deterministic under seed)."""

import math

import numpy as np

# decay time constant giving exp(-1/tau) ~ 0.9
TAU_INIT = -1.0 / math.log(0.9)


def affine_weight(rng, out_dim: int, in_dim: int) -> np.ndarray:
    bound = 1.0 / math.sqrt(in_dim)
    return rng.uniform(-bound, bound, size=(out_dim, in_dim))


def rotation_angles(rng, n: int) -> np.ndarray:
    return rng.uniform(0.0, 2.0 * math.pi, size=n) * 0.1
