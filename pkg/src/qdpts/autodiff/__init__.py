"""Tape-based reverse-mode differentiation with circuits as first-class nodes."""

from .tape import Tape, Tensor, backward
from . import ops

__all__ = ["Tape", "Tensor", "backward", "ops"]
