"""The four forecasters: each maps a standardized window to a scalar
next-step prediction through a tape so per-sample gradients are available.
"""

import numpy as np

from ..autodiff import Tape
from ..errors import ConfigError
from .lstm import LstmConfig, LstmModel
from .qasa import QasaConfig, QasaModel
from .qlstm import QlstmConfig, QlstmModel
from .qrwkv import QrwkvConfig, QrwkvModel
from .store import ParamStore

MODEL_KINDS = ("lstm", "qlstm", "qasa", "qrwkv")

_REGISTRY = {
    "lstm": (LstmModel, LstmConfig),
    "qlstm": (QlstmModel, QlstmConfig),
    "qasa": (QasaModel, QasaConfig),
    "qrwkv": (QrwkvModel, QrwkvConfig),
}


def build_model(kind: str, **overrides):
    """Instantiate a model by kind with optional hyperparameter overrides."""
    if kind not in _REGISTRY:
        raise ConfigError(f"unknown model kind {kind!r}; expected one of {MODEL_KINDS}")
    model_cls, cfg_cls = _REGISTRY[kind]
    return model_cls(cfg_cls(**overrides))


def predict(model, store: ParamStore, X) -> float:
    """Scalar forecast for one window (no gradient kept)."""
    tape = Tape()
    pred = model.forward(tape, store.leaves(tape), np.asarray(X))
    return float(pred.data[0])


__all__ = [
    "MODEL_KINDS",
    "LstmConfig",
    "LstmModel",
    "ParamStore",
    "QasaConfig",
    "QasaModel",
    "QlstmConfig",
    "QlstmModel",
    "QrwkvConfig",
    "QrwkvModel",
    "build_model",
    "predict",
]
