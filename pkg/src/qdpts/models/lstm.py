"""Stacked LSTM baseline: per-gate affine recurrence, final hidden to a scalar head."""

from dataclasses import dataclass

import numpy as np

from ..autodiff import ops
from ..errors import ContractError
from .init import affine_weight
from .store import ParamStore

_GATES = ("i", "f", "g", "o")


@dataclass(frozen=True)
class LstmConfig:
    seq_len: int = 16
    n_features: int = 7
    hidden: int = 64
    n_layers: int = 2


class LstmModel:
    kind = "lstm"

    def __init__(self, cfg: LstmConfig):
        self.cfg = cfg

    def init_params(self, seed) -> ParamStore:
        cfg = self.cfg
        rng = np.random.default_rng(seed)
        store = ParamStore()
        for layer in range(cfg.n_layers):
            in_dim = cfg.n_features if layer == 0 else cfg.hidden
            for gate in _GATES:
                store.register(f"l{layer}.{gate}.wx", affine_weight(rng, cfg.hidden, in_dim))
                store.register(f"l{layer}.{gate}.wh", affine_weight(rng, cfg.hidden, cfg.hidden))
                store.register(f"l{layer}.{gate}.b", np.zeros(cfg.hidden))
        store.register("head.w", affine_weight(rng, 1, cfg.hidden))
        store.register("head.b", np.zeros(1))
        return store

    def forward(self, tape, leaves, X, trace=None):
        cfg = self.cfg
        X = np.asarray(X, dtype=np.float64)
        if X.shape != (cfg.seq_len, cfg.n_features):
            raise ContractError(
                f"expected window {(cfg.seq_len, cfg.n_features)}, got {X.shape}"
            )
        h = [tape.tensor(np.zeros(cfg.hidden)) for _ in range(cfg.n_layers)]
        c = [tape.tensor(np.zeros(cfg.hidden)) for _ in range(cfg.n_layers)]
        for t in range(cfg.seq_len):
            below = tape.tensor(X[t])
            for layer in range(cfg.n_layers):
                pre = {
                    gate: ops.add(
                        ops.affine(below, leaves[f"l{layer}.{gate}.wx"], leaves[f"l{layer}.{gate}.b"]),
                        ops.matmul(leaves[f"l{layer}.{gate}.wh"], h[layer]),
                    )
                    for gate in _GATES
                }
                i = ops.sigmoid(pre["i"])
                f = ops.sigmoid(pre["f"])
                g = ops.tanh(pre["g"])
                o = ops.sigmoid(pre["o"])
                c[layer] = ops.add(ops.mul(f, c[layer]), ops.mul(i, g))
                h[layer] = ops.mul(o, ops.tanh(c[layer]))
                below = h[layer]
            if trace is not None:
                trace.setdefault("hidden", []).append(h[-1].data.copy())
        return ops.affine(h[-1], leaves["head.w"], leaves["head.b"])
