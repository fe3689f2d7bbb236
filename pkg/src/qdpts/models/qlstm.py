"""LSTM cell whose four gates run a gate network on the concatenated
input/hidden vector after a per-gate linear preprocessor.
"""

from dataclasses import dataclass

import numpy as np

from ..autodiff import ops
from ..errors import ContractError
from ..qsim.templates import qlstm_qnn
from .init import affine_weight, rotation_angles
from .store import ParamStore

_GATES = ("f", "i", "o", "g")


@dataclass(frozen=True)
class QlstmConfig:
    seq_len: int = 16
    n_features: int = 7
    hidden: int = 4
    n_blocks: int = 5

    @property
    def n_qubits(self) -> int:
        return self.n_features + self.hidden


class QlstmModel:
    kind = "qlstm"

    def __init__(self, cfg: QlstmConfig):
        self.cfg = cfg
        self.template = qlstm_qnn(cfg.n_qubits, cfg.n_blocks, n_measured=cfg.hidden)

    def init_params(self, seed) -> ParamStore:
        cfg = self.cfg
        rng = np.random.default_rng(seed)
        store = ParamStore()
        for gate in _GATES:
            store.register(f"{gate}.w", affine_weight(rng, cfg.n_qubits, cfg.n_qubits))
            store.register(f"{gate}.b", np.zeros(cfg.n_qubits))
            store.register(f"{gate}.theta", rotation_angles(rng, self.template.n_trainable))
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
        h = tape.tensor(np.zeros(cfg.hidden))
        c = tape.tensor(np.zeros(cfg.hidden))
        for t in range(cfg.seq_len):
            v = ops.concat(tape.tensor(X[t]), h)
            z = {}
            for gate in _GATES:
                pre = ops.affine(v, leaves[f"{gate}.w"], leaves[f"{gate}.b"])
                z[gate] = ops.quantum_apply(self.template, leaves[f"{gate}.theta"], pre)
            f = ops.sigmoid(z["f"])
            i = ops.sigmoid(z["i"])
            o = ops.sigmoid(z["o"])
            g = ops.tanh(z["g"])
            c = ops.add(ops.mul(f, c), ops.mul(i, g))
            tc = ops.tanh(c)
            h = ops.mul(o, tc)
            if trace is not None:
                trace.setdefault("gates", []).append(
                    {"f": f.data.copy(), "i": i.data.copy(), "o": o.data.copy(),
                     "g": g.data.copy(), "tanh_c": tc.data.copy()}
                )
        return ops.affine(h, leaves["head.w"], leaves["head.b"])
