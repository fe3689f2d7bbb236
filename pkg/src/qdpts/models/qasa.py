"""Self-attention forecaster with circuit-valued query/key/value embeddings.

Each token is linearly embedded, written into amplitudes, and read out by
three independently parameterized circuits; scaled dot-product attention over
the sequence feeds a mean-pooled feedforward head.
"""

import math
from dataclasses import dataclass

import numpy as np

from ..autodiff import ops
from ..errors import ContractError
from ..qsim.templates import qasa_vqc
from .init import affine_weight, rotation_angles
from .store import ParamStore


@dataclass(frozen=True)
class QasaConfig:
    seq_len: int = 16
    n_features: int = 7
    n_qubits: int = 9
    d_model: int = 16
    n_layers: int = 2
    ff_hidden: int = 32


class QasaModel:
    kind = "qasa"

    def __init__(self, cfg: QasaConfig):
        if cfg.d_model > (1 << cfg.n_qubits):
            raise ContractError(f"d_model {cfg.d_model} exceeds 2^{cfg.n_qubits} amplitudes")
        self.cfg = cfg
        self.template = qasa_vqc(cfg.n_qubits, cfg.n_layers, n_inputs=cfg.d_model)

    def init_params(self, seed) -> ParamStore:
        cfg = self.cfg
        rng = np.random.default_rng(seed)
        store = ParamStore()
        store.register("embed.w", affine_weight(rng, cfg.d_model, cfg.n_features))
        store.register("embed.b", np.zeros(cfg.d_model))
        for name in ("q", "k", "v"):
            store.register(f"{name}.theta", rotation_angles(rng, self.template.n_trainable))
        store.register("ff1.w", affine_weight(rng, cfg.ff_hidden, cfg.n_qubits))
        store.register("ff1.b", np.zeros(cfg.ff_hidden))
        store.register("ff2.w", affine_weight(rng, 1, cfg.ff_hidden))
        store.register("ff2.b", np.zeros(1))
        return store

    def forward(self, tape, leaves, X, trace=None):
        cfg = self.cfg
        X = np.asarray(X, dtype=np.float64)
        if X.shape != (cfg.seq_len, cfg.n_features):
            raise ContractError(
                f"expected window {(cfg.seq_len, cfg.n_features)}, got {X.shape}"
            )
        qs, ks, vs = [], [], []
        for t in range(cfg.seq_len):
            embedded = ops.affine(tape.tensor(X[t]), leaves["embed.w"], leaves["embed.b"])
            qs.append(ops.quantum_apply(self.template, leaves["q.theta"], embedded))
            ks.append(ops.quantum_apply(self.template, leaves["k.theta"], embedded))
            vs.append(ops.quantum_apply(self.template, leaves["v.theta"], embedded))
        q_mat = ops.stack_rows(qs)
        k_mat = ops.stack_rows(ks)
        v_mat = ops.stack_rows(vs)
        scores = ops.matmul(q_mat, k_mat, transpose_b=True, scale=1.0 / math.sqrt(cfg.n_qubits))
        attn = ops.softmax(scores, axis=1)
        if trace is not None:
            trace["attention"] = attn.data.copy()
            trace["qkv"] = (q_mat.data.copy(), k_mat.data.copy(), v_mat.data.copy())
        ctx = ops.matmul(attn, v_mat)
        pooled = ops.mean_pool(ctx, axis=0)
        hidden = ops.gelu(ops.affine(pooled, leaves["ff1.w"], leaves["ff1.b"]))
        return ops.affine(hidden, leaves["ff2.w"], leaves["ff2.b"])
