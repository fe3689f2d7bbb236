"""Receptance-gated recurrent forecaster with a circuit-enhanced channel mix
and attention over circuit-derived queries and keys.

Per step: the projected input drives (a) a decayed key/value accumulator
gated by a receptance sigmoid, (b) a channel-mixing block fed by the circuit
readout, and (c) causal attention whose queries, keys and values are affine
heads of the same readout. Residuals and two layer norms combine the three
streams.
"""

from dataclasses import dataclass

import numpy as np

from ..autodiff import ops
from ..errors import ContractError
from ..qsim.templates import qrwkv_vqc
from .init import TAU_INIT, affine_weight, rotation_angles
from .store import ParamStore


@dataclass(frozen=True)
class QrwkvConfig:
    seq_len: int = 16
    n_features: int = 7
    d: int = 8
    n_qubits: int = 4
    n_layers: int = 2


def decayed_accumulate(lam, m_prev, v):
    """One step of the exponential-decay accumulator: lam * m_prev + v."""
    return ops.add(ops.mul(lam, m_prev), v)


class QrwkvModel:
    kind = "qrwkv"

    def __init__(self, cfg: QrwkvConfig):
        self.cfg = cfg
        self.template = qrwkv_vqc(cfg.n_qubits, cfg.n_layers)

    def init_params(self, seed) -> ParamStore:
        cfg = self.cfg
        rng = np.random.default_rng(seed)
        store = ParamStore()
        store.register("embed.w", affine_weight(rng, cfg.d, cfg.n_features))
        store.register("embed.b", np.zeros(cfg.d))
        store.register("vqc_in.w", affine_weight(rng, cfg.n_qubits, cfg.d))
        store.register("vqc_in.b", np.zeros(cfg.n_qubits))
        store.register("vqc.theta", rotation_angles(rng, self.template.n_trainable))
        for head in ("qh", "kh", "vh"):
            store.register(f"{head}.w", affine_weight(rng, cfg.d, cfg.n_qubits))
            store.register(f"{head}.b", np.zeros(cfg.d))
        store.register("time.wk", affine_weight(rng, cfg.d, cfg.d))
        store.register("time.wv", affine_weight(rng, cfg.d, cfg.d))
        store.register("time.wr", affine_weight(rng, cfg.d, 2 * cfg.d))
        store.register("time.br", np.zeros(cfg.d))
        store.register("time.tau", np.full(cfg.d, TAU_INIT))
        store.register("chan.w1", affine_weight(rng, cfg.d, cfg.n_qubits))
        store.register("chan.w2", affine_weight(rng, cfg.d, cfg.d))
        store.register("chan.b1", np.zeros(cfg.d))
        store.register("chan.mlp.w", affine_weight(rng, cfg.d, cfg.d))
        store.register("chan.mlp.b", np.zeros(cfg.d))
        store.register("chan.w3", affine_weight(rng, cfg.d, cfg.d))
        store.register("chan.b2", np.zeros(cfg.d))
        store.register("ln1.g", np.ones(cfg.d))
        store.register("ln1.b", np.zeros(cfg.d))
        store.register("ln2.g", np.ones(cfg.d))
        store.register("ln2.b", np.zeros(cfg.d))
        store.register("head.w", affine_weight(rng, 1, cfg.d))
        store.register("head.b", np.zeros(1))
        return store

    def forward(self, tape, leaves, X, trace=None):
        cfg = self.cfg
        X = np.asarray(X, dtype=np.float64)
        if X.shape != (cfg.seq_len, cfg.n_features):
            raise ContractError(
                f"expected window {(cfg.seq_len, cfg.n_features)}, got {X.shape}"
            )
        lam = ops.exp_decay(leaves["time.tau"])
        m = tape.tensor(np.zeros(cfg.d))
        h_chan = tape.tensor(np.zeros(cfg.d))
        keys, values = [], []
        out = None
        for t in range(cfg.seq_len):
            x = ops.affine(tape.tensor(X[t]), leaves["embed.w"], leaves["embed.b"])

            venc = ops.affine(x, leaves["vqc_in.w"], leaves["vqc_in.b"])
            qemb = ops.quantum_apply(self.template, leaves["vqc.theta"], venc)
            q_t = ops.affine(qemb, leaves["qh.w"], leaves["qh.b"])
            keys.append(ops.affine(qemb, leaves["kh.w"], leaves["kh.b"]))
            values.append(ops.affine(qemb, leaves["vh.w"], leaves["vh.b"]))

            # decayed key/value memory behind the receptance gate
            u_t = ops.matmul(leaves["time.wk"], x)
            v_t = ops.matmul(leaves["time.wv"], x)
            r_t = ops.sigmoid(ops.affine(ops.concat(x, m), leaves["time.wr"], leaves["time.br"]))
            m = decayed_accumulate(lam, m, v_t)
            y_time = ops.mul(r_t, ops.mul(u_t, m))

            # channel mixing on the circuit readout
            mlp = ops.gelu(ops.affine(x, leaves["chan.mlp.w"], leaves["chan.mlp.b"]))
            z = ops.add(
                ops.add(ops.matmul(leaves["chan.w1"], qemb), ops.matmul(leaves["chan.w2"], mlp)),
                leaves["chan.b1"],
            )
            h_new = ops.gelu(z)
            c_t = ops.affine(ops.mul(h_new, h_chan), leaves["chan.w3"], leaves["chan.b2"])
            h_chan = h_new

            # causal attention over circuit-derived queries and keys
            k_mat = ops.stack_rows(keys)
            scores = ops.matmul(k_mat, q_t)
            alpha = ops.softmax(scores, axis=-1)
            v_mat = ops.stack_rows(values)
            y_attn = ops.matmul(v_mat, alpha, transpose_a=True)

            mixed = ops.layer_norm(ops.add(x, y_time), leaves["ln1.g"], leaves["ln1.b"])
            out = ops.layer_norm(
                ops.add(ops.add(mixed, c_t), y_attn), leaves["ln2.g"], leaves["ln2.b"]
            )
            if trace is not None:
                trace.setdefault("attn", []).append(y_attn.data.copy())
                trace.setdefault("alpha", []).append(alpha.data.copy())
                trace.setdefault("memory", []).append(m.data.copy())
        return ops.affine(out, leaves["head.w"], leaves["head.b"])
