"""Differentiable primitives recorded on a tape.

Forward values follow the standard definitions; each op saves exactly what
its backward closure needs. Gate networks enter the tape through
``quantum_apply``, whose backward delegates to the simulator's reverse sweep.
"""

import math

import numpy as np
from scipy.special import erf

from ..errors import ContractError
from ..qsim import adjoint_vjp, measure_template, run_circuit
from .tape import Tape, Tensor

LAYER_NORM_EPS = 1e-5
_INV_SQRT2 = 1.0 / math.sqrt(2.0)
_INV_SQRT_2PI = 1.0 / math.sqrt(2.0 * math.pi)


def _same_tape(*tensors) -> Tape:
    tape = tensors[0].tape
    for t in tensors[1:]:
        if t.tape is not tape:
            raise ContractError("operands recorded on different tapes")
    return tape


def _need(cond, msg):
    if not cond:
        raise ContractError(msg)


def affine(x: Tensor, w: Tensor, b: Tensor) -> Tensor:
    """w @ x + b for a vector x; row-wise x @ w^T + b for a matrix x."""
    tape = _same_tape(x, w, b)
    xd, wd, bd = x.data, w.data, b.data
    _need(wd.ndim == 2 and bd.shape == (wd.shape[0],),
          f"affine weight/bias mismatch: {wd.shape} vs {bd.shape}")
    if xd.ndim == 1:
        _need(xd.shape[0] == wd.shape[1],
              f"affine input {xd.shape} does not match weight {wd.shape}")
        out = wd @ xd + bd

        def vjp(g):
            return (wd.T @ g, np.outer(g, xd), g)
    elif xd.ndim == 2:
        _need(xd.shape[1] == wd.shape[1],
              f"affine input {xd.shape} does not match weight {wd.shape}")
        out = xd @ wd.T + bd

        def vjp(g):
            return (g @ wd, g.T @ xd, g.sum(axis=0))
    else:
        raise ContractError(f"affine input must be 1-D or 2-D, got {xd.shape}")
    return tape._record(out, (x.nid, w.nid, b.nid), vjp)


def matmul(a: Tensor, b: Tensor, transpose_a=False, transpose_b=False, scale=1.0) -> Tensor:
    """scale * (A @ B), with optional transposes; B may be a vector."""
    tape = _same_tape(a, b)
    ad = a.data.T if transpose_a else a.data
    bd = b.data
    _need(ad.ndim == 2, f"matmul left operand must be 2-D, got {a.data.shape}")
    if bd.ndim == 1:
        _need(not transpose_b, "transpose_b is meaningless for a vector operand")
        _need(ad.shape[1] == bd.shape[0],
              f"matmul shapes do not conform: {ad.shape} vs {bd.shape}")
        out = scale * (ad @ bd)

        def vjp(g):
            da = scale * np.outer(g, bd)
            db = scale * (ad.T @ g)
            return (da.T if transpose_a else da, db)
    elif bd.ndim == 2:
        bd = bd.T if transpose_b else bd
        _need(ad.shape[1] == bd.shape[0],
              f"matmul shapes do not conform: {ad.shape} vs {bd.shape}")
        out = scale * (ad @ bd)

        def vjp(g):
            da = scale * (g @ bd.T)
            db = scale * (ad.T @ g)
            return (da.T if transpose_a else da, db.T if transpose_b else db)
    else:
        raise ContractError(f"matmul right operand must be 1-D or 2-D, got {b.data.shape}")
    return tape._record(out, (a.nid, b.nid), vjp)


def add(a: Tensor, b: Tensor) -> Tensor:
    tape = _same_tape(a, b)
    _need(a.data.shape == b.data.shape,
          f"add shape mismatch: {a.data.shape} vs {b.data.shape}")
    return tape._record(a.data + b.data, (a.nid, b.nid), lambda g: (g, g))


def mul(a: Tensor, b: Tensor) -> Tensor:
    tape = _same_tape(a, b)
    _need(a.data.shape == b.data.shape,
          f"mul shape mismatch: {a.data.shape} vs {b.data.shape}")
    ad, bd = a.data, b.data
    return tape._record(ad * bd, (a.nid, b.nid), lambda g: (g * bd, g * ad))


def concat(*tensors: Tensor) -> Tensor:
    """Join 1-D vectors end to end."""
    tape = _same_tape(*tensors)
    for t in tensors:
        _need(t.data.ndim == 1, f"concat takes vectors, got shape {t.data.shape}")
    sizes = [t.data.shape[0] for t in tensors]
    splits = np.cumsum(sizes)[:-1]
    out = np.concatenate([t.data for t in tensors])

    def vjp(g):
        return tuple(np.split(g, splits))

    return tape._record(out, tuple(t.nid for t in tensors), vjp)


def stack_rows(tensors) -> Tensor:
    """Join equal-length vectors as the rows of a matrix."""
    tensors = list(tensors)
    tape = _same_tape(*tensors)
    d = tensors[0].data.shape
    for t in tensors:
        _need(t.data.ndim == 1 and t.data.shape == d,
              f"stack_rows needs equal vectors: {d} vs {t.data.shape}")
    out = np.stack([t.data for t in tensors])

    def vjp(g):
        return tuple(g[i] for i in range(len(tensors)))

    return tape._record(out, tuple(t.nid for t in tensors), vjp)


def sigmoid(x: Tensor) -> Tensor:
    y = 1.0 / (1.0 + np.exp(-x.data))
    return x.tape._record(y, (x.nid,), lambda g: (g * y * (1.0 - y),))


def tanh(x: Tensor) -> Tensor:
    y = np.tanh(x.data)
    return x.tape._record(y, (x.nid,), lambda g: (g * (1.0 - y * y),))


def gelu(x: Tensor) -> Tensor:
    """Exact x * Phi(x) form."""
    xd = x.data
    phi_cdf = 0.5 * (1.0 + erf(xd * _INV_SQRT2))
    y = xd * phi_cdf

    def vjp(g):
        pdf = np.exp(-0.5 * xd * xd) * _INV_SQRT_2PI
        return (g * (phi_cdf + xd * pdf),)

    return x.tape._record(y, (x.nid,), vjp)


def softmax(x: Tensor, axis: int = -1) -> Tensor:
    """Max-subtracted softmax along one axis."""
    shifted = x.data - x.data.max(axis=axis, keepdims=True)
    e = np.exp(shifted)
    y = e / e.sum(axis=axis, keepdims=True)

    def vjp(g):
        return (y * (g - (g * y).sum(axis=axis, keepdims=True)),)

    return x.tape._record(y, (x.nid,), vjp)


def layer_norm(x: Tensor, gamma: Tensor, beta: Tensor) -> Tensor:
    """Normalize over the last axis (eps inside the variance square root),
    then apply the learned gain and shift."""
    tape = _same_tape(x, gamma, beta)
    xd = x.data
    d = xd.shape[-1]
    _need(gamma.data.shape == (d,) and beta.data.shape == (d,),
          f"layer_norm gain/shift must be ({d},), got {gamma.data.shape} and {beta.data.shape}")
    mu = xd.mean(axis=-1, keepdims=True)
    xc = xd - mu
    var = (xc * xc).mean(axis=-1, keepdims=True)
    inv_std = 1.0 / np.sqrt(var + LAYER_NORM_EPS)
    xhat = xc * inv_std
    out = gamma.data * xhat + beta.data

    def vjp(g):
        dgamma = (g * xhat).reshape(-1, d).sum(axis=0)
        dbeta = g.reshape(-1, d).sum(axis=0)
        dxhat = g * gamma.data
        dx = inv_std * (
            dxhat
            - dxhat.mean(axis=-1, keepdims=True)
            - xhat * (dxhat * xhat).mean(axis=-1, keepdims=True)
        )
        return (dx, dgamma, dbeta)

    return tape._record(out, (x.nid, gamma.nid, beta.nid), vjp)


def mean_pool(x: Tensor, axis: int = 0) -> Tensor:
    xd = x.data
    _need(xd.ndim >= 1 and -xd.ndim <= axis < xd.ndim,
          f"mean_pool axis {axis} invalid for shape {xd.shape}")
    n = xd.shape[axis]

    def vjp(g):
        return (np.repeat(np.expand_dims(g, axis), n, axis=axis) / n,)

    return x.tape._record(xd.mean(axis=axis), (x.nid,), vjp)


def mse(pred: Tensor, target: Tensor) -> Tensor:
    tape = _same_tape(pred, target)
    _need(pred.data.shape == target.data.shape,
          f"mse shape mismatch: {pred.data.shape} vs {target.data.shape}")
    diff = pred.data - target.data
    n = max(diff.size, 1)
    out = np.asarray((diff * diff).sum() / n)

    def vjp(g):
        scaled = (2.0 / n) * g * diff
        return (scaled, -scaled)

    return tape._record(out, (pred.nid, target.nid), vjp)


def exp_decay(tau: Tensor) -> Tensor:
    """Elementwise exp(-1/tau): per-channel decay factor from a trainable
    time constant (one step per tick)."""
    td = tau.data
    lam = np.exp(-1.0 / td)
    return tau.tape._record(lam, (tau.nid,), lambda g: (g * lam / (td * td),))


def quantum_apply(tpl, params: Tensor, inputs: Tensor) -> Tensor:
    """<Z> readout of a circuit template as a differentiable node."""
    tape = _same_tape(params, inputs)
    _need(params.data.shape == (tpl.n_trainable,),
          f"template expects {tpl.n_trainable} trainables, got {params.data.shape}")
    _need(inputs.data.shape == (tpl.n_inputs,),
          f"template expects {tpl.n_inputs} inputs, got {inputs.data.shape}")
    pd, xd = params.data, inputs.data
    state = run_circuit(tpl, pd, xd)
    out = measure_template(tpl, state)

    def vjp(g):
        return adjoint_vjp(tpl, pd, xd, g, final_state=state)

    return tape._record(out, (params.nid, inputs.nid), vjp)
