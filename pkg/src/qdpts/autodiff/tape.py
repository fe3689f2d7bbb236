"""Reverse-mode differentiation over an append-only tape.

Nodes are recorded in evaluation order, so the list is already a topological
order; the backward pass walks it once in reverse, accumulating gradients
centrally. Tapes are single-use.
"""

import numpy as np

from ..errors import ContractError


class Node:
    __slots__ = ("parents", "vjp", "shape")

    def __init__(self, parents, vjp, shape):
        self.parents = parents
        self.vjp = vjp
        self.shape = shape


class Tensor:
    """A shaped float64 value recorded on a tape."""

    __slots__ = ("data", "tape", "nid")

    def __init__(self, data, tape, nid):
        self.data = data
        self.tape = tape
        self.nid = nid

    @property
    def shape(self):
        return self.data.shape


class Tape:
    def __init__(self):
        self.nodes = []

    def tensor(self, data) -> Tensor:
        """Record a leaf holding ``data`` (no copy; treated as read-only)."""
        arr = np.asarray(data, dtype=np.float64)
        return self._record(arr, (), None)

    def _record(self, data, parents, vjp) -> Tensor:
        self.nodes.append(Node(parents, vjp, data.shape))
        return Tensor(data, self, len(self.nodes) - 1)


def backward(tape: Tape, loss: Tensor) -> dict:
    """Gradient of a scalar loss with respect to every node on the tape.

    Returns node id -> float64 array (zeros for nodes the loss does not
    reach, leaves included).
    """
    if loss.tape is not tape:
        raise ContractError("loss was recorded on a different tape")
    if loss.data.shape != ():
        raise ContractError(f"loss must be scalar, got shape {loss.data.shape}")
    grads: list = [None] * len(tape.nodes)
    grads[loss.nid] = np.ones(())
    for nid in range(len(tape.nodes) - 1, -1, -1):
        g = grads[nid]
        node = tape.nodes[nid]
        if g is None or node.vjp is None:
            continue
        for pid, contrib in zip(node.parents, node.vjp(g)):
            if contrib is None:
                continue
            if grads[pid] is None:
                grads[pid] = np.asarray(contrib, dtype=np.float64).copy()
            else:
                grads[pid] = grads[pid] + contrib
    return {
        nid: (np.zeros(node.shape) if grads[nid] is None else grads[nid])
        for nid, node in enumerate(tape.nodes)
    }
