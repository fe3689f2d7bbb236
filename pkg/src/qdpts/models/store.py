"""Named parameter segments with a fixed flattening order.

Serialization is a single file: a structured-text manifest (name, offset in
doubles, shape) followed by the flat little-endian float64 payload in
registration order. Round-trips are bit-exact.
"""

import json

import numpy as np

from ..errors import ConfigError, ContractError

_MAGIC = "qdpts-params 1"


class ParamStore:
    def __init__(self):
        self._arrays: dict[str, np.ndarray] = {}

    def register(self, name: str, values: np.ndarray) -> None:
        if name in self._arrays:
            raise ConfigError(f"duplicate parameter segment {name!r}")
        if " " in name:
            raise ConfigError(f"segment name may not contain spaces: {name!r}")
        arr = np.ascontiguousarray(values, dtype=np.float64)
        if not np.all(np.isfinite(arr)):
            raise ConfigError(f"segment {name!r} contains non-finite values")
        self._arrays[name] = arr

    def __getitem__(self, name: str) -> np.ndarray:
        return self._arrays[name]

    def __contains__(self, name: str) -> bool:
        return name in self._arrays

    def names(self):
        return list(self._arrays)

    @property
    def total_dim(self) -> int:
        return sum(a.size for a in self._arrays.values())

    def flatten(self) -> np.ndarray:
        return np.concatenate([a.ravel() for a in self._arrays.values()])

    def set_flat(self, flat: np.ndarray) -> None:
        flat = np.asarray(flat, dtype=np.float64)
        if flat.shape != (self.total_dim,):
            raise ContractError(f"expected flat vector of {self.total_dim}, got {flat.shape}")
        off = 0
        for arr in self._arrays.values():
            arr[...] = flat[off : off + arr.size].reshape(arr.shape)
            off += arr.size

    def leaves(self, tape) -> dict:
        """One leaf tensor per segment, sharing the stored arrays."""
        return {name: tape.tensor(arr) for name, arr in self._arrays.items()}

    def flatten_grads(self, grad_map: dict, leaves: dict) -> np.ndarray:
        parts = []
        for name in self._arrays:
            parts.append(np.asarray(grad_map[leaves[name].nid]).ravel())
        return np.concatenate(parts)

    def save(self, path, meta: dict | None = None) -> None:
        lines = [_MAGIC, "meta " + json.dumps(meta or {}, sort_keys=True)]
        off = 0
        for name, arr in self._arrays.items():
            dims = ",".join(str(d) for d in arr.shape)
            lines.append(f"segment {name} {off} {dims}")
            off += arr.size
        lines.append(f"end {off}")
        payload = self.flatten().astype("<f8").tobytes()
        with open(path, "wb") as fh:
            fh.write(("\n".join(lines) + "\n").encode("ascii"))
            fh.write(payload)

    @classmethod
    def load(cls, path):
        with open(path, "rb") as fh:
            raw = fh.read()
        head, sep, _ = raw.partition(b"\nend ")
        if not sep:
            raise ContractError(f"{path}: missing manifest terminator")
        lines = head.decode("ascii").split("\n")
        if lines[0] != _MAGIC:
            raise ContractError(f"{path}: not a parameter file")
        meta = json.loads(lines[1].removeprefix("meta "))
        total_line_end = raw.index(b"\n", len(head) + 1)
        total = int(raw[len(head) + 5 : total_line_end])
        payload = np.frombuffer(raw[total_line_end + 1 :], dtype="<f8")
        if payload.size != total:
            raise ContractError(f"{path}: payload has {payload.size} doubles, manifest says {total}")
        store = cls()
        for line in lines[2:]:
            _, name, off, dims = line.split(" ")
            shape = tuple(int(d) for d in dims.split(",") if d)
            size = int(np.prod(shape, dtype=np.int64)) if shape else 1
            start = int(off)
            store.register(name, payload[start : start + size].reshape(shape).copy())
        if store.total_dim != total:
            raise ContractError(f"{path}: segments cover {store.total_dim} of {total} doubles")
        return store, meta
