"""ETT-style CSV ingestion and chronological splitting.

Expected header: ``date,HUFL,HULL,MUFL,MULL,LUFL,LULL,OT`` with ISO
timestamps and ``.``-decimal numbers. Malformed rows are rejected by row
number; missing values are never imputed.
"""

import csv
from dataclasses import dataclass
from datetime import datetime

import numpy as np

from ..errors import ContractError, IngestionError

FEATURES = ("HUFL", "HULL", "MUFL", "MULL", "LUFL", "LULL", "OT")
HEADER = ("date",) + FEATURES
DEFAULT_TARGET = "OT"


@dataclass
class RawSeries:
    timestamps: list
    values: np.ndarray  # rows x 7

    def __len__(self) -> int:
        return self.values.shape[0]


def target_channel(name: str) -> int:
    if name not in FEATURES:
        raise ContractError(f"unknown target {name!r}; expected one of {FEATURES}")
    return FEATURES.index(name)


def load_csv(path) -> RawSeries:
    with open(path, newline="") as fh:
        reader = csv.reader(fh)
        try:
            header = next(reader)
        except StopIteration:
            raise IngestionError(f"{path}: empty file") from None
        if tuple(h.strip() for h in header) != HEADER:
            raise IngestionError(
                f"{path}: bad header {header!r}, expected {','.join(HEADER)}"
            )
        timestamps = []
        rows = []
        prev = None
        for lineno, row in enumerate(reader, start=2):
            if len(row) != len(HEADER):
                raise IngestionError(f"{path}:{lineno}: expected {len(HEADER)} fields, got {len(row)}")
            try:
                ts = datetime.fromisoformat(row[0].strip())
            except ValueError:
                raise IngestionError(f"{path}:{lineno}: unparsable timestamp {row[0]!r}") from None
            if prev is not None and ts <= prev:
                raise IngestionError(f"{path}:{lineno}: timestamps not strictly increasing")
            prev = ts
            try:
                vals = [float(v) for v in row[1:]]
            except ValueError:
                raise IngestionError(f"{path}:{lineno}: unparsable number in {row[1:]!r}") from None
            if not all(np.isfinite(vals)):
                raise IngestionError(f"{path}:{lineno}: non-finite value")
            timestamps.append(ts)
            rows.append(vals)
    if not rows:
        raise IngestionError(f"{path}: no data rows")
    return RawSeries(timestamps, np.asarray(rows, dtype=np.float64))


def split_chrono(series: RawSeries, ratios=(0.7, 0.1, 0.2), min_rows: int = 17):
    """Contiguous chronological (train, val, test) value segments.

    Boundaries are floors of the cumulative ratios. ``min_rows`` guards each
    non-empty split; pass 0 to relax it.
    """
    if abs(sum(ratios) - 1.0) > 1e-9 or len(ratios) != 3 or any(r < 0 for r in ratios):
        raise ContractError(f"ratios must be three non-negatives summing to 1, got {ratios}")
    n = len(series)
    b1 = int(n * ratios[0])
    b2 = int(n * (ratios[0] + ratios[1]))
    segments = (series.values[:b1], series.values[b1:b2], series.values[b2:])
    for name, seg, ratio in zip(("train", "val", "test"), segments, ratios):
        if ratio > 0 and seg.shape[0] < min_rows:
            raise ContractError(
                f"{name} split has {seg.shape[0]} rows, needs at least {min_rows}"
            )
    return segments
