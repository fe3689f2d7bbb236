"""Per-feature z-scoring with statistics taken from the training split only."""

from dataclasses import dataclass

import numpy as np

from ..errors import IngestionError


@dataclass(frozen=True)
class StandardScaler:
    mean: np.ndarray
    std: np.ndarray

    @classmethod
    def fit(cls, train: np.ndarray) -> "StandardScaler":
        if train.size == 0:
            raise IngestionError("cannot fit a scaler on an empty split")
        mean = train.mean(axis=0)
        std = train.std(axis=0)  # population standard deviation
        bad = np.flatnonzero(std <= 0)
        if bad.size:
            raise IngestionError(f"constant feature column(s) {bad.tolist()}")
        return cls(mean, std)

    def transform(self, values: np.ndarray) -> np.ndarray:
        return (values - self.mean) / self.std

    def inverse(self, values: np.ndarray) -> np.ndarray:
        return values * self.std + self.mean

    def inverse_channel(self, values: np.ndarray, channel: int) -> np.ndarray:
        return values * self.std[channel] + self.mean[channel]


def fit_apply_scaler(train: np.ndarray, *others):
    """Fit on the training split, apply to every split; returns the
    standardized splits followed by the scaler."""
    scaler = StandardScaler.fit(train)
    out = [scaler.transform(train)]
    out.extend(scaler.transform(o) for o in others)
    return (*out, scaler)
