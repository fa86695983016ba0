import numpy as np

from configuration import FLAT_STD_THRESHOLD


class Sequence:
    def __init__(self, values, id: str = ""):
        values = np.array(values, dtype=np.float64)
        if values.ndim == 1:
            values = values.reshape(-1, 1)

        if values.ndim != 2 or values.shape[0] == 0 or values.shape[1] == 0:
            raise ValueError(f"A sequence needs at least one point with at least one dimension, got shape {values.shape}")

        if not np.all(np.isfinite(values)):
            raise ValueError("Sequence values must be finite")

        self.values: np.ndarray = values
        self.id: str = id

    def __len__(self):
        return self.values.shape[0]

    @property
    def length(self) -> int:
        return self.values.shape[0]

    @property
    def dimension(self) -> int:
        return self.values.shape[1]

    def znormalize(self) -> "Sequence":
        mean = self.values.mean(axis=0)
        std = self.values.std(axis=0)
        flat = std < FLAT_STD_THRESHOLD
        normalized = (self.values - mean) / np.where(flat, 1.0, std)
        normalized[:, flat] = 0.0
        return Sequence(normalized, self.id)

    def to_list(self) -> list[list[float]]:
        return self.values.tolist()

    @staticmethod
    def from_list(values: list[list[float]] | list[float], id: str = ""):
        return Sequence(values, id)
