import numpy as np


class WinnerMatrix:
    def __init__(self, values: np.ndarray):
        self.values: np.ndarray = np.asarray(values, dtype=np.int64)

    @property
    def shape(self) -> tuple[int, int]:
        return self.values.shape

    @property
    def total(self) -> int:
        return int(self.values.sum())
