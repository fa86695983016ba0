import numpy as np


class UMatrix:
    def __init__(self, values: np.ndarray):
        self.values: np.ndarray = np.asarray(values, dtype=np.float64)

    @property
    def shape(self) -> tuple[int, int]:
        return self.values.shape
