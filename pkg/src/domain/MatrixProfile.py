import numpy as np


class MatrixProfile:
    def __init__(self, window: int, distances: np.ndarray, indices: np.ndarray, exclusion_zone: int):
        self.window: int = window
        self.distances: np.ndarray = distances
        self.indices: np.ndarray = indices
        self.exclusion_zone: int = exclusion_zone

    def __len__(self):
        return self.distances.shape[0]
