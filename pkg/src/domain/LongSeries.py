import numpy as np

from domain.Sequence import Sequence


class LongSeries:
    def __init__(self, values: np.ndarray, boundaries: list[int]):
        values = np.asarray(values, dtype=np.float64)
        if values.ndim == 1:
            values = values.reshape(-1, 1)

        if not boundaries or boundaries[0] != 0:
            raise ValueError("Boundaries must start at offset 0")

        if any(second <= first for first, second in zip(boundaries, boundaries[1:])):
            raise ValueError("Boundaries must be strictly increasing")

        if boundaries[-1] >= values.shape[0]:
            raise ValueError(f"Boundary {boundaries[-1]} is outside a series of length {values.shape[0]}")

        self.values: np.ndarray = values
        self.boundaries: list[int] = list(boundaries)

    def __len__(self):
        return self.values.shape[0]

    @property
    def dimension(self) -> int:
        return self.values.shape[1]

    def univariate(self) -> np.ndarray:
        if self.dimension != 1:
            raise ValueError(f"Expected a single-dimension series, got {self.dimension} dimensions")
        return np.ascontiguousarray(self.values[:, 0])

    def subsequence(self, offset: int, length: int) -> Sequence:
        if offset < 0 or offset + length > len(self):
            raise ValueError(f"Subsequence [{offset}, {offset + length}) is outside a series of length {len(self)}")
        return Sequence(self.values[offset : offset + length], id=str(offset))

    @staticmethod
    def concatenate(sequences: list[Sequence]):
        if not sequences:
            raise ValueError("Cannot concatenate an empty list of sequences")

        dimensions = {sequence.dimension for sequence in sequences}
        if len(dimensions) > 1:
            raise ValueError(f"All sequences must share one dimension, got {sorted(dimensions)}")

        lengths = [sequence.length for sequence in sequences]
        boundaries = np.cumsum([0] + lengths[:-1]).tolist()
        values = np.concatenate([sequence.values for sequence in sequences], axis=0)
        return LongSeries(values, [int(boundary) for boundary in boundaries])
