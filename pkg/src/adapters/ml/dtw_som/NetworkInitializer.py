import numpy as np

from configuration import service_logger
from domain.Sequence import Sequence
from domain.SomNetwork import SomNetwork
from domain.TrainingConfig import TrainingConfig
from exceptions import DataError


class NetworkInitializer:
    def __init__(self, patterns: list[Sequence], rows: int, cols: int, config: TrainingConfig):
        if not patterns:
            raise DataError("Cannot initialize a network without patterns")

        dimensions = {pattern.dimension for pattern in patterns}
        if len(dimensions) != 1:
            raise DataError(f"All patterns must share one dimension, got {sorted(dimensions)}")

        self.patterns = patterns
        self.rows = rows
        self.cols = cols
        self.config = config

    @staticmethod
    def anchor_fill_order(rows: int, cols: int) -> list[tuple[int, int]]:
        diagonal = [(index, index) for index in range(min(rows, cols))]
        rest = [(row, col) for row in range(rows) for col in range(cols) if row != col]
        return diagonal + sorted(rest, key=lambda cell: (abs(cell[0] - cell[1]), cell[0], cell[1]))

    @staticmethod
    def value_key(pattern: Sequence) -> tuple:
        return pattern.values.shape, pattern.values.tobytes()

    def sample_distinct(self, count: int, taken: set[tuple]) -> list[Sequence]:
        sampled = []
        for pattern_index in np.random.default_rng(self.config.seed).permutation(len(self.patterns)):
            if len(sampled) == count:
                break

            key = self.value_key(self.patterns[pattern_index])
            if key in taken:
                continue

            taken.add(key)
            sampled.append(self.patterns[pattern_index])

        if len(sampled) < count:
            raise DataError(f"A {self.rows}x{self.cols} grid needs more distinct patterns than the {len(taken)} available")

        return sampled

    def random_sample(self) -> SomNetwork:
        units = self.sample_distinct(self.rows * self.cols, set())
        service_logger.info(f"Random sample initialization of a {self.rows}x{self.cols} network")
        return SomNetwork(self.rows, self.cols, [unit.values.copy() for unit in units], self.config)

    def anchor(self, anchors: list[int]) -> SomNetwork:
        if len(anchors) > self.rows * self.cols:
            raise DataError(f"Cannot place {len(anchors)} anchors in a {self.rows}x{self.cols} grid")

        taken = set()
        for anchor in anchors:
            if anchor < 0 or anchor >= len(self.patterns):
                raise DataError(f"Anchor {anchor} is not a pattern index, there are {len(self.patterns)} patterns")

            key = self.value_key(self.patterns[anchor])
            if key in taken:
                raise DataError(f"Anchor {anchor} duplicates the values of another anchor")
            taken.add(key)

        fill = self.sample_distinct(self.rows * self.cols - len(anchors), taken)
        cells = self.anchor_fill_order(self.rows, self.cols)
        units: list[np.ndarray | None] = [None] * (self.rows * self.cols)
        for (row, col), pattern in zip(cells, [self.patterns[anchor] for anchor in anchors] + fill):
            units[row * self.cols + col] = pattern.values.copy()

        service_logger.info(f"Anchor initialization of a {self.rows}x{self.cols} network with {len(anchors)} anchors")
        return SomNetwork(self.rows, self.cols, units, self.config)
