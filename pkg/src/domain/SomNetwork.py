import numpy as np

from domain.NetworkDocument import NetworkDocument
from domain.TrainingConfig import TrainingConfig


class SomNetwork:
    """Rectangular grid of variable-length units, stored row-major in one padded buffer.

    ``values[i, :lengths[i]]`` is unit ``i``; the padding is never read. Units are edited in place
    through the views returned by ``unit``.
    """

    def __init__(self, rows: int, cols: int, units: list[np.ndarray], config: TrainingConfig, epoch: int = 0):
        if rows < 1 or cols < 1:
            raise ValueError(f"Grid shape must be positive, got {rows}x{cols}")

        if len(units) != rows * cols:
            raise ValueError(f"A {rows}x{cols} grid needs {rows * cols} units, got {len(units)}")

        units = [np.asarray(unit, dtype=np.float64).reshape(len(unit), -1) for unit in units]
        dimensions = {unit.shape[1] for unit in units}
        if len(dimensions) != 1:
            raise ValueError(f"All units must share one dimension, got {sorted(dimensions)}")

        self.rows: int = rows
        self.cols: int = cols
        self.config: TrainingConfig = config
        self.epoch: int = epoch
        self.initial_radius: float = config.initial_radius(rows, cols)
        self.lengths: np.ndarray = np.array([unit.shape[0] for unit in units], dtype=np.int64)
        self.values: np.ndarray = np.zeros((len(units), int(self.lengths.max()), dimensions.pop()))
        for index, unit in enumerate(units):
            self.values[index, : unit.shape[0]] = unit

    @property
    def units_count(self) -> int:
        return self.rows * self.cols

    @property
    def dimension(self) -> int:
        return self.values.shape[2]

    def unit(self, index: int) -> np.ndarray:
        return self.values[index, : self.lengths[index]]

    def units(self) -> list[np.ndarray]:
        return [self.unit(index) for index in range(self.units_count)]

    def position(self, index: int) -> tuple[int, int]:
        return divmod(index, self.cols)

    def index(self, row: int, col: int) -> int:
        return row * self.cols + col

    def grid_coordinates(self) -> np.ndarray:
        return np.array([self.position(index) for index in range(self.units_count)], dtype=np.float64)

    def to_document(self) -> NetworkDocument:
        return NetworkDocument(
            rows=self.rows,
            cols=self.cols,
            epoch=self.epoch,
            config=self.config,
            units=[unit.tolist() for unit in self.units()],
        )

    @staticmethod
    def from_document(document: NetworkDocument):
        units = [np.array(unit, dtype=np.float64) for unit in document.units]
        return SomNetwork(document.rows, document.cols, units, document.config, document.epoch)
