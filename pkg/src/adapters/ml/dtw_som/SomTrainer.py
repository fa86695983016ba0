import numpy as np
from tqdm import tqdm

from adapters.infrastructure.dtw.dtw_kernels import distances_to_units
from adapters.infrastructure.dtw.dynamic_time_warping import as_points, check_feasible, dtw, window_code
from configuration import NEIGHBORHOOD_CUTOFF, service_logger
from domain.AlignmentPath import AlignmentPath
from domain.Sequence import Sequence
from domain.SomNetwork import SomNetwork
from domain.TrainingTrace import TrainingTrace
from exceptions import DataError


class SomTrainer:
    """Sequential DTW-SOM training.

    Each pattern is matched against every unit with DTW, and every unit close enough to the winner on the grid
    is pulled toward the pattern points its own alignment matched to it. Unit lengths never change.
    """

    def __init__(self, network: SomNetwork, show_progress: bool = False):
        self.network = network
        self.show_progress = show_progress
        self.coordinates = network.grid_coordinates()

    def check_patterns(self, patterns: list[Sequence | np.ndarray]) -> list[np.ndarray]:
        if not patterns:
            raise DataError("No patterns to present to the network")

        points = [as_points(pattern) for pattern in patterns]
        dimensions = {pattern.shape[1] for pattern in points}
        if dimensions != {self.network.dimension}:
            raise DataError(
                f"Patterns of dimension {sorted(dimensions)} do not fit units of dimension {self.network.dimension}"
            )

        pattern_lengths = [pattern.shape[0] for pattern in points]
        units_lengths = self.network.lengths.tolist()
        for first_length, second_length in [
            (max(units_lengths), min(pattern_lengths)),
            (min(units_lengths), max(pattern_lengths)),
        ]:
            check_feasible(first_length, second_length, self.network.config.window)

        return points

    def distances(self, pattern: np.ndarray) -> np.ndarray:
        window = window_code(self.network.config.window)
        return distances_to_units(self.network.values, self.network.lengths, pattern, window)

    def bmu(self, pattern: Sequence | np.ndarray) -> tuple[int, float]:
        distances = self.distances(as_points(pattern))
        winner = int(np.argmin(distances))
        return winner, float(distances[winner])

    def bmu_assignments(self, patterns: list[Sequence | np.ndarray]) -> list[tuple[int, float]]:
        return [self.bmu(pattern) for pattern in self.check_patterns(patterns)]

    def quantization_error(self, patterns: list[Sequence | np.ndarray]) -> float:
        return float(np.mean([distance for _, distance in self.bmu_assignments(patterns)]))

    def neighborhood(self, winner: int, unit_index: int, radius: float) -> float:
        return float(self.neighborhoods(winner, radius)[unit_index])

    def neighborhoods(self, winner: int, radius: float) -> np.ndarray:
        squared_grid_distances = np.sum((self.coordinates - self.coordinates[winner]) ** 2, axis=1)
        return np.exp(-squared_grid_distances / (2 * radius * radius))

    @staticmethod
    def adapt_unit(unit: np.ndarray, pattern: np.ndarray, path: AlignmentPath, strength: float) -> np.ndarray:
        sums = np.zeros_like(unit)
        counts = np.zeros(unit.shape[0])
        np.add.at(sums, path.matches[:, 0], pattern[path.matches[:, 1]])
        np.add.at(counts, path.matches[:, 0], 1.0)
        return unit + strength * (sums / counts[:, None] - unit)

    def train_epoch(
        self, patterns: list[np.ndarray], learning_rate: float, radius: float, seed: int, epoch: int = 0
    ) -> float:
        bmu_distances = np.zeros(len(patterns))
        for pattern_index in np.random.default_rng([seed, epoch]).permutation(len(patterns)):
            pattern = patterns[pattern_index]
            winner, bmu_distances[pattern_index] = self.bmu(pattern)
            if learning_rate == 0:
                continue

            neighborhoods = self.neighborhoods(winner, radius)
            for unit_index in np.flatnonzero(neighborhoods > NEIGHBORHOOD_CUTOFF):
                unit = self.network.unit(unit_index)
                path = dtw(unit, pattern, self.network.config.window).path
                unit[:] = self.adapt_unit(unit, pattern, path, learning_rate * neighborhoods[unit_index])

        return float(bmu_distances.mean())

    def train(self, patterns: list[Sequence | np.ndarray]) -> TrainingTrace:
        points = self.check_patterns(patterns)
        config = self.network.config
        trace = TrainingTrace(initial_quantization_error=self.quantization_error(points))
        service_logger.info(f"Initial quantization error {trace.initial_quantization_error:.6f}")

        epochs = range(self.network.epoch, config.epochs)
        for epoch in tqdm(epochs, desc="Training", disable=not self.show_progress):
            learning_rate = config.learning_rate_at(epoch)
            radius = config.radius_at(epoch, self.network.rows, self.network.cols)
            quantization_error = self.train_epoch(points, learning_rate, radius, config.seed, epoch)
            trace.add_epoch(quantization_error, learning_rate, radius)
            self.network.epoch = epoch + 1
            service_logger.info(
                f"Epoch {epoch + 1}/{config.epochs}: quantization error {quantization_error:.6f}, "
                f"learning rate {learning_rate:.6f}, radius {radius:.4f}"
            )

        trace.final_quantization_error = self.quantization_error(points)
        service_logger.info(
            f"Final quantization error {trace.final_quantization_error:.6f}, "
            f"first epoch {trace.first_epoch_quantization_error}"
        )
        return trace
