from collections import Counter

import numpy as np

from adapters.infrastructure.dtw.dynamic_time_warping import dtw_distance
from adapters.ml.dtw_som.SomTrainer import SomTrainer
from domain.Sequence import Sequence
from domain.SomNetwork import SomNetwork
from domain.UMatrix import UMatrix
from domain.WinnerMatrix import WinnerMatrix


class NetworkMaps:
    def __init__(self, network: SomNetwork):
        self.network = network
        self.trainer = SomTrainer(network)

    def grid_neighbors(self, index: int) -> list[int]:
        row, col = self.network.position(index)
        cells = [(row - 1, col), (row + 1, col), (row, col - 1), (row, col + 1)]
        return [
            self.network.index(neighbor_row, neighbor_col)
            for neighbor_row, neighbor_col in cells
            if 0 <= neighbor_row < self.network.rows and 0 <= neighbor_col < self.network.cols
        ]

    def u_matrix(self) -> UMatrix:
        pair_distances: dict[tuple[int, int], float] = {}
        values = np.zeros((self.network.rows, self.network.cols))
        for index in range(self.network.units_count):
            neighbors = self.grid_neighbors(index)
            if not neighbors:
                continue

            distances = []
            for neighbor in neighbors:
                pair = (min(index, neighbor), max(index, neighbor))
                if pair not in pair_distances:
                    pair_distances[pair] = dtw_distance(
                        self.network.unit(pair[0]), self.network.unit(pair[1]), self.network.config.window
                    )
                distances.append(pair_distances[pair])

            values[self.network.position(index)] = np.mean(distances)

        return UMatrix(values)

    def winner_matrix(self, patterns: list[Sequence]) -> WinnerMatrix:
        values = np.zeros((self.network.rows, self.network.cols), dtype=np.int64)
        for winner, _ in self.trainer.bmu_assignments(patterns):
            values[self.network.position(winner)] += 1
        return WinnerMatrix(values)

    def unit_majority_labels(self, patterns: list[Sequence], labels: list[str]) -> list[str | None]:
        winners_labels = [Counter() for _ in range(self.network.units_count)]
        for (winner, _), label in zip(self.trainer.bmu_assignments(patterns), labels, strict=True):
            winners_labels[winner][label] += 1

        return [
            min(counts, key=lambda label: (-counts[label], label)) if counts else None for counts in winners_labels
        ]

    def purity(self, patterns: list[Sequence], labels: list[str]) -> float:
        majority_labels = self.unit_majority_labels(patterns, labels)
        assignments = self.trainer.bmu_assignments(patterns)
        matches = [majority_labels[winner] == label for (winner, _), label in zip(assignments, labels)]
        return float(np.mean(matches))
