from unittest import TestCase

import numpy as np

from adapters.ml.dtw_som.NetworkInitializer import NetworkInitializer
from domain.Sequence import Sequence
from domain.TrainingConfig import TrainingConfig
from exceptions import DataError


def distinct_patterns(count: int, seed: int = 0) -> list[Sequence]:
    rng = np.random.default_rng(seed)
    return [Sequence(rng.normal(size=int(rng.integers(4, 9))), id=str(index)) for index in range(count)]


class TestNetworkInitializer(TestCase):
    def test_random_sample_uses_every_pattern_once(self):
        patterns = distinct_patterns(9)

        network = NetworkInitializer(patterns, 3, 3, TrainingConfig(seed=4)).random_sample()

        used = sorted(
            next(index for index, pattern in enumerate(patterns) if np.array_equal(pattern.values, unit))
            for unit in network.units()
        )
        self.assertEqual(list(range(9)), used)

    def test_random_sample_is_deterministic(self):
        patterns = distinct_patterns(180)

        first = NetworkInitializer(patterns, 3, 3, TrainingConfig(seed=7)).random_sample()
        second = NetworkInitializer(patterns, 3, 3, TrainingConfig(seed=7)).random_sample()

        self.assertTrue(np.array_equal(first.values, second.values))
        self.assertTrue(np.array_equal(first.lengths, second.lengths))

    def test_random_sample_skips_duplicates(self):
        patterns = distinct_patterns(5) * 4

        network = NetworkInitializer(patterns, 2, 2, TrainingConfig()).random_sample()

        keys = {unit.tobytes() for unit in network.units()}
        self.assertEqual(4, len(keys))

    def test_too_few_distinct_patterns(self):
        patterns = distinct_patterns(3) * 5

        with self.assertRaises(DataError):
            NetworkInitializer(patterns, 2, 2, TrainingConfig()).random_sample()

    def test_anchor_fill_order(self):
        order = NetworkInitializer.anchor_fill_order(3, 3)

        self.assertEqual([(0, 0), (1, 1), (2, 2), (0, 1)], order[:4])
        self.assertEqual(9, len(set(order)))

    def test_three_anchors_on_diagonal(self):
        patterns = distinct_patterns(20)

        network = NetworkInitializer(patterns, 3, 3, TrainingConfig()).anchor([5, 2, 11])

        self.assertTrue(np.array_equal(patterns[5].values, network.unit(network.index(0, 0))))
        self.assertTrue(np.array_equal(patterns[2].values, network.unit(network.index(1, 1))))
        self.assertTrue(np.array_equal(patterns[11].values, network.unit(network.index(2, 2))))
        self.assertEqual(9, len({unit.tobytes() for unit in network.units()}))

    def test_four_anchors(self):
        patterns = distinct_patterns(20)

        network = NetworkInitializer(patterns, 3, 3, TrainingConfig()).anchor([0, 1, 2, 3])

        self.assertTrue(np.array_equal(patterns[3].values, network.unit(network.index(0, 1))))

    def test_nine_anchors(self):
        patterns = distinct_patterns(9)

        network = NetworkInitializer(patterns, 3, 3, TrainingConfig()).anchor(list(range(9)))

        for cell, anchor in zip(NetworkInitializer.anchor_fill_order(3, 3), range(9)):
            self.assertTrue(np.array_equal(patterns[anchor].values, network.unit(network.index(*cell))))

    def test_rectangular_grid_diagonal(self):
        order = NetworkInitializer.anchor_fill_order(2, 4)

        self.assertEqual([(0, 0), (1, 1), (0, 1), (1, 0), (1, 2), (0, 2), (1, 3), (0, 3)], order)

    def test_anchor_errors(self):
        patterns = distinct_patterns(20)
        initializer = NetworkInitializer(patterns, 2, 2, TrainingConfig())

        with self.assertRaises(DataError):
            initializer.anchor([0, 1, 2, 3, 4])

        with self.assertRaises(DataError):
            initializer.anchor([0, 25])

        with self.assertRaises(DataError):
            NetworkInitializer(patterns + [patterns[0]], 2, 2, TrainingConfig()).anchor([0, 20])

    def test_mixed_dimensions(self):
        with self.assertRaises(DataError):
            NetworkInitializer([Sequence([1, 2]), Sequence([[1, 2], [3, 4]])], 1, 1, TrainingConfig())
