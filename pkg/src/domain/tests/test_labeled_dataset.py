from unittest import TestCase

from domain.LabeledDataset import LabeledDataset
from domain.Sequence import Sequence
from exceptions import DataError


def toy_dataset() -> LabeledDataset:
    sequences = [Sequence([float(index)] * 3, id=str(index)) for index in range(6)]
    return LabeledDataset(sequences, ["1", "2", "3", "1", "2", "3"], name="Toy")


class TestLabeledDataset(TestCase):
    def test_label_count_must_match(self):
        with self.assertRaises(ValueError):
            LabeledDataset([Sequence([1.0])], ["1", "2"])

    def test_normalize_label(self):
        self.assertEqual("1", LabeledDataset.normalize_label("1.0000000e+00"))
        self.assertEqual("-1", LabeledDataset.normalize_label(" -1 "))
        self.assertEqual("0.5", LabeledDataset.normalize_label("0.5"))
        self.assertEqual("walk", LabeledDataset.normalize_label("walk"))

    def test_prepare_keeps_order(self):
        series = toy_dataset().prepare()

        self.assertEqual(18, len(series))
        self.assertEqual([0, 3, 6, 9, 12, 15], series.boundaries)
        self.assertEqual([0.0, 1.0, 2.0, 3.0, 4.0, 5.0], series.univariate()[::3].tolist())

    def test_prepare_excludes_labels(self):
        series = toy_dataset().prepare(exclude_labels={"3.0"})

        self.assertEqual([0.0, 1.0, 3.0, 4.0], series.univariate()[::3].tolist())

    def test_prepare_samples_without_replacement(self):
        dataset = toy_dataset()

        first = dataset.prepare(sample_size=4, seed=11)
        second = dataset.prepare(sample_size=4, seed=11)

        starts = first.univariate()[::3].tolist()
        self.assertEqual(starts, second.univariate()[::3].tolist())
        self.assertEqual(sorted(set(starts)), starts)
        self.assertEqual(4, len(starts))

    def test_prepare_errors(self):
        dataset = toy_dataset()

        with self.assertRaises(DataError):
            dataset.prepare(exclude_labels={"1", "2", "3"})

        with self.assertRaises(DataError):
            dataset.prepare(sample_size=7)

        with self.assertRaises(DataError):
            dataset.prepare(exclude_labels={"1"}, sample_size=5)
