from pathlib import Path
from unittest import TestCase

from pydantic import ValidationError

from domain.RunConfig import RunConfig
from domain.TrainingConfig import TrainingConfig
from domain.TrainingTrace import TrainingTrace


class TestTrainingConfig(TestCase):
    def test_defaults(self):
        config = TrainingConfig()

        self.assertEqual(30, config.epochs)
        self.assertEqual(0.1, config.learning_rate)
        self.assertEqual(1.5, config.initial_radius(3, 3))
        self.assertEqual(2.0, config.initial_radius(2, 4))

    def test_schedules(self):
        config = TrainingConfig(epochs=4, learning_rate=0.5, radius=2.0)

        self.assertEqual([0.5, 0.375, 0.25, 0.125], [config.learning_rate_at(epoch) for epoch in range(4)])
        self.assertEqual([2.0, 1.5, 1.0, 0.5], [config.radius_at(epoch, 3, 3) for epoch in range(4)])

    def test_radius_floor(self):
        config = TrainingConfig(epochs=100, radius=1.0)

        self.assertEqual(0.1, config.radius_at(99, 2, 2))

    def test_zero_learning_rate_is_allowed(self):
        self.assertEqual(0.0, TrainingConfig(learning_rate=0.0).learning_rate_at(0))

    def test_invalid_values(self):
        for values in [{"epochs": 0}, {"learning_rate": 1.0}, {"learning_rate": -0.1}, {"radius": 0}, {"window": -1}]:
            with self.assertRaises(ValidationError):
                TrainingConfig(**values)

    def test_radius_larger_than_grid(self):
        with self.assertRaises(ValueError):
            TrainingConfig(radius=5.0).initial_radius(3, 3)


class TestRunConfig(TestCase):
    def test_train_defaults(self):
        run_config = RunConfig(command="train", motifs=Path("motifs.json"), out=Path("model.json"))

        self.assertEqual((3, 3, 30), (run_config.rows, run_config.cols, run_config.epochs))
        self.assertEqual("random", run_config.init)
        self.assertEqual(TrainingConfig(), run_config.training_config())

    def test_missing_flags(self):
        with self.assertRaises(ValidationError) as context:
            RunConfig(command="extract", out=Path("motifs.json"))

        self.assertIn("--input", str(context.exception))

    def test_extract_window(self):
        with self.assertRaises(ValidationError):
            RunConfig(command="extract", input=Path("a.tsv"), window=0, out=Path("motifs.json"))

    def test_anchor_flags(self):
        base = {"command": "train", "motifs": Path("motifs.json"), "out": Path("model.json")}

        self.assertEqual([0, 1, 2], RunConfig(**base, init="anchor", anchor_count=3).anchor_indices())
        self.assertEqual([4, 1], RunConfig(**base, init="anchor", anchors=[4, 1]).anchor_indices())

        invalid = [
            {"anchors": [0, 1]},
            {"init": "anchor"},
            {"init": "anchor", "anchors": [0], "anchor_count": 1},
            {"init": "anchor", "anchors": [-1]},
            {"init": "anchor", "anchor_count": 10},
            {"radius": 4.0},
        ]
        for values in invalid:
            with self.assertRaises(ValidationError):
                RunConfig(**base, **values)


class TestTrainingTrace(TestCase):
    def test_first_epoch_quantization_error(self):
        trace = TrainingTrace(initial_quantization_error=1.3)
        self.assertIsNone(trace.first_epoch_quantization_error)

        trace.add_epoch(3.2, 0.1, 1.5)
        trace.add_epoch(2.0, 0.09, 1.4)

        self.assertEqual(3.2, trace.first_epoch_quantization_error)
        self.assertEqual(2, trace.completed_epochs)
