import json
import tempfile
from pathlib import Path
from unittest import TestCase

import numpy as np

from configuration import REPORT_FILE_NAMES
from drivers.cli.cli_app import run


def write_ucr_file(path: Path, sequences_count: int = 12, length: int = 60, seed: int = 0) -> Path:
    rng = np.random.default_rng(seed)
    time = np.linspace(0, 4 * np.pi, length)
    rows = []
    for index in range(sequences_count):
        label = index % 2 + 1
        shape = np.sin(time) if label == 1 else np.sign(np.sin(time))
        values = shape + rng.normal(scale=0.1, size=length)
        rows.append("\t".join([str(label)] + [repr(float(value)) for value in values]))
    path.write_text("\n".join(rows) + "\n")
    return path


class TestEndToEnd(TestCase):
    def setUp(self):
        self.directory = tempfile.TemporaryDirectory()
        self.path = Path(self.directory.name)

    def tearDown(self):
        self.directory.cleanup()

    def synth(self, folder: str, *flags: str) -> Path:
        out = Path(self.path, folder, "motifs.json")
        self.assertEqual(0, run(["synth", "--count", "30", "--seed", "5", "--out", str(out), "--quiet", *flags]))
        return out

    def train(self, motifs: Path, folder: str, *flags: str) -> Path:
        out = Path(self.path, folder, "model.json")
        arguments = ["train", "--motifs", str(motifs), "--rows", "2", "--cols", "2", "--epochs", "3", "--seed", "2"]
        self.assertEqual(0, run([*arguments, "--out", str(out), "--quiet", *flags]))
        return out

    def report(self, model: Path, motifs: Path, folder: str) -> Path:
        out_dir = Path(self.path, folder, "report")
        self.assertEqual(0, run(["report", "--model", str(model), "--motifs", str(motifs), "--out-dir", str(out_dir)]))
        return out_dir

    def assert_same_files(self, first: Path, second: Path):
        self.assertEqual(first.read_bytes(), second.read_bytes(), f"{first.name} differs between runs")

    def test_synth_train_report(self):
        motifs = self.synth("run")
        model = self.train(motifs, "run", "--init", "anchor", "--anchor-count", "3")
        out_dir = self.report(model, motifs, "run")

        self.assertEqual(30, len(json.loads(motifs.read_text())["motifs"]))
        trace = json.loads(Path(model.parent, "model.trace.json").read_text())
        self.assertEqual(3, len(trace["quantization_errors"]))
        self.assertEqual(3, json.loads(model.read_text())["epoch"])
        for file_name in REPORT_FILE_NAMES.values():
            self.assertTrue(Path(out_dir, file_name).exists(), file_name)

        summary = json.loads(Path(out_dir, REPORT_FILE_NAMES["summary"]).read_text())
        self.assertEqual(30, summary["winners_total"])
        self.assertEqual(30, summary["patterns_count"])
        self.assertIsNotNone(summary["purity"])

        winners = np.loadtxt(Path(out_dir, REPORT_FILE_NAMES["winner_matrix_csv"]), delimiter=",")
        self.assertEqual((2, 2), winners.shape)
        self.assertEqual(30, int(winners.sum()))

    def test_reruns_are_byte_identical(self):
        outputs = []
        for folder, threads in [("first", "1"), ("second", "1"), ("third", "2")]:
            motifs = self.synth(folder, "--threads", threads)
            model = self.train(motifs, folder, "--threads", threads)
            out_dir = self.report(model, motifs, folder)
            outputs.append([motifs, model, Path(model.parent, "model.trace.json")] + sorted(out_dir.iterdir()))

        for first, second, third in zip(*outputs):
            self.assert_same_files(first, second)
            self.assert_same_files(first, third)

    def test_extract_then_train(self):
        ucr_file = write_ucr_file(Path(self.path, "Toy_TRAIN.tsv"))
        outputs = []
        for folder in ["first", "second"]:
            motifs = Path(self.path, folder, "motifs.json")
            arguments = ["extract", "--input", str(ucr_file), "--window", "20", "--exclude", "3", "--sample", "10"]
            self.assertEqual(0, run([*arguments, "--seed", "4", "--out", str(motifs)]))
            outputs.append(motifs)

        self.assert_same_files(*outputs)
        document = json.loads(outputs[0].read_text())
        self.assertEqual(20, document["window"])
        self.assertGreater(len(document["motifs"]), 0)
        for motif in document["motifs"]:
            self.assertEqual(20, len(motif["center"]))

        model = self.train(outputs[0], "first", "--rows", "1", "--cols", "1", "--window", "5")
        self.assertEqual(5, json.loads(model.read_text())["config"]["window"])

    def test_no_motifs_requested(self):
        ucr_file = write_ucr_file(Path(self.path, "Toy_TRAIN.tsv"))
        motifs = Path(self.path, "motifs.json")

        arguments = ["extract", "--input", str(ucr_file), "--window", "20", "--max-motifs", "0"]
        self.assertEqual(0, run([*arguments, "--out", str(motifs)]))

        self.assertEqual([], json.loads(motifs.read_text())["motifs"])

    def test_usage_errors(self):
        motifs = self.synth("run")
        model = Path(self.path, "model.json")
        usage_errors = [
            ["train", "--motifs", str(motifs), "--out", str(model), "--rows", "three"],
            ["train", "--motifs", str(motifs), "--out", str(model), "--anchors", "0,1"],
            ["train", "--motifs", str(motifs), "--out", str(model), "--init", "anchor"],
            ["train", "--motifs", str(motifs), "--out", str(model), "--learning-rate", "1.5"],
            ["train", "--motifs", str(motifs), "--out", str(model), "--radius", "9"],
            ["extract", "--input", str(motifs), "--window", "0", "--out", str(model)],
            ["cluster", "--out", str(model)],
            ["synth"],
        ]

        for arguments in usage_errors:
            self.assertEqual(1, run(arguments), arguments)

        self.assertFalse(model.exists())

    def test_data_errors(self):
        motifs = self.synth("run")
        model = Path(self.path, "model.json")
        bad_ucr = Path(self.path, "bad.tsv")
        bad_ucr.write_text("1\t1\t2\t3\n2\t1\tx\t3\n")
        out_dir = Path(self.path, "report")
        data_errors = [
            ["train", "--motifs", str(Path(self.path, "missing.json")), "--out", str(model)],
            ["train", "--motifs", str(motifs), "--out", str(model), "--init", "anchor", "--anchors", "0,99"],
            ["extract", "--input", str(bad_ucr), "--window", "1", "--out", str(model)],
            ["extract", "--input", str(write_ucr_file(Path(self.path, "t.tsv"))), "--window", "400", "--out", str(model)],
            ["report", "--model", str(motifs), "--motifs", str(motifs), "--out-dir", str(out_dir)],
        ]

        for arguments in data_errors:
            self.assertEqual(2, run(arguments), arguments)

        self.assertFalse(model.exists())
        self.assertFalse(out_dir.exists())

    def test_report_with_mismatched_dimensions_writes_nothing(self):
        motifs = self.synth("run")
        model = self.train(motifs, "run")
        other_motifs = Path(self.path, "two_dimensions.json")
        other_motifs.write_text(json.dumps({"motifs": [{"rank": 1, "center": [[0.0, 1.0], [2.0, 3.0]]}]}))
        out_dir = Path(self.path, "report")

        self.assertEqual(2, run(["report", "--model", str(model), "--motifs", str(other_motifs), "--out-dir", str(out_dir)]))

        self.assertFalse(out_dir.exists())
