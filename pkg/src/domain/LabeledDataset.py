import numpy as np

from domain.LongSeries import LongSeries
from domain.Sequence import Sequence
from exceptions import DataError


class LabeledDataset:
    def __init__(self, sequences: list[Sequence], labels: list[str], name: str = ""):
        if len(sequences) != len(labels):
            raise ValueError(f"Got {len(sequences)} sequences but {len(labels)} labels")
        self.sequences: list[Sequence] = sequences
        self.labels: list[str] = labels
        self.name: str = name

    def __len__(self):
        return len(self.sequences)

    @staticmethod
    def normalize_label(label: str) -> str:
        label = str(label).strip()
        try:
            value = float(label)
        except ValueError:
            return label
        return str(int(value)) if value.is_integer() else label

    def prepare(self, exclude_labels: set[str] | None = None, sample_size: int | None = None, seed: int = 0) -> LongSeries:
        exclude_labels = {self.normalize_label(label) for label in exclude_labels or set()}
        kept = [sequence for sequence, label in zip(self.sequences, self.labels) if label not in exclude_labels]
        if not kept:
            name = self.name or "the dataset"
            raise DataError(f"No sequences of {name} remain after excluding labels {sorted(exclude_labels)}")

        if sample_size is not None:
            if sample_size < 1 or sample_size > len(kept):
                raise DataError(f"Cannot sample {sample_size} sequences out of {len(kept)}")
            chosen = np.random.default_rng(seed).choice(len(kept), size=sample_size, replace=False)
            kept = [kept[index] for index in sorted(chosen.tolist())]

        return LongSeries.concatenate(kept)
