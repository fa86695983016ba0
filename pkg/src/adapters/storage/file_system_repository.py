from pathlib import Path

import numpy as np
import pandas as pd
from pydantic import BaseModel, ValidationError

from configuration import service_logger
from domain.LabeledDataset import LabeledDataset
from domain.MotifSet import MotifSet
from domain.NetworkDocument import NetworkDocument
from domain.Sequence import Sequence
from domain.SomNetwork import SomNetwork
from domain.TrainingTrace import TrainingTrace
from exceptions import DataError
from ports.repositories.file_repository import FileRepository


class FileSystemRepository(FileRepository):
    @staticmethod
    def read_text(path: Path) -> str:
        path = Path(path)
        if not path.exists():
            raise FileNotFoundError(f"File {path} not found")
        return path.read_text()

    @staticmethod
    def write_text(content: str, path: Path) -> Path:
        path = Path(path)
        try:
            path.parent.mkdir(parents=True, exist_ok=True)
            path.write_text(content)
        except OSError as error:
            raise DataError(f"Cannot write {path}: {error.strerror}")
        service_logger.info(f"Saved {path}")
        return path

    def load_ucr(self, path: Path) -> LabeledDataset:
        path = Path(path)
        if not path.exists():
            raise FileNotFoundError(f"UCR file {path} not found")

        try:
            frame = pd.read_csv(path, header=None, sep=r"[\t,]", engine="python", dtype=str, skip_blank_lines=True)
        except pd.errors.EmptyDataError:
            raise DataError(f"UCR file {path} is empty")
        except pd.errors.ParserError as error:
            raise DataError(f"Ragged row in {path}: {error}")

        frame = frame.dropna(axis=1, how="all")
        if frame.shape[1] < 2:
            raise DataError(f"Row 1 of {path} has a class token but no values")

        values = frame.iloc[:, 1:]
        sequences = []
        for row_number, row in enumerate(values.itertuples(index=False), 1):
            if any(pd.isna(token) for token in row):
                raise DataError(f"Ragged row {row_number} in {path}")

            try:
                points = np.array([token.strip() for token in row], dtype=np.float64)
            except ValueError:
                raise DataError(f"Non-numeric value in row {row_number} of {path}")

            try:
                sequences.append(Sequence(points, id=str(row_number - 1)))
            except ValueError as error:
                raise DataError(f"Row {row_number} of {path}: {error}")

        labels_column = frame.iloc[:, 0]
        if labels_column.isna().any():
            raise DataError(f"Missing class token in row {int(labels_column.isna().to_numpy().argmax()) + 1} of {path}")

        labels = [LabeledDataset.normalize_label(label) for label in labels_column.tolist()]
        service_logger.info(f"Loaded {len(sequences)} sequences of length {values.shape[1]} from {path}")
        return LabeledDataset(sequences, labels, name=path.stem)

    def save_ucr(self, dataset: LabeledDataset, path: Path) -> Path:
        lengths = {sequence.length for sequence in dataset.sequences}
        if len(lengths) > 1:
            raise DataError(f"UCR files hold sequences of one length, got {sorted(lengths)}")

        frame = pd.DataFrame([sequence.values[:, 0] for sequence in dataset.sequences])
        frame.insert(0, "label", dataset.labels)
        return self.write_text(frame.to_csv(sep="\t", header=False, index=False), path)

    def load_motifs(self, path: Path) -> MotifSet:
        try:
            motif_set = MotifSet.model_validate_json(self.read_text(path))
            motif_set.motif_centers()
        except ValidationError as error:
            raise DataError(f"{path} is not a motif document: {error.error_count()} validation errors")
        except ValueError as error:
            raise DataError(f"{path} holds an invalid motif center: {error}")
        return motif_set

    def save_motifs(self, motif_set: MotifSet, path: Path) -> Path:
        return self.write_text(motif_set.model_dump_json(indent=2), path)

    def load_network(self, path: Path) -> SomNetwork:
        try:
            return SomNetwork.from_document(NetworkDocument.model_validate_json(self.read_text(path)))
        except ValidationError as error:
            raise DataError(f"{path} is not a network document: {error.error_count()} validation errors")
        except ValueError as error:
            raise DataError(f"{path} holds an invalid network: {error}")

    def save_network(self, network: SomNetwork, path: Path) -> Path:
        return self.write_text(network.to_document().model_dump_json(indent=2), path)

    def save_trace(self, trace: TrainingTrace, path: Path) -> Path:
        return self.write_text(trace.model_dump_json(indent=2), path)

    def save_summary(self, summary: BaseModel, path: Path) -> Path:
        return self.write_text(summary.model_dump_json(indent=2), path)

    def load_matrix_csv(self, path: Path) -> np.ndarray:
        path = Path(path)
        if not path.exists():
            raise FileNotFoundError(f"File {path} not found")
        return pd.read_csv(path, header=None, float_precision="round_trip").to_numpy()

    def save_matrix_csv(self, values: np.ndarray, path: Path) -> Path:
        return self.write_text(pd.DataFrame(values).to_csv(header=False, index=False), path)
