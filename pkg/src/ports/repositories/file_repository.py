from abc import ABC, abstractmethod
from pathlib import Path

import numpy as np
from pydantic import BaseModel

from domain.LabeledDataset import LabeledDataset
from domain.MotifSet import MotifSet
from domain.SomNetwork import SomNetwork
from domain.TrainingTrace import TrainingTrace


class FileRepository(ABC):
    @abstractmethod
    def load_ucr(self, path: Path) -> LabeledDataset:
        pass

    @abstractmethod
    def save_ucr(self, dataset: LabeledDataset, path: Path) -> Path:
        pass

    @abstractmethod
    def load_motifs(self, path: Path) -> MotifSet:
        pass

    @abstractmethod
    def save_motifs(self, motif_set: MotifSet, path: Path) -> Path:
        pass

    @abstractmethod
    def load_network(self, path: Path) -> SomNetwork:
        pass

    @abstractmethod
    def save_network(self, network: SomNetwork, path: Path) -> Path:
        pass

    @abstractmethod
    def save_trace(self, trace: TrainingTrace, path: Path) -> Path:
        pass

    @abstractmethod
    def save_summary(self, summary: BaseModel, path: Path) -> Path:
        pass

    @abstractmethod
    def load_matrix_csv(self, path: Path) -> np.ndarray:
        pass

    @abstractmethod
    def save_matrix_csv(self, values: np.ndarray, path: Path) -> Path:
        pass
