from abc import ABC, abstractmethod

from domain.Sequence import Sequence
from domain.SomNetwork import SomNetwork
from domain.TrainingConfig import TrainingConfig
from domain.TrainingTrace import TrainingTrace
from domain.UMatrix import UMatrix
from domain.WinnerMatrix import WinnerMatrix


class SomService(ABC):
    @abstractmethod
    def initialize(
        self, patterns: list[Sequence], rows: int, cols: int, config: TrainingConfig, anchors: list[int] | None = None
    ) -> SomNetwork:
        pass

    @abstractmethod
    def train(self, network: SomNetwork, patterns: list[Sequence], show_progress: bool = False) -> TrainingTrace:
        pass

    @abstractmethod
    def quantization_error(self, network: SomNetwork, patterns: list[Sequence]) -> float:
        pass

    @abstractmethod
    def u_matrix(self, network: SomNetwork) -> UMatrix:
        pass

    @abstractmethod
    def winner_matrix(self, network: SomNetwork, patterns: list[Sequence]) -> WinnerMatrix:
        pass

    @abstractmethod
    def purity(self, network: SomNetwork, patterns: list[Sequence], labels: list[str]) -> float:
        pass
