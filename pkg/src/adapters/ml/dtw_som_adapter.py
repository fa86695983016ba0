from adapters.ml.dtw_som.NetworkInitializer import NetworkInitializer
from adapters.ml.dtw_som.NetworkMaps import NetworkMaps
from adapters.ml.dtw_som.SomTrainer import SomTrainer
from domain.Sequence import Sequence
from domain.SomNetwork import SomNetwork
from domain.TrainingConfig import TrainingConfig
from domain.TrainingTrace import TrainingTrace
from domain.UMatrix import UMatrix
from domain.WinnerMatrix import WinnerMatrix
from ports.services.som_service import SomService


class DtwSomAdapter(SomService):
    def initialize(
        self, patterns: list[Sequence], rows: int, cols: int, config: TrainingConfig, anchors: list[int] | None = None
    ) -> SomNetwork:
        initializer = NetworkInitializer(patterns, rows, cols, config)
        if anchors is None:
            return initializer.random_sample()
        return initializer.anchor(anchors)

    def train(self, network: SomNetwork, patterns: list[Sequence], show_progress: bool = False) -> TrainingTrace:
        return SomTrainer(network, show_progress).train(patterns)

    def quantization_error(self, network: SomNetwork, patterns: list[Sequence]) -> float:
        return SomTrainer(network).quantization_error(patterns)

    def u_matrix(self, network: SomNetwork) -> UMatrix:
        return NetworkMaps(network).u_matrix()

    def winner_matrix(self, network: SomNetwork, patterns: list[Sequence]) -> WinnerMatrix:
        return NetworkMaps(network).winner_matrix(patterns)

    def purity(self, network: SomNetwork, patterns: list[Sequence], labels: list[str]) -> float:
        return NetworkMaps(network).purity(patterns, labels)
