from pathlib import Path

from configuration import service_logger
from domain.TrainingConfig import TrainingConfig
from exceptions import DataError
from ports.repositories.file_repository import FileRepository
from ports.services.som_service import SomService


class TrainNetworkUseCase:
    def __init__(self, som_service: SomService, file_repository: FileRepository):
        self.som_service = som_service
        self.file_repository = file_repository

    @staticmethod
    def trace_path(out: Path) -> Path:
        return Path(out).with_suffix(".trace.json")

    def execute(
        self,
        motifs_path: Path,
        rows: int,
        cols: int,
        config: TrainingConfig,
        anchors: list[int] | None,
        out: Path,
        show_progress: bool = False,
    ) -> tuple[Path, Path]:
        patterns = self.file_repository.load_motifs(motifs_path).motif_centers()
        if not patterns:
            raise DataError(f"{motifs_path} holds no motif centers to train on")

        service_logger.info(f"Training a {rows}x{cols} network on {len(patterns)} patterns for {config.epochs} epochs")
        network = self.som_service.initialize(patterns, rows, cols, config, anchors)
        trace = self.som_service.train(network, patterns, show_progress)

        model_path = self.file_repository.save_network(network, out)
        return model_path, self.file_repository.save_trace(trace, self.trace_path(out))
