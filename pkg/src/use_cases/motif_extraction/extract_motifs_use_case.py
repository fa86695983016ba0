from pathlib import Path

from configuration import service_logger
from ports.repositories.file_repository import FileRepository
from ports.services.motif_discovery_service import MotifDiscoveryService


class ExtractMotifsUseCase:
    def __init__(self, motif_discovery_service: MotifDiscoveryService, file_repository: FileRepository):
        self.motif_discovery_service = motif_discovery_service
        self.file_repository = file_repository

    def execute(
        self,
        input_path: Path,
        window: int,
        max_motifs: int,
        exclude_labels: list[str],
        sample_size: int | None,
        seed: int,
        out: Path,
    ) -> Path:
        dataset = self.file_repository.load_ucr(input_path)
        series = dataset.prepare(set(exclude_labels), sample_size, seed)
        service_logger.info(f"Searching motifs of length {window} in {len(series)} points of {dataset.name}")

        motif_set = self.motif_discovery_service.extract_motifs(series, window, max_motifs)
        return self.file_repository.save_motifs(motif_set, out)
