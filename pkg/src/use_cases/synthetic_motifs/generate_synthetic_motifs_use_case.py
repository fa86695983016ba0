from pathlib import Path

from configuration import service_logger
from ports.repositories.file_repository import FileRepository
from ports.services.synthetic_motifs_service import SyntheticMotifsService


class GenerateSyntheticMotifsUseCase:
    def __init__(self, synthetic_motifs_service: SyntheticMotifsService, file_repository: FileRepository):
        self.synthetic_motifs_service = synthetic_motifs_service
        self.file_repository = file_repository

    def execute(self, count: int, seed: int, out: Path) -> Path:
        service_logger.info(f"Generating {count} synthetic motif centers")
        motif_set = self.synthetic_motifs_service.generate_motif_set(count, seed)
        return self.file_repository.save_motifs(motif_set, out)
