from pathlib import Path

from configuration import REPORT_FILE_NAMES, service_logger
from domain.ReportSummary import ReportSummary
from exceptions import DataError
from ports.repositories.file_repository import FileRepository
from ports.services.som_service import SomService
from ports.services.visualization_service import VisualizationService


class CreateReportUseCase:
    def __init__(
        self, som_service: SomService, visualization_service: VisualizationService, file_repository: FileRepository
    ):
        self.som_service = som_service
        self.visualization_service = visualization_service
        self.file_repository = file_repository

    def execute(self, model_path: Path, motifs_path: Path, out_dir: Path) -> list[Path]:
        network = self.file_repository.load_network(model_path)
        motif_set = self.file_repository.load_motifs(motifs_path)
        patterns = motif_set.motif_centers()
        if not patterns:
            raise DataError(f"{motifs_path} holds no motif centers to report on")

        u_matrix = self.som_service.u_matrix(network)
        winner_matrix = self.som_service.winner_matrix(network, patterns)
        labels = motif_set.labels()
        summary = ReportSummary(
            rows=network.rows,
            cols=network.cols,
            epoch=network.epoch,
            patterns_count=len(patterns),
            quantization_error=self.som_service.quantization_error(network, patterns),
            winners_total=winner_matrix.total,
            purity=self.som_service.purity(network, patterns, labels) if labels else None,
        )
        service_logger.info(f"Report of a {network.rows}x{network.cols} network over {len(patterns)} patterns")

        paths = {name: Path(out_dir, file_name) for name, file_name in REPORT_FILE_NAMES.items()}
        return [
            self.visualization_service.render_u_matrix(u_matrix, paths["u_matrix_svg"]),
            self.visualization_service.render_winner_matrix(winner_matrix, paths["winner_matrix_svg"]),
            self.visualization_service.render_units(network, paths["units_svg"]),
            self.visualization_service.render_motifs(motif_set, paths["motifs_svg"]),
            self.file_repository.save_matrix_csv(u_matrix.values, paths["u_matrix_csv"]),
            self.file_repository.save_matrix_csv(winner_matrix.values, paths["winner_matrix_csv"]),
            self.file_repository.save_summary(summary, paths["summary"]),
        ]
