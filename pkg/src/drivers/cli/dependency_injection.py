from adapters.cli.cli_controllers import CliControllers
from adapters.infrastructure.motif_discovery_service_adapter import MotifDiscoveryServiceAdapter
from adapters.infrastructure.synthetic_motifs_adapter import SyntheticMotifsAdapter
from adapters.infrastructure.visualization_service_adapter import VisualizationServiceAdapter
from adapters.ml.dtw_som_adapter import DtwSomAdapter
from adapters.storage.file_system_repository import FileSystemRepository
from use_cases.motif_extraction.extract_motifs_use_case import ExtractMotifsUseCase
from use_cases.report.create_report_use_case import CreateReportUseCase
from use_cases.synthetic_motifs.generate_synthetic_motifs_use_case import GenerateSyntheticMotifsUseCase
from use_cases.training.train_network_use_case import TrainNetworkUseCase


def setup_dependencies() -> CliControllers:
    file_repository = FileSystemRepository()

    som_service = DtwSomAdapter()
    motif_discovery_service = MotifDiscoveryServiceAdapter()
    synthetic_motifs_service = SyntheticMotifsAdapter()
    visualization_service = VisualizationServiceAdapter()

    generate_synthetic_motifs_use_case = GenerateSyntheticMotifsUseCase(
        synthetic_motifs_service=synthetic_motifs_service, file_repository=file_repository
    )

    extract_motifs_use_case = ExtractMotifsUseCase(
        motif_discovery_service=motif_discovery_service, file_repository=file_repository
    )

    train_network_use_case = TrainNetworkUseCase(som_service=som_service, file_repository=file_repository)

    create_report_use_case = CreateReportUseCase(
        som_service=som_service, visualization_service=visualization_service, file_repository=file_repository
    )

    return CliControllers(
        generate_synthetic_motifs_use_case=generate_synthetic_motifs_use_case,
        extract_motifs_use_case=extract_motifs_use_case,
        train_network_use_case=train_network_use_case,
        create_report_use_case=create_report_use_case,
    )
