from catch_exceptions import catch_exceptions
from configuration import service_logger
from domain.RunConfig import RunConfig
from use_cases.motif_extraction.extract_motifs_use_case import ExtractMotifsUseCase
from use_cases.report.create_report_use_case import CreateReportUseCase
from use_cases.synthetic_motifs.generate_synthetic_motifs_use_case import GenerateSyntheticMotifsUseCase
from use_cases.training.train_network_use_case import TrainNetworkUseCase


class CliControllers:
    def __init__(
        self,
        generate_synthetic_motifs_use_case: GenerateSyntheticMotifsUseCase,
        extract_motifs_use_case: ExtractMotifsUseCase,
        train_network_use_case: TrainNetworkUseCase,
        create_report_use_case: CreateReportUseCase,
    ):
        self.generate_synthetic_motifs_use_case = generate_synthetic_motifs_use_case
        self.extract_motifs_use_case = extract_motifs_use_case
        self.train_network_use_case = train_network_use_case
        self.create_report_use_case = create_report_use_case

    def run(self, run_config: RunConfig) -> int:
        return getattr(self, run_config.command)(run_config)

    @catch_exceptions
    def synth(self, run_config: RunConfig) -> int:
        self.generate_synthetic_motifs_use_case.execute(run_config.count, run_config.seed, run_config.out)
        return 0

    @catch_exceptions
    def extract(self, run_config: RunConfig) -> int:
        self.extract_motifs_use_case.execute(
            input_path=run_config.input,
            window=run_config.window,
            max_motifs=run_config.max_motifs,
            exclude_labels=run_config.exclude,
            sample_size=run_config.sample,
            seed=run_config.seed,
            out=run_config.out,
        )
        return 0

    @catch_exceptions
    def train(self, run_config: RunConfig) -> int:
        anchors = run_config.anchor_indices() if run_config.init == "anchor" else None
        model_path, trace_path = self.train_network_use_case.execute(
            motifs_path=run_config.motifs,
            rows=run_config.rows,
            cols=run_config.cols,
            config=run_config.training_config(),
            anchors=anchors,
            out=run_config.out,
            show_progress=not run_config.quiet,
        )
        service_logger.info(f"Model in {model_path}, trace in {trace_path}")
        return 0

    @catch_exceptions
    def report(self, run_config: RunConfig) -> int:
        paths = self.create_report_use_case.execute(run_config.model, run_config.motifs, run_config.out_dir)
        service_logger.info(f"Wrote {len(paths)} report files to {run_config.out_dir}")
        return 0
