import numpy as np

from configuration import SYNTHETIC_BEHAVIOR_LENGTHS, service_logger
from domain.ClusterSpec import CLUSTER_NAMES, ClusterSpec
from domain.Motif import Motif
from domain.MotifSet import MotifSet
from domain.Sequence import Sequence
from ports.services.synthetic_motifs_service import SyntheticMotifsService


class SyntheticMotifsAdapter(SyntheticMotifsService):
    def __init__(self):
        self.clusters = [ClusterSpec.from_name(name) for name in CLUSTER_NAMES]

    def generate(self, count: int, seed: int) -> list[tuple[Sequence, str]]:
        if count < 1:
            raise ValueError(f"Cannot generate {count} motif centers")

        rng = np.random.default_rng(seed)
        shortest, longest = SYNTHETIC_BEHAVIOR_LENGTHS
        centers = []
        for index in range(count):
            cluster = self.clusters[index % len(self.clusters)]
            lengths = rng.integers(shortest, longest + 1, size=len(cluster.intervals))
            segments = [rng.uniform(low, high, size=length) for (low, high), length in zip(cluster.intervals, lengths)]
            centers.append((Sequence(np.concatenate(segments), id=str(index)), cluster.name))

        service_logger.info(f"Generated {count} synthetic motif centers from seed {seed}")
        return centers

    def generate_motif_set(self, count: int, seed: int) -> MotifSet:
        motifs = [
            Motif(rank=index + 1, center=center.to_list(), label=label)
            for index, (center, label) in enumerate(self.generate(count, seed))
        ]
        return MotifSet(motifs=motifs)
