from adapters.infrastructure.motifs.MotifExtractor import MotifExtractor
from domain.LongSeries import LongSeries
from domain.MotifSet import MotifSet
from ports.services.motif_discovery_service import MotifDiscoveryService


class MotifDiscoveryServiceAdapter(MotifDiscoveryService):
    def extract_motifs(self, series: LongSeries, window: int, max_motifs: int) -> MotifSet:
        extractor = MotifExtractor(series, window)
        motif_set = extractor.extract(max_motifs)
        extractor.assert_invariants(motif_set)
        return motif_set
