from abc import ABC, abstractmethod

from domain.LongSeries import LongSeries
from domain.MotifSet import MotifSet


class MotifDiscoveryService(ABC):
    @abstractmethod
    def extract_motifs(self, series: LongSeries, window: int, max_motifs: int) -> MotifSet:
        pass
