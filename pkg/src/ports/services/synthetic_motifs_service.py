from abc import ABC, abstractmethod

from domain.MotifSet import MotifSet
from domain.Sequence import Sequence


class SyntheticMotifsService(ABC):
    @abstractmethod
    def generate(self, count: int, seed: int) -> list[tuple[Sequence, str]]:
        pass

    @abstractmethod
    def generate_motif_set(self, count: int, seed: int) -> MotifSet:
        pass
