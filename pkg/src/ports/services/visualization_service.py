from abc import ABC, abstractmethod
from pathlib import Path

from domain.MotifSet import MotifSet
from domain.SomNetwork import SomNetwork
from domain.UMatrix import UMatrix
from domain.WinnerMatrix import WinnerMatrix


class VisualizationService(ABC):
    @abstractmethod
    def render_u_matrix(self, u_matrix: UMatrix, path: Path) -> Path:
        pass

    @abstractmethod
    def render_winner_matrix(self, winner_matrix: WinnerMatrix, path: Path) -> Path:
        pass

    @abstractmethod
    def render_units(self, network: SomNetwork, path: Path) -> Path:
        pass

    @abstractmethod
    def render_motifs(self, motif_set: MotifSet, path: Path) -> Path:
        pass
