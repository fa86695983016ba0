from pydantic import BaseModel

from domain.Motif import Motif
from domain.Sequence import Sequence


class MotifSet(BaseModel):
    motifs: list[Motif] = []
    window: int | None = None
    max_motifs: int | None = None
    exclusion_zone: int | None = None
    radius_factor: float | None = None

    def __len__(self):
        return len(self.motifs)

    def motif_centers(self) -> list[Sequence]:
        return [motif.to_sequence() for motif in sorted(self.motifs, key=lambda motif: motif.rank)]

    def labels(self) -> list[str] | None:
        ranked = sorted(self.motifs, key=lambda motif: motif.rank)
        if not ranked or any(motif.label is None for motif in ranked):
            return None
        return [motif.label for motif in ranked]
