from pydantic import BaseModel, Field

from domain.Sequence import Sequence


class Motif(BaseModel):
    rank: int = Field(ge=1)
    center: list[list[float]]
    center_offset: int | None = None
    pair_distance: float | None = None
    radius: float | None = None
    member_offsets: list[int] = []
    label: str | None = None

    @property
    def member_count(self) -> int:
        return len(self.member_offsets)

    def to_sequence(self) -> Sequence:
        return Sequence.from_list(self.center, id=str(self.rank))
