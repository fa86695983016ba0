from pydantic import BaseModel, Field

from domain.TrainingConfig import TrainingConfig


class NetworkDocument(BaseModel):
    rows: int = Field(ge=1)
    cols: int = Field(ge=1)
    epoch: int = Field(default=0, ge=0)
    config: TrainingConfig
    units: list[list[list[float]]]
