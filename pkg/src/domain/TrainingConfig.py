from pydantic import BaseModel, Field

from configuration import DEFAULT_LEARNING_RATE, RADIUS_FLOOR


class TrainingConfig(BaseModel):
    epochs: int = Field(default=30, ge=1)
    learning_rate: float = Field(default=DEFAULT_LEARNING_RATE, ge=0, lt=1)
    radius: float | None = Field(default=None, gt=0)
    window: int | None = Field(default=None, ge=0)
    seed: int = Field(default=0, ge=0)

    def initial_radius(self, rows: int, cols: int) -> float:
        radius = self.radius if self.radius is not None else max(rows, cols) / 2
        if radius > max(rows, cols):
            raise ValueError(f"Initial radius {radius} is larger than the grid side {max(rows, cols)}")
        return radius

    def learning_rate_at(self, epoch: int) -> float:
        return self.learning_rate * (1 - epoch / self.epochs)

    def radius_at(self, epoch: int, rows: int, cols: int) -> float:
        return max(self.initial_radius(rows, cols) * (1 - epoch / self.epochs), RADIUS_FLOOR)
