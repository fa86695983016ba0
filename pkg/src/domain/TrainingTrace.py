from pydantic import BaseModel


class TrainingTrace(BaseModel):
    quantization_errors: list[float] = []
    learning_rates: list[float] = []
    radii: list[float] = []
    initial_quantization_error: float | None = None
    final_quantization_error: float | None = None

    @property
    def completed_epochs(self) -> int:
        return len(self.quantization_errors)

    @property
    def first_epoch_quantization_error(self) -> float | None:
        """Mean BMU distance while the first epoch adapts the units, the reference of convergence checks."""
        return self.quantization_errors[0] if self.quantization_errors else None

    def add_epoch(self, quantization_error: float, learning_rate: float, radius: float):
        self.quantization_errors.append(quantization_error)
        self.learning_rates.append(learning_rate)
        self.radii.append(radius)
