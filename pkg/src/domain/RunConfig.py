from pathlib import Path
from typing import Literal

from pydantic import BaseModel, Field, model_validator

from domain.TrainingConfig import TrainingConfig
from configuration import DEFAULT_LEARNING_RATE


class RunConfig(BaseModel):
    command: Literal["synth", "extract", "train", "report"]
    seed: int = Field(default=0, ge=0)
    threads: int | None = Field(default=None, ge=1)
    quiet: bool = False
    log_level: Literal["DEBUG", "INFO", "WARNING", "ERROR"] = "INFO"

    out: Path | None = None

    count: int = Field(default=180, ge=1)

    input: Path | None = None
    window: int | None = Field(default=None, ge=0)
    max_motifs: int = Field(default=1000, ge=0)
    exclude: list[str] = []
    sample: int | None = Field(default=None, ge=1)

    motifs: Path | None = None
    rows: int = Field(default=3, ge=1)
    cols: int = Field(default=3, ge=1)
    epochs: int = Field(default=30, ge=1)
    init: Literal["random", "anchor"] = "random"
    anchors: list[int] | None = None
    anchor_count: int | None = Field(default=None, ge=1)
    learning_rate: float = Field(default=DEFAULT_LEARNING_RATE, ge=0, lt=1)
    radius: float | None = Field(default=None, gt=0)

    model: Path | None = None
    out_dir: Path | None = None

    @model_validator(mode="after")
    def flags_fit_command(self):
        required = {
            "synth": ["out"],
            "extract": ["input", "window", "out"],
            "train": ["motifs", "out"],
            "report": ["model", "motifs", "out_dir"],
        }[self.command]
        missing = [name for name in required if getattr(self, name) is None]
        if missing:
            raise ValueError(f"{self.command} needs --{', --'.join(name.replace('_', '-') for name in missing)}")

        if self.command == "extract" and self.window < 1:
            raise ValueError("The motif window must be at least 1")

        if self.command == "train":
            self.check_anchor_flags()
            if self.radius is not None and self.radius > max(self.rows, self.cols):
                raise ValueError(f"Radius {self.radius} is larger than the grid side {max(self.rows, self.cols)}")

        return self

    def check_anchor_flags(self):
        anchor_flags = [flag for flag in (self.anchors, self.anchor_count) if flag is not None]
        if self.init == "random" and anchor_flags:
            raise ValueError("--anchors and --anchor-count need --init anchor")

        if self.init == "anchor" and len(anchor_flags) != 1:
            raise ValueError("--init anchor needs exactly one of --anchors or --anchor-count")

        if self.anchors is not None and any(anchor < 0 for anchor in self.anchors):
            raise ValueError("Anchor indices must be non-negative")

        anchors_number = len(self.anchors) if self.anchors is not None else self.anchor_count or 0
        if anchors_number > self.rows * self.cols:
            raise ValueError(f"{anchors_number} anchors do not fit in a {self.rows}x{self.cols} grid")

    def training_config(self) -> TrainingConfig:
        return TrainingConfig(
            epochs=self.epochs, learning_rate=self.learning_rate, radius=self.radius, window=self.window, seed=self.seed
        )

    def anchor_indices(self) -> list[int]:
        if self.anchors is not None:
            return list(self.anchors)
        return list(range(self.anchor_count or 0))
