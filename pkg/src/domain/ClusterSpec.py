from pydantic import BaseModel, model_validator

from configuration import SYNTHETIC_BEHAVIOR_INTERVALS

CLUSTER_NAMES = ["low-middle-high", "high-middle-low", "middle-middle-middle"]


class ClusterSpec(BaseModel):
    name: str
    intervals: list[tuple[float, float]]

    @model_validator(mode="after")
    def intervals_follow_name(self):
        expected = [SYNTHETIC_BEHAVIOR_INTERVALS[behavior] for behavior in self.name.split("-")]
        if self.intervals != expected:
            raise ValueError(f"Intervals {self.intervals} do not follow the behaviors of {self.name}")
        return self

    @staticmethod
    def from_name(name: str):
        if name not in CLUSTER_NAMES:
            raise ValueError(f"Unknown cluster {name}, expected one of {CLUSTER_NAMES}")
        return ClusterSpec(name=name, intervals=[SYNTHETIC_BEHAVIOR_INTERVALS[behavior] for behavior in name.split("-")])
