from pydantic import BaseModel


class ReportSummary(BaseModel):
    rows: int
    cols: int
    epoch: int
    patterns_count: int
    quantization_error: float
    winners_total: int
    purity: float | None = None
