import numpy as np

from adapters.infrastructure.dtw.dtw_kernels import NO_WINDOW, accumulated_cost, accumulated_cost_matrix, backtrack
from domain.AlignmentPath import AlignmentPath
from domain.DtwResult import DtwResult
from domain.Sequence import Sequence
from exceptions import DataError


def as_points(sequence: Sequence | np.ndarray) -> np.ndarray:
    values = sequence.values if isinstance(sequence, Sequence) else np.asarray(sequence, dtype=np.float64)
    if values.ndim == 1:
        values = values.reshape(-1, 1)
    return np.ascontiguousarray(values, dtype=np.float64)


def window_code(window: int | None) -> int:
    return NO_WINDOW if window is None else int(window)


def check_feasible(first_length: int, second_length: int, window: int | None):
    if window is None:
        return

    if window < 0:
        raise DataError(f"The warping window must be non-negative, got {window}")

    if window < abs(first_length - second_length):
        raise DataError(f"Window {window} is infeasible for sequence lengths {first_length} and {second_length}")


def check_pair(first: np.ndarray, second: np.ndarray, window: int | None):
    if first.shape[0] == 0 or second.shape[0] == 0:
        raise DataError("DTW needs non-empty sequences")

    if first.shape[1] != second.shape[1]:
        raise DataError(f"Cannot align a {first.shape[1]}-dimensional sequence with a {second.shape[1]}-dimensional one")

    check_feasible(first.shape[0], second.shape[0], window)


def dtw(first: Sequence | np.ndarray, second: Sequence | np.ndarray, window: int | None = None) -> DtwResult:
    first_points = as_points(first)
    second_points = as_points(second)
    check_pair(first_points, second_points, window)

    cost = accumulated_cost_matrix(first_points, second_points, window_code(window))
    if not np.isfinite(cost[-1, -1]):
        raise DataError(f"No warping path fits window {window}")

    return DtwResult(float(np.sqrt(cost[-1, -1])), AlignmentPath(backtrack(cost)))


def dtw_distance(first: Sequence | np.ndarray, second: Sequence | np.ndarray, window: int | None = None) -> float:
    first_points = as_points(first)
    second_points = as_points(second)
    check_pair(first_points, second_points, window)

    total = accumulated_cost(first_points, second_points, window_code(window))
    if not np.isfinite(total):
        raise DataError(f"No warping path fits window {window}")

    return float(np.sqrt(total))
