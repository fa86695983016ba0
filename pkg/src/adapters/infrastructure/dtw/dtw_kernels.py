import numpy as np
from numba import njit, prange

NO_WINDOW = -1


@njit(cache=True, nogil=True)
def band_limits(i: int, n: int, m: int, window: int):
    if window == NO_WINDOW:
        return 0, m - 1
    lowest = -((window * n - i * m) // n)
    highest = (i * m + window * n) // n
    return max(lowest, 0), min(highest, m - 1)


@njit(cache=True, nogil=True)
def local_cost(first: np.ndarray, second: np.ndarray, i: int, j: int) -> float:
    cost = 0.0
    for dimension in range(first.shape[1]):
        difference = first[i, dimension] - second[j, dimension]
        cost += difference * difference
    return cost


@njit(cache=True, nogil=True)
def best_predecessor(diagonal: float, up: float, left: float) -> float:
    best = diagonal
    if up < best:
        best = up
    if left < best:
        best = left
    return best


@njit(cache=True, nogil=True)
def accumulated_cost_matrix(first: np.ndarray, second: np.ndarray, window: int) -> np.ndarray:
    n = first.shape[0]
    m = second.shape[0]
    cost = np.full((n + 1, m + 1), np.inf)
    cost[0, 0] = 0.0
    for i in range(n):
        lowest, highest = band_limits(i, n, m, window)
        for j in range(lowest, highest + 1):
            best = best_predecessor(cost[i, j], cost[i, j + 1], cost[i + 1, j])
            cost[i + 1, j + 1] = local_cost(first, second, i, j) + best
    return cost


@njit(cache=True, nogil=True)
def accumulated_cost(first: np.ndarray, second: np.ndarray, window: int) -> float:
    n = first.shape[0]
    m = second.shape[0]
    previous = np.full(m + 1, np.inf)
    current = np.full(m + 1, np.inf)
    previous[0] = 0.0
    for i in range(n):
        current[:] = np.inf
        lowest, highest = band_limits(i, n, m, window)
        for j in range(lowest, highest + 1):
            best = best_predecessor(previous[j], previous[j + 1], current[j])
            current[j + 1] = local_cost(first, second, i, j) + best
        previous, current = current, previous
    return previous[m]


@njit(cache=True, nogil=True)
def backtrack(cost: np.ndarray) -> np.ndarray:
    i = cost.shape[0] - 1
    j = cost.shape[1] - 1
    path = np.empty((i + j, 2), dtype=np.int64)
    steps = 0
    while True:
        path[steps, 0] = i - 1
        path[steps, 1] = j - 1
        steps += 1
        if i == 1 and j == 1:
            break

        diagonal = cost[i - 1, j - 1]
        up = cost[i - 1, j]
        left = cost[i, j - 1]
        if diagonal <= up and diagonal <= left:
            i -= 1
            j -= 1
        elif up <= left:
            i -= 1
        else:
            j -= 1

    return path[:steps][::-1].copy()


@njit(cache=True, parallel=True)
def distances_to_units(values: np.ndarray, lengths: np.ndarray, pattern: np.ndarray, window: int) -> np.ndarray:
    distances = np.empty(values.shape[0])
    for unit_index in prange(values.shape[0]):
        unit = values[unit_index, : lengths[unit_index]]
        distances[unit_index] = np.sqrt(accumulated_cost(unit, pattern, window))
    return distances
