import numpy as np
from numba import njit, prange

from configuration import FLAT_STD_THRESHOLD


@njit(cache=True, nogil=True)
def rolling_mean_std(series: np.ndarray, m: int):
    count = series.shape[0] - m + 1
    means = np.empty(count)
    stds = np.empty(count)
    for offset in range(count):
        total = 0.0
        for k in range(m):
            total += series[offset + k]
        mean = total / m

        squares = 0.0
        for k in range(m):
            difference = series[offset + k] - mean
            squares += difference * difference

        means[offset] = mean
        stds[offset] = np.sqrt(squares / m)
    return means, stds


@njit(cache=True, nogil=True)
def dot_products(series: np.ndarray, offset: int, m: int) -> np.ndarray:
    count = series.shape[0] - m + 1
    products = np.empty(count)
    for j in range(count):
        total = 0.0
        for k in range(m):
            total += series[offset + k] * series[j + k]
        products[j] = total
    return products


@njit(cache=True, nogil=True)
def pair_distance(product: float, m: int, mean_i: float, std_i: float, mean_j: float, std_j: float) -> float:
    flat_i = std_i < FLAT_STD_THRESHOLD
    flat_j = std_j < FLAT_STD_THRESHOLD
    if flat_i and flat_j:
        return 0.0
    if flat_i or flat_j:
        return np.sqrt(m)

    correlation = (product - m * mean_i * mean_j) / (m * std_i * std_j)
    squared = 2.0 * m * (1.0 - correlation)
    return np.sqrt(min(max(squared, 0.0), 4.0 * m))


@njit(cache=True, nogil=True)
def exact_distance(series: np.ndarray, i: int, j: int, m: int, means: np.ndarray, stds: np.ndarray) -> float:
    flat_i = stds[i] < FLAT_STD_THRESHOLD
    flat_j = stds[j] < FLAT_STD_THRESHOLD
    if flat_i and flat_j:
        return 0.0
    if flat_i or flat_j:
        return np.sqrt(m)

    squares = 0.0
    for k in range(m):
        difference = (series[i + k] - means[i]) / stds[i] - (series[j + k] - means[j]) / stds[j]
        squares += difference * difference
    return min(np.sqrt(squares), 2.0 * np.sqrt(m))


@njit(cache=True, nogil=True)
def exact_distances(
    series: np.ndarray, i: int, offsets: np.ndarray, m: int, means: np.ndarray, stds: np.ndarray
) -> np.ndarray:
    distances = np.empty(offsets.shape[0])
    for index in range(offsets.shape[0]):
        distances[index] = exact_distance(series, i, offsets[index], m, means, stds)
    return distances


@njit(cache=True, parallel=True)
def matrix_profile_rows(series: np.ndarray, m: int, exclusion_zone: int, chunk_rows: int):
    count = series.shape[0] - m + 1
    means, stds = rolling_mean_std(series, m)
    first_row = dot_products(series, 0, m)
    distances = np.full(count, np.inf)
    indices = np.full(count, -1, dtype=np.int64)

    chunks = (count + chunk_rows - 1) // chunk_rows
    for chunk in prange(chunks):
        start = chunk * chunk_rows
        stop = min(start + chunk_rows, count)
        products = dot_products(series, start, m)
        for i in range(start, stop):
            if i > start:
                for j in range(count - 1, 0, -1):
                    products[j] = products[j - 1] - series[i - 1] * series[j - 1] + series[i + m - 1] * series[j + m - 1]
                products[0] = first_row[i]

            best = np.inf
            best_j = -1
            for j in range(count):
                if abs(i - j) < exclusion_zone:
                    continue
                distance = pair_distance(products[j], m, means[i], stds[i], means[j], stds[j])
                if distance < best:
                    best = distance
                    best_j = j

            if best_j >= 0:
                distances[i] = exact_distance(series, i, best_j, m, means, stds)
                indices[i] = best_j

    return distances, indices, means, stds
