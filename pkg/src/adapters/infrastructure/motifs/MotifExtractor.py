import math

import numpy as np
from scipy.signal import fftconvolve

from adapters.infrastructure.motifs.matrix_profile_kernels import exact_distance, exact_distances, matrix_profile_rows
from configuration import (
    FLAT_STD_THRESHOLD,
    MATRIX_PROFILE_CHUNK_ROWS,
    MOTIF_RADIUS_FLOOR,
    PREFILTER_SLACK,
    RADIUS_FACTOR,
    service_logger,
)
from domain.LongSeries import LongSeries
from domain.MatrixProfile import MatrixProfile
from domain.Motif import Motif
from domain.MotifSet import MotifSet
from exceptions import DataError


class MotifExtractor:
    """Fixed-length motif discovery on top of a z-normalized matrix profile.

    Motifs are taken greedily from the lowest profile value still available. A motif's radius is
    ``RADIUS_FACTOR`` times the distance between the center and its nearest neighbor; its members are the
    non-overlapping subsequences inside that radius. Members and their exclusion zones are removed from later
    searches, and a motif whose center lies within twice its radius of an accepted center is dropped.
    """

    def __init__(self, series: LongSeries, window: int):
        if series.dimension != 1:
            raise DataError(f"Motif discovery needs a single-dimension series, got {series.dimension} dimensions")

        if window < 1:
            raise DataError(f"The motif window must be positive, got {window}")

        if len(series) < 2 * window:
            raise DataError(f"A series of length {len(series)} is too short for window {window}")

        self.series = series
        self.values = series.univariate()
        self.centered = self.values - self.values.mean()
        self.window = window
        self.exclusion_zone = math.ceil(window / 2)
        self.profile: MatrixProfile | None = None
        self.means: np.ndarray | None = None
        self.stds: np.ndarray | None = None

    def matrix_profile(self) -> MatrixProfile:
        if self.profile is None:
            service_logger.info(f"Matrix profile of {len(self.series)} points with window {self.window}")
            distances, indices, self.means, self.stds = matrix_profile_rows(
                self.centered, self.window, self.exclusion_zone, MATRIX_PROFILE_CHUNK_ROWS
            )
            self.profile = MatrixProfile(self.window, distances, indices, self.exclusion_zone)
        return self.profile

    def distance_profile(self, offset: int) -> np.ndarray:
        self.matrix_profile()
        m = self.window
        query = self.centered[offset : offset + m]
        products = fftconvolve(self.centered, query[::-1], mode="valid")

        flat = self.stds < FLAT_STD_THRESHOLD
        if flat[offset]:
            return np.where(flat, 0.0, math.sqrt(m))

        stds = np.where(flat, 1.0, self.stds)
        correlations = (products - m * self.means[offset] * self.means) / (m * self.stds[offset] * stds)
        distances = np.sqrt(np.clip(2.0 * m * (1.0 - correlations), 0.0, 4.0 * m))

        distances[flat] = math.sqrt(m)
        return distances

    def center_distance(self, first_offset: int, second_offset: int) -> float:
        return exact_distance(self.centered, first_offset, second_offset, self.window, self.means, self.stds)

    def gather_members(self, center: int, radius: float, available: np.ndarray) -> list[int]:
        prefilter = self.distance_profile(center) ** 2 <= radius**2 + PREFILTER_SLACK * self.window
        candidates = np.flatnonzero(available & prefilter)
        distances = exact_distances(self.centered, center, candidates, self.window, self.means, self.stds)

        inside = [
            (distance, offset) for distance, offset in zip(distances.tolist(), candidates.tolist()) if distance <= radius
        ]
        members = [center]
        for _, offset in sorted(inside):
            if all(abs(offset - member) >= self.window for member in members):
                members.append(offset)
        return sorted(members)

    def exclude(self, available: np.ndarray, members: list[int]):
        for member in members:
            available[max(member - self.exclusion_zone, 0) : member + self.exclusion_zone + 1] = False

    def extract(self, max_motifs: int) -> MotifSet:
        motif_set = MotifSet(
            window=self.window, max_motifs=max_motifs, exclusion_zone=self.exclusion_zone, radius_factor=RADIUS_FACTOR
        )
        if max_motifs <= 0:
            return motif_set

        profile = self.matrix_profile()
        available = np.isfinite(profile.distances)
        while len(motif_set.motifs) < max_motifs and available.any():
            center = int(np.argmin(np.where(available, profile.distances, np.inf)))
            pair_distance = float(profile.distances[center])
            radius = max(RADIUS_FACTOR * pair_distance, MOTIF_RADIUS_FLOOR)
            members = self.gather_members(center, radius, available)
            self.exclude(available, members)

            if len(members) < 2:
                continue

            if any(self.center_distance(center, motif.center_offset) <= 2 * radius for motif in motif_set.motifs):
                continue

            motif_set.motifs.append(
                Motif(
                    rank=len(motif_set.motifs) + 1,
                    center=self.series.subsequence(center, self.window).to_list(),
                    center_offset=center,
                    pair_distance=pair_distance,
                    radius=radius,
                    member_offsets=members,
                )
            )

        service_logger.info(f"Extracted {len(motif_set.motifs)} motifs with window {self.window}")
        return motif_set

    def assert_invariants(self, motif_set: MotifSet):
        self.matrix_profile()
        for motif in motif_set.motifs:
            for member in motif.member_offsets:
                if self.center_distance(motif.center_offset, member) > motif.radius:
                    raise RuntimeError(f"Member {member} of motif {motif.rank} is outside its radius")

            gaps = np.diff(motif.member_offsets)
            if np.any(gaps < self.window):
                raise RuntimeError(f"Members of motif {motif.rank} overlap")

        for index, motif in enumerate(motif_set.motifs):
            for other in motif_set.motifs[:index]:
                separation = 2 * max(motif.radius, other.radius)
                if self.center_distance(motif.center_offset, other.center_offset) <= separation:
                    raise RuntimeError(f"Centers of motifs {other.rank} and {motif.rank} are closer than {separation}")
