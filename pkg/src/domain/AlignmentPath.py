import numpy as np


class AlignmentPath:
    def __init__(self, matches: np.ndarray | list[tuple[int, int]]):
        matches = np.asarray(matches, dtype=np.int64)
        if matches.ndim != 2 or matches.shape[1] != 2 or matches.shape[0] == 0:
            raise ValueError(f"An alignment path is a non-empty list of index pairs, got shape {matches.shape}")
        self.matches: np.ndarray = matches

    def __len__(self):
        return self.matches.shape[0]

    def __iter__(self):
        for first_index, second_index in self.matches:
            yield int(first_index), int(second_index)

    def to_list(self) -> list[tuple[int, int]]:
        return list(self)

    def is_valid(self, first_length: int, second_length: int) -> bool:
        if tuple(self.matches[0]) != (0, 0):
            return False

        if tuple(self.matches[-1]) != (first_length - 1, second_length - 1):
            return False

        steps = np.diff(self.matches, axis=0)
        if np.any(steps < 0) or np.any(steps > 1) or np.any(steps.sum(axis=1) == 0):
            return False

        return len(np.unique(self.matches[:, 0])) == first_length and len(np.unique(self.matches[:, 1])) == second_length

    def path_groups(self, unit_length: int) -> list[list[int]]:
        groups: list[list[int]] = [[] for _ in range(unit_length)]
        for unit_index, pattern_index in self:
            groups[unit_index].append(pattern_index)
        return groups
