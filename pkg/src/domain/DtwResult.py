from domain.AlignmentPath import AlignmentPath


class DtwResult:
    def __init__(self, distance: float, path: AlignmentPath):
        self.distance: float = distance
        self.path: AlignmentPath = path
