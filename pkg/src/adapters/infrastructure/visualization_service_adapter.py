from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import numpy as np
from matplotlib.figure import Figure
from matplotlib.patches import Rectangle

from configuration import MOTIF_PANEL_ROWS, MOTIF_PANELS_PER_ROW, service_logger
from domain.MotifSet import MotifSet
from domain.SomNetwork import SomNetwork
from domain.UMatrix import UMatrix
from domain.WinnerMatrix import WinnerMatrix
from exceptions import DataError
from ports.services.visualization_service import VisualizationService

SVG_SETTINGS = {"svg.hashsalt": "dtw-som", "svg.fonttype": "none", "path.simplify": False}
CELL_SIZE_INCHES = 1.2


def grey_levels(values: np.ndarray) -> np.ndarray:
    values = np.asarray(values, dtype=np.float64)
    lowest, highest = values.min(), values.max()
    if highest - lowest == 0:
        return np.full(values.shape, 0.5)
    return (values - lowest) / (highest - lowest)


def motif_panels(motif_set: MotifSet) -> list[tuple[str, list[tuple[str, np.ndarray]]]]:
    """One row of centers per label in order of first appearance by rank, or rows of top ranked centers when unlabeled."""
    ranked = sorted(motif_set.motifs, key=lambda motif: motif.rank)
    if motif_set.labels() is None:
        ranked = ranked[: MOTIF_PANELS_PER_ROW * MOTIF_PANEL_ROWS]
        chunks = [ranked[start : start + MOTIF_PANELS_PER_ROW] for start in range(0, len(ranked), MOTIF_PANELS_PER_ROW)]
        return [("", [(f"#{motif.rank}", np.array(motif.center)) for motif in chunk]) for chunk in chunks]

    groups: dict[str, list[tuple[str, np.ndarray]]] = {}
    for motif in ranked:
        group = groups.setdefault(motif.label, [])
        if len(group) < MOTIF_PANELS_PER_ROW:
            group.append((f"#{motif.rank}", np.array(motif.center)))
    return list(groups.items())


class VisualizationServiceAdapter(VisualizationService):
    def render_u_matrix(self, u_matrix: UMatrix, path: Path) -> Path:
        return self.render_grid(u_matrix.values, [[f"{value:.3g}" for value in row] for row in u_matrix.values], path)

    def render_winner_matrix(self, winner_matrix: WinnerMatrix, path: Path) -> Path:
        return self.render_grid(winner_matrix.values, [[str(value) for value in row] for row in winner_matrix.values], path)

    def render_grid(self, values: np.ndarray, annotations: list[list[str]], path: Path) -> Path:
        rows, cols = values.shape
        darkness = grey_levels(values)
        with matplotlib.rc_context(SVG_SETTINGS):
            figure = Figure(figsize=(cols * CELL_SIZE_INCHES, rows * CELL_SIZE_INCHES))
            axes = figure.add_subplot()
            for row in range(rows):
                for col in range(cols):
                    grey = 1.0 - darkness[row, col]
                    axes.add_patch(Rectangle((col, row), 1, 1, facecolor=(grey, grey, grey), edgecolor="black"))
                    axes.text(
                        col + 0.5,
                        row + 0.5,
                        annotations[row][col],
                        ha="center",
                        va="center",
                        color="white" if darkness[row, col] > 0.5 else "black",
                    )

            axes.set_xlim(0, cols)
            axes.set_ylim(rows, 0)
            axes.set_aspect("equal")
            axes.set_axis_off()
            return self.save(figure, path)

    def render_units(self, network: SomNetwork, path: Path) -> Path:
        panels = [[] for _ in range(network.rows)]
        for index, unit in enumerate(network.units()):
            row, col = network.position(index)
            panels[row].append((f"({row}, {col})", unit))
        return self.render_panels([("", row_panels) for row_panels in panels], path)

    def render_motifs(self, motif_set: MotifSet, path: Path) -> Path:
        return self.render_panels(motif_panels(motif_set), path)

    def render_panels(self, panel_rows: list[tuple[str, list[tuple[str, np.ndarray]]]], path: Path) -> Path:
        rows = max(len(panel_rows), 1)
        cols = max([len(row_panels) for _, row_panels in panel_rows] + [1])
        with matplotlib.rc_context(SVG_SETTINGS):
            figure = Figure(figsize=(cols * 2 * CELL_SIZE_INCHES, rows * 1.5 * CELL_SIZE_INCHES))
            grid = figure.subplots(rows, cols, squeeze=False)
            for axes in grid.ravel():
                axes.set_axis_off()

            for row, (row_title, row_panels) in enumerate(panel_rows):
                for col, (title, values) in enumerate(row_panels):
                    axes = grid[row][col]
                    axes.set_axis_on()
                    for dimension in range(values.shape[1]):
                        axes.plot(np.arange(values.shape[0]), values[:, dimension], linewidth=1)
                    axes.set_title(title, fontsize=8)
                    axes.set_xticks([])
                    axes.set_yticks([])
                if row_title:
                    grid[row][0].set_ylabel(row_title, fontsize=8)
            return self.save(figure, path)

    @staticmethod
    def save(figure: Figure, path: Path) -> Path:
        path = Path(path)
        try:
            path.parent.mkdir(parents=True, exist_ok=True)
            figure.savefig(path, format="svg", metadata={"Date": None})
        except OSError as error:
            raise DataError(f"Cannot write {path}: {error.strerror}")
        service_logger.info(f"Saved {path}")
        return path
