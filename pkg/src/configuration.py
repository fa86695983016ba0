import logging
from pathlib import Path


SRC_PATH = Path(__file__).parent.absolute()
ROOT_PATH = SRC_PATH.parent

handlers = [logging.StreamHandler()]
logging.root.handlers = []
logging.basicConfig(level=logging.INFO, format="%(asctime)s [%(levelname)s] %(message)s", handlers=handlers)
service_logger = logging.getLogger(__name__)

UCR_DATA_PATH = Path(ROOT_PATH, "data", "ucr")

FLAT_STD_THRESHOLD = 1e-8
DEFAULT_LEARNING_RATE = 0.1
RADIUS_FLOOR = 0.1
NEIGHBORHOOD_CUTOFF = 1e-3
RADIUS_FACTOR = 2.0
MOTIF_RADIUS_FLOOR = 1e-8
PREFILTER_SLACK = 1e-6
MATRIX_PROFILE_CHUNK_ROWS = 2048

SYNTHETIC_BEHAVIOR_INTERVALS = {
    "low": (-3.0, -1.5),
    "middle": (-0.5, 0.5),
    "high": (1.5, 3.0),
}
SYNTHETIC_BEHAVIOR_LENGTHS = (5, 10)

MOTIF_PANELS_PER_ROW = 5
MOTIF_PANEL_ROWS = 6

REPORT_FILE_NAMES = {
    "u_matrix_svg": "u_matrix.svg",
    "winner_matrix_svg": "winner_matrix.svg",
    "units_svg": "units.svg",
    "motifs_svg": "motifs.svg",
    "u_matrix_csv": "u_matrix.csv",
    "winner_matrix_csv": "winner_matrix.csv",
    "summary": "summary.json",
}
