from pathlib import Path
from unittest import TestCase

from configuration import SRC_PATH


class TestPackageLayout(TestCase):
    def test_every_source_folder_is_a_package(self):
        folders = {path.parent for path in Path(SRC_PATH).rglob("*.py") if "__pycache__" not in path.parts}

        for folder in sorted(folders - {Path(SRC_PATH)}):
            self.assertTrue(Path(folder, "__init__.py").exists(), folder)
