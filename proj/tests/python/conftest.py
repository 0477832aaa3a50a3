import os
import pathlib
import shutil

import pytest

SOURCE_DIR = pathlib.Path(os.environ.get("COXGROWTH_SOURCE_DIR", pathlib.Path(__file__).resolve().parents[2]))


@pytest.fixture(scope="session")
def source_dir():
    return SOURCE_DIR


@pytest.fixture(scope="session")
def cli_path():
    path = os.environ.get("COXGROWTH_CLI") or shutil.which("coxgrowth")
    if path is None:
        candidate = SOURCE_DIR / "build" / "tools" / "coxgrowth"
        if candidate.exists():
            path = str(candidate)
    if path is None:
        pytest.skip("coxgrowth executable not found")
    return path
