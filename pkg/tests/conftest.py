from pathlib import Path

import numpy as np
import pytest

REPO_ROOT = Path(__file__).resolve().parent.parent
SCENARIO_DIR = REPO_ROOT / "scenarios"
VALUATION_DIR = REPO_ROOT / "valuations"


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20240601)


def scenario_path(name: str) -> Path:
    return SCENARIO_DIR / name
