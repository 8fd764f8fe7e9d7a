import subprocess
import sys
from pathlib import Path

import pytest

REPO = Path(__file__).resolve().parent.parent.parent
DICT = REPO / "data" / "dictionary.csv"
TRUTH = REPO / "data" / "ground_truth_sample.csv"
SCHEMA = REPO / "schemas" / "baselines_report.schema.json"


@pytest.fixture(scope="session")
def simulator_export(tmp_path_factory) -> Path:
    """Run the simulator CLI once; its exported files drive the baselines.

    The shipped ground-truth sample is itself simulator-generated, so this
    doubles as the shared synthetic fixture.
    """
    out_dir = tmp_path_factory.mktemp("export") / "eval_out"
    cmd = [
        sys.executable, "-m", "cogsim.cli", "evaluate",
        "--dict", str(DICT), "--truth", str(TRUTH),
        "--k-range", "200:400:100", "--t-range", "0.05:0.15", "--t-grid", "3",
        "--samples", "150", "--max-iter", "2", "--folds", "5",
        "--seed", "42", "--out-dir", str(out_dir),
    ]
    subprocess.run(cmd, check=True, capture_output=True, text=True)
    return out_dir
