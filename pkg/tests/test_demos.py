import subprocess
import sys
from pathlib import Path

import pytest

ROOT = Path(__file__).resolve().parents[1]
DEMOS = sorted((ROOT / "demos").glob("*.py"))


@pytest.mark.parametrize("script", DEMOS, ids=[p.name for p in DEMOS])
def test_demo_runs(script):
    proc = subprocess.run([sys.executable, str(script)], capture_output=True, text=True, timeout=120)
    assert proc.returncode == 0, proc.stderr


@pytest.mark.parametrize(
    "argv, code",
    [
        (["basis", "demos/data/theta.json"], 0),
        (["basis", "demos/data/disconnected.json"], 3),
        (["member", "demos/data/s3_regular.json", "xyxy"], 1),
        (["member", "demos/data/s3_regular.json", "xyxyxy"], 0),
        (["pi1", "demos/data/theta_graph.txt"], 0),
        (["pi1", "demos/data/bouquet3.json"], 0),
        (["counterexample"], 0),
    ],
)
def test_module_entry_point(argv, code):
    proc = subprocess.run(
        [sys.executable, "-m", "nielsen_schreier", *argv], capture_output=True, text=True, cwd=ROOT, timeout=120
    )
    assert proc.returncode == code, proc.stdout + proc.stderr
