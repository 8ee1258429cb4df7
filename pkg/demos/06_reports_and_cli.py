"""Deterministic reports and the command line surface.

The JSON writer is canonical: sorted keys, shortest round-trip floats,
newline-terminated. Two runs with the same seed produce byte-identical
documents once the timestamp is fixed, which makes reports diffable.

Run with: python3 demos/06_reports_and_cli.py
"""

import json
import subprocess
import sys
import tempfile
from pathlib import Path

import opineq
from opineq import (
    CampaignConfig,
    ReportDocument,
    canonical_dumps,
    render_csv,
    render_json,
    run_campaign,
)


def main():
    config = CampaignConfig(theorem_ids=("scalar_amgm", "choi"), dims=(2, 3),
                            samples=10, seed=9)
    stamp = "2026-01-01T00:00:00+00:00"
    doc = ReportDocument.from_campaign(run_campaign(config), opineq.__version__,
                                       timestamp=stamp)
    again = ReportDocument.from_campaign(run_campaign(config), opineq.__version__,
                                         timestamp=stamp)
    print("same seed, byte identical:", render_json(doc) == render_json(again))

    print("canonical float spelling:", canonical_dumps({"x": 0.1, "n": 1.0}))
    print("csv head:", render_csv(doc).splitlines()[0])

    blob = json.loads(render_json(doc))
    print("round trip intact:",
          render_json(ReportDocument.from_dict(blob)) == render_json(doc))

    # the same machinery over the installed command line entry point
    with tempfile.TemporaryDirectory() as tmp:
        out = Path(tmp) / "report.json"
        proc = subprocess.run(
            [sys.executable, "-m", "opineq", "verify", "--theorems",
             "scalar_amgm,kantorovich", "--dims", "2,3", "--samples", "25",
             "--seed", "4", "--out", str(out)],
            capture_output=True, text=True)
        print("cli exit code:", proc.returncode)
        print("cli summary line:", proc.stdout.splitlines()[-1])
        print("report rows on disk:", len(json.loads(out.read_text())["results"]))

    proc = subprocess.run(
        [sys.executable, "-m", "opineq", "constants", "--m", "1", "--mp", "2",
         "--Mp", "3", "--M", "4"], capture_output=True, text=True)
    print("constants table:")
    for line in proc.stdout.splitlines():
        print(" ", line)


if __name__ == "__main__":
    main()
