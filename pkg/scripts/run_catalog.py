#!/usr/bin/env python
"""Run every invocation in catalog/manifest.json and compare exit codes."""

import json
import subprocess
import sys
from pathlib import Path

CATALOG = Path(__file__).resolve().parent.parent / "catalog"


def invoke(run: dict) -> subprocess.CompletedProcess:
    flags = []
    for f in run["flags"]:
        flags.append(str(CATALOG / f) if f.endswith(".json") else f)
    cmd = [sys.executable, "-m", "xmod", run["command"], *(str(CATALOG / p) for p in run["inputs"]), *flags]
    return subprocess.run(cmd, capture_output=True, text=True)


def main():
    runs = json.loads((CATALOG / "manifest.json").read_text())["runs"]
    bad = 0
    for run in runs:
        proc = invoke(run)
        ok = proc.returncode == run["expect_exit"]
        bad += not ok
        status = json.loads(proc.stdout)["status"] if proc.stdout else "?"
        print(f"{'ok ' if ok else 'BAD'} exit={proc.returncode} {status:5} {run['command']} {' '.join(run['inputs'])} {' '.join(run['flags'])}")
    print(f"{len(runs) - bad}/{len(runs)} as expected")
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
