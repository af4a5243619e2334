"""Driving everything from a JSON workspace file via the command line.

The workspace holds named spaces, functions, densities and passports; the
five subcommands (norm, passport, decide, transport, verify) print
deterministic reports and use exit codes 0 (success / true), 1 (false
verdict or failed verification), 2 (error).
"""

import json
import subprocess
import sys
import tempfile
from pathlib import Path

workspace = {
    "space": [
        {"weight": 0, "carrier": [0, 1], "density": [{"from": 0, "to": 1, "value": 1}]}
    ],
    "space2": [
        {"weight": 0, "carrier": [0, 2], "density": [{"from": 0, "to": 2, "value": 0.5}]}
    ],
    "functions": {
        "f": [
            {"component": 0, "from": 0.0, "to": 0.5, "re": 3.0, "im": 0.0},
            {"component": 0, "from": 0.5, "to": 1.0, "re": 1.0, "im": 0.0},
        ]
    },
    "densities": {"h": [{"component": 0, "from": 0, "to": 1, "value": 2}]},
    "passports": {
        "P1": {"s": [], "u": [0], "m": [2]},
        "P2": {"s": [], "u": [0], "m": [3]},
        "growth": {"s": [], "m": {"kind": "LINEAR", "params": [1, 0]}},
        "decay": {"s": [], "m": {"kind": "RECIP", "params": [1]}},
    },
}

with tempfile.TemporaryDirectory() as tmp:
    path = Path(tmp) / "demo.json"
    path.write_text(json.dumps(workspace, indent=2))

    def run(*args):
        cmd = [sys.executable, "-m", "logspaces", *args, "--file", str(path)]
        proc = subprocess.run(cmd, capture_output=True, text=True)
        print(f"$ logspaces {' '.join(args)}   -> exit {proc.returncode}")
        for line in (proc.stdout or proc.stderr).splitlines():
            print("  " + line)
        print()

    run("norm", "--fn", "f")
    run("norm", "--fn", "f", "--kind", "internal", "--h", "h")
    run("passport")
    run("decide", "--relation", "isometric", "--left", "P1", "--right", "P2")
    run("decide", "--relation", "star-iso", "--left", "growth", "--right", "decay")
    run("decide", "--relation", "isometric")  # passports built from space/space2
    run("transport")
    run("verify", "--target", "transport", "--samples", "200", "--seed", "42")
    run("verify", "--target", "weighting", "--samples", "200", "--seed", "42")
