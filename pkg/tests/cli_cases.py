"""The golden CLI runs shared by the CLI tests and the acceptance suite."""
from __future__ import annotations

import io
from pathlib import Path

from rpkernel.cli import main

GOLDEN = Path(__file__).parent / "golden"

# (fixture, subcommand, extra arguments, expected exit code)
CASES = [
    ("QT4", "classify", [], 0),
    ("QT4", "solve", [], 0),
    ("QT4", "validate", ["--kernel", "x"], 0),
    ("CB5", "classify", [], 0),
    ("CB5", "solve", [], 0),
    ("CB5", "validate", ["--kernel", "u1"], 0),
    ("TB4", "classify", [], 0),
    ("TB4", "solve", [], 0),
    ("TB4", "validate", ["--kernel", "u4"], 0),
    ("FIG4", "classify", [], 0),
    ("FIG4", "solve", [], 1),
    ("FIG4", "validate", ["--kernel", "y1,y2"], 1),
]


def run(argv: list[str]) -> tuple[int, str, str]:
    out, err = io.StringIO(), io.StringIO()
    code = main(argv, out, err)
    return code, out.getvalue(), err.getvalue()


def run_case(name: str, command: str, extra: list[str]) -> tuple[int, str]:
    code, out, _ = run([command, "--json", str(GOLDEN / f"{name}.json"), *extra])
    return code, out


def golden_path(name: str, command: str) -> Path:
    return GOLDEN / f"{name}.{command}.json"
