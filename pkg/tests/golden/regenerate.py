"""Rewrite the golden outputs: ``python3 tests/golden/regenerate.py``."""

import io
import json
import os
from pathlib import Path

from hitchinkit.cli import run

HERE = Path(__file__).parent


def capture(argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(argv, out, err)
    return code, out.getvalue()


def main():
    cases = json.loads((HERE / "cases.json").read_text())
    os.chdir(HERE)
    for name, argv in cases.items():
        code, text = capture(argv)
        if code != 0:
            raise SystemExit(f"{name}: exit {code}")
        (HERE / "expected" / f"{name}.out").write_text(text)


if __name__ == "__main__":
    main()
