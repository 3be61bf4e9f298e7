#!/usr/bin/env python3
"""Scripted CLI session: writes an input document and runs every command."""

import json
import tempfile
from pathlib import Path

from hyperwall.cli import main as hyperwall
from hyperwall import basis_vector, vector_from_labels

H = vector_from_labels({"e1": 1, "f1": 1})
DELTA = basis_vector("delta")


def run(*argv):
    print(f"$ hyperwall {' '.join(argv)}")
    code = hyperwall(list(argv))
    print(f"(exit {code})")
    print()


def main():
    doc = {
        "picard_basis": [list(H), list(DELTA)],
        "g": [3, -1],
        "m": [2, 1],
    }
    with tempfile.TemporaryDirectory() as tmp:
        path = Path(tmp) / "fourfold.json"
        path.write_text(json.dumps(doc, indent=2))
        print(f"input document:\n{path.read_text()}\n")

        run("lattice-info")
        run("walls", "--input", str(path))
        run("ample", "--input", str(path))
        run("nef-threshold", "--input", str(path), "--format", "json")
        rho = ",".join(str(x) for x in DELTA)
        run("classify", "--input", str(path), "--rho", rho)
        run("lagrangian")


if __name__ == "__main__":
    main()
