#!/usr/bin/env python3
"""Export every constant R-hat/projector tensor as CSV in both index conventions."""

from __future__ import annotations

import argparse
from pathlib import Path

from qnc.tensor import Space, as_matrix, tensor_parts

UULL = ("u", "u", "l", "l")


def main(argv=None) -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", type=Path, default=Path("tables"))
    args = ap.parse_args(argv)
    args.out.mkdir(parents=True, exist_ok=True)
    for space in Space:
        for name, t in sorted(tensor_parts(space).items()):
            if t.slots != UULL:
                continue
            for conv in ("lex", "paper"):
                path = args.out / f"{name}_{conv}.csv"
                path.write_text(as_matrix(t, conv).to_csv(), encoding="utf-8")
                print(path)


if __name__ == "__main__":
    main()
