#!/usr/bin/env python3
"""Extract the numbered display equations of chapters 2-5 and both appendices.

Writes ``src/qnc/data/equations.json``: one record per equation number with the
LaTeX of its display block (plus directly following unnumbered displays).
Labelled blocks use their labels; unlabelled blocks are counted one number per
block within their chapter.

    python scripts/build_inventory.py path/to/source.md
"""

from __future__ import annotations

import argparse
import json
import re
from pathlib import Path

BLOCK = re.compile(r"\\begin\{(equation|eqnarray)\}(.*?)\\end\{\1\}", re.S)
TRAILING = re.compile(r"\s*(?:\\\\\[\d+(?:mm|ex)\])?\s*\\\[(.*?)\\\]", re.S)
CHAPTER = re.compile(r"\\(?:S|s)ection\{([^}]*)\}")

CHAPTER_KEYS = {
    "Euclidean plane": "2",
    "Euclidean Phase Space": "3",
    "Minkowski space": "4",
    "Minkowski Phase Space": "5",
    "Appendix 1": "A1",
    "Appendix 2": "A2",
}


def _chapters(text: str) -> list[tuple[int, str]]:
    out = []
    for m in CHAPTER.finditer(text):
        key = CHAPTER_KEYS.get(m.group(1).strip())
        if key:
            out.append((m.start(), key))
    return out


def _chapter_at(pos: int, marks: list[tuple[int, str]]):
    cur = None
    for start, key in marks:
        if start <= pos:
            cur = key
    return cur


def _squash(s: str) -> str:
    s = re.sub(r"\\(?:hspace|vspace)\*?\{[^}]*\}", " ", s)
    return " ".join(s.split())


def extract(text: str) -> list[dict]:
    marks = _chapters(text)
    counters: dict[str, int] = {}
    records = []
    for m in BLOCK.finditer(text):
        chap = _chapter_at(m.start(), marks)
        if chap is None:
            continue
        body = m.group(2)
        end = m.end()
        while True:
            t = TRAILING.match(text, end)
            if not t:
                break
            body += "\n" + t.group(1)
            end = t.end()
        labels = re.findall(r"\\label\{([^}]*)\}", body)
        body = re.sub(r"\\label\{[^}]*\}", "", body)
        if labels:
            numbers = [lab if "." in lab else f"{chap}.{lab}" for lab in labels]
        else:
            counters[chap] = counters.get(chap, 0) + 1
            numbers = [f"{chap}.{counters[chap]}"]
        for n in numbers:
            records.append({"number": n, "chapter": chap, "latex": _squash(body)})
    return records


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("source", type=Path)
    ap.add_argument("--out", type=Path,
                    default=Path(__file__).resolve().parents[1] / "src" / "qnc" / "data" / "equations.json")
    args = ap.parse_args()
    records = extract(args.source.read_text(encoding="utf-8"))
    args.out.write_text(json.dumps(records, indent=1, ensure_ascii=False) + "\n", encoding="utf-8")
    print(f"{len(records)} equations -> {args.out}")


if __name__ == "__main__":
    main()
