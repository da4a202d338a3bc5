#!/usr/bin/env python3
"""Write data/table2/rowNN.json: the sixteen small even string C-group graphs.

Vertices are 0-based. A label set such as {0, 2} is a double edge.
"""
import json
import pathlib
import sys


def path(labels):
    edges = []
    for i, ls in enumerate(labels):
        for l in (ls if isinstance(ls, tuple) else (ls,)):
            edges.append([i, i + 1, l])
    return len(labels) + 1, edges


def ladder(top, bottom_start, bottom, rungs):
    # top: labels along the top path; bottom row hangs under columns
    # bottom_start.. with its own path labels; rungs: {column: labels}.
    n_top = len(top) + 1
    _, edges = path(top)
    width = len(bottom) + 1
    below = {bottom_start + k: n_top + k for k in range(width)}
    for k, ls in enumerate(bottom):
        for l in (ls if isinstance(ls, tuple) else (ls,)):
            edges.append([n_top + k, n_top + k + 1, l])
    for col, ls in rungs.items():
        for l in (ls if isinstance(ls, tuple) else (ls,)):
            edges.append([col, below[col], l])
    return n_top + width, edges


ROWS = [
    ("D10", path([0, 1, 0, 1])),
    ("L2(5)", path([(0, 2), 1, 0, 1, 2])),
    ("L2(5)", path([0, 1, (2, 0), 1, 2])),
    ("A9", path([0, 1, 0, 1, 2, 3, 2, 3])),
    ("A9", ladder([3, 2, 3, 2, 1, 0], 5, [0], {5: 2, 6: (1, 2)})),
    ("A9", ladder([3, 2, 1, 0], 1, [2, 1, 0], {2: 3, 3: 3, 4: 3})),
    ("A9", ladder([3, 2, 1, 0], 1, [2, 1, 0], {2: 3, 3: (3, 2), 4: (3, 2)})),
    ("A9", ladder([1, 0, 1, 2, 3], 3, [2, 3], {3: 0, 4: 0, 5: 0})),
    ("A9", ladder([(0, 2), 1, 0, 1, 2, 3], 5, [3], {5: 1, 6: 1})),
    ("A10", path([4, 3, 4, 3, 2, 1, 0, 1, (2, 0)])),
    ("A10", path([0, 1, (0, 2), 1, 2, 3, 4, 3, 4])),
    ("A10", ladder([4, 3, (4, 2), 3, 2, 1, 0], 6, [0], {6: 2, 7: (1, 2)})),
    ("A10", ladder([(0, 2), 1, 0, 1, 2, 3, 4], 6, [4], {6: 2, 7: (3, 2)})),
    ("A11", path([(0, 2), 1, 0, 1, 2, 3, 4, (3, 5), 4, 5])),
    ("A11", path([(0, 2), 1, 0, 1, 2, 3, 4, 5, 4, (5, 3)])),
    ("A11", path([0, 1, (0, 2), 1, 2, 3, 4, (3, 5), 4, 5])),
]


def main():
    out = pathlib.Path(sys.argv[1] if len(sys.argv) > 1 else "data/table2")
    out.mkdir(parents=True, exist_ok=True)
    for idx, (name, (n, edges)) in enumerate(ROWS, 1):
        labels = max(e[2] for e in edges) + 1
        doc = {"row": idx, "name": name, "n": n, "labels": labels, "edges": sorted(edges)}
        (out / f"row{idx:02d}.json").write_text(json.dumps(doc) + "\n")


if __name__ == "__main__":
    main()
