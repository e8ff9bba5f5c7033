#!/usr/bin/env python3
"""Write the offline isogeny-class fixtures.

Each fixture is a normalized record for a class cited as an example of a
classification tuple: curves in template vertex order (label suffix .a1,
.a2, ... follows that order, not the upstream ordering), per-curve torsion
and 3-adic image from the tuple the class illustrates, and the cyclic-degree
matrix implied by the graph shape.  Online mode refreshes any of these from
the live API into the same schema.
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from gl2images.classifier import GRAPHS

OUT = Path(__file__).resolve().parent.parent / "src" / "gl2images" / "data" / "fixtures"

# class -> (graph, torsion per template vertex, 3-adic label per vertex)
FIXTURES = {
    "37.a": ("L1", ["1"], ["1.1.0.1"]),
    "46.a": ("L2(2)", ["2", "2"], ["1.1.0.1", "1.1.0.1"]),
    "1568.a": ("L2(2)", ["2", "2"], ["3.3.0.1", "3.3.0.1"]),
    "726.b": ("L2(2)", ["2", "2"], ["3.6.0.1", "3.6.0.1"]),
    "176.a": ("L2(3)", ["1", "1"], ["3.4.0.1", "3.4.0.1"]),
    "196.a": ("L2(3)", ["1", "1"], ["9.12.0.2", "9.12.0.2"]),
    "44.a": ("L2(3)", ["3", "1"], ["3.8.0.1", "3.8.0.2"]),
    "196.b": ("L2(3)", ["3", "1"], ["9.24.0.2", "9.24.0.4"]),
    "486.d": ("L2(3)", ["3", "1"], ["9.72.0.8", "9.72.0.16"]),
    "486.c": ("L2(3)", ["3", "1"], ["9.72.0.10", "9.72.0.14"]),
    "1369.a": ("L2(5)", ["5", "1"], ["1.1.0.1", "1.1.0.1"]),
    "338.b": ("L2(5)", ["1", "1"], ["3.6.0.1", "3.6.0.1"]),
    "43264.f": ("L2(5)", ["1", "1"], ["9.9.0.1", "9.9.0.1"]),
    "121.a": ("L2(11)", ["1", "1"], ["1.1.0.1", "1.1.0.1"]),
    "14450.b": ("L2(17)", ["1", "1"], ["1.1.0.1", "1.1.0.1"]),
    "1225.b": ("L2(37)", ["1", "1"], ["1.1.0.1", "1.1.0.1"]),
    "175.b": ("L3(9)", ["1", "1", "1"],
              ["9.12.0.1", "3.12.0.1", "9.12.0.1"]),
    "432.b": ("L3(9)", ["1", "1", "1"],
              ["9.36.0.5", "9.36.0.1", "9.36.0.4"]),
    "304.c": ("L3(9)", ["1", "1", "1"],
              ["27.36.0.1", "9.36.0.2", "27.36.0.1"]),
    "26.a": ("L3(9)", ["1", "3", "3"],
             ["9.24.0.3", "3.24.0.1", "9.24.0.1"]),
    "54.a": ("L3(9)", ["1", "3", "3"],
             ["9.72.0.11", "9.72.0.2", "9.72.0.6"]),
    "19.a": ("L3(9)", ["1", "3", "3"],
             ["27.72.0.2", "9.72.0.3", "27.72.0.1"]),
    "54.b": ("L3(9)", ["1", "3", "9"],
             ["9.72.0.12", "9.72.0.1", "9.72.0.5"]),
    "80.b": ("R4(6)", ["2", "2", "2", "2"],
             ["3.4.0.1", "3.4.0.1", "3.4.0.1", "3.4.0.1"]),
    "20.a": ("R4(6)", ["2", "2", "6", "6"],
             ["3.8.0.2", "3.8.0.2", "3.8.0.1", "3.8.0.1"]),
    "50.b": ("R4(15)", ["1", "1", "1", "1"],
             ["3.4.0.1", "3.4.0.1", "3.4.0.1", "3.4.0.1"]),
    "50.a": ("R4(15)", ["3", "3", "1", "1"],
             ["3.8.0.1", "3.8.0.1", "3.8.0.2", "3.8.0.2"]),
    "162.b": ("R4(21)", ["3", "3", "1", "1"],
              ["3.8.0.1", "3.8.0.1", "3.8.0.2", "3.8.0.2"]),
    "98.a": ("R6", ["2"] * 6,
             ["9.12.0.1", "9.12.0.1", "3.12.0.1", "3.12.0.1",
              "9.12.0.1", "9.12.0.1"]),
    "14.a": ("R6", ["2", "2", "6", "6", "6", "6"],
             ["9.24.0.3", "9.24.0.3", "3.24.0.1", "3.24.0.1",
              "9.24.0.1", "9.24.0.1"]),
    "150.b": ("S", ["2x2", "2x2", "2", "2", "2", "2", "2", "2"],
              ["3.4.0.1"] * 8),
    "30.a": ("S", ["2x6", "2x2", "6", "2", "6", "2", "6", "2"],
             ["3.8.0.1", "3.8.0.2", "3.8.0.1", "3.8.0.2",
              "3.8.0.1", "3.8.0.2", "3.8.0.1", "3.8.0.2"]),
}

# one CM class for the rejection path (degrees form the L3(9) shape)
CM_FIXTURE = {
    "class_label": "27.a",
    "curves": [
        {"label": "27.a1", "torsion": [], "three_adic_label": "1.1.0.1",
         "cm": -27},
        {"label": "27.a2", "torsion": [], "three_adic_label": "1.1.0.1",
         "cm": -27},
        {"label": "27.a3", "torsion": [3], "three_adic_label": "1.1.0.1",
         "cm": -3},
    ],
    "isogeny_matrix": [[1, 3, 9], [3, 1, 3], [9, 3, 1]],
}


def torsion_struct(token: str) -> list[int]:
    if token == "1":
        return []
    return [int(p) for p in token.split("x")]


def cyclic_degree_matrix(graph_name: str) -> list[list[int]]:
    gt = GRAPHS[graph_name]
    n = gt.nvertices
    INF = 10**9
    dist = [[INF] * n for _ in range(n)]
    for v in range(n):
        dist[v][v] = 1
    for i, j, p in gt.edges:
        dist[i][j] = min(dist[i][j], p)
        dist[j][i] = min(dist[j][i], p)
    for k in range(n):
        for i in range(n):
            for j in range(n):
                if dist[i][k] * dist[k][j] < dist[i][j]:
                    dist[i][j] = dist[i][k] * dist[k][j]
    return dist


def main() -> int:
    OUT.mkdir(parents=True, exist_ok=True)
    for cls, (graph, torsion, labels) in sorted(FIXTURES.items()):
        gt = GRAPHS[graph]
        assert len(torsion) == len(labels) == gt.nvertices, cls
        data = {
            "class_label": cls,
            "curves": [
                {
                    "label": f"{cls}{i + 1}",
                    "torsion": torsion_struct(torsion[i]),
                    "three_adic_label": labels[i],
                    "cm": 0,
                }
                for i in range(gt.nvertices)
            ],
            "isogeny_matrix": cyclic_degree_matrix(graph),
        }
        (OUT / f"{cls}.json").write_text(
            json.dumps(data, indent=1, sort_keys=True) + "\n"
        )
    (OUT / "27.a.json").write_text(
        json.dumps(CM_FIXTURE, indent=1, sort_keys=True) + "\n"
    )
    print(f"wrote {len(FIXTURES) + 1} fixtures to {OUT}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
