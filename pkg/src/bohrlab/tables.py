"""Printed radius tables and their recomputation."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass

from .radii import RadiusQuery, Theorem, solve

DIFF_TOL = 5e-7

# (column label, theorem, fixed params, varied parameter name)
_COLUMNS = {
    1: [
        ("R^1_{1,m}", Theorem.R1, {"k": 1, "p": 1}, "m"),
        ("R^2_{1,m}", Theorem.R1, {"k": 1, "p": 2}, "m"),
        ("R^1_{3,m}", Theorem.R1, {"k": 3, "p": 1}, "m"),
        ("R^1_{5,m}", Theorem.R1, {"k": 5, "p": 1}, "m"),
    ],
    2: [
        ("alpha_{1,m,1}", Theorem.AlphaKMP, {"k": 1, "p": 1}, "m"),
        ("alpha_{1,m,2}", Theorem.AlphaKMP, {"k": 1, "p": 2}, "m"),
        ("alpha_{5,m,1}", Theorem.AlphaKMP, {"k": 5, "p": 1}, "m"),
        ("alpha_{k,1,1}", Theorem.AlphaKMP, {"m": 1, "p": 1}, "k"),
    ],
    3: [
        ("beta_{k,1,3}", Theorem.BetaKMP, {"m": 1, "p": 3}, "k"),
        ("beta_{1,m,3}", Theorem.BetaKMP, {"k": 1, "p": 3}, "m"),
        ("beta_{1,1,p}", Theorem.BetaKMP, {"k": 1, "m": 1}, "p"),
    ],
}

_ROWS = {
    1: [3, 4, 5, 10, 15, 20],
    2: [1, 2, 3, 4, 5, 10, 15, 20],
    3: [1, 2, 3, 4, 5, 6, 7, 8],
}

PRINTED = {
    1: [
        [0.318201, 0.469396, 0.584804, 0.647197],
        [0.328083, 0.484925, 0.624100, 0.695544],
        [0.331541, 0.492432, 0.647197, 0.724780],
        [0.333326, 0.499757, 0.685896, 0.780637],
        [0.333333, 0.499992, 0.692116, 0.795317],
        [0.333333, 0.500000, 0.693159, 0.800196],
    ],
    2: [
        [0.236068, 0.333333, 0.632447, 0.236068],
        [0.295598, 0.414214, 0.686395, 0.414214],
        [0.319053, 0.453398, 0.715894, 0.516239],
        [0.328197, 0.474627, 0.735303, 0.583776],
        [0.331555, 0.486389, 0.749217, 0.632447],
        [0.333326, 0.499516, 0.783683, 0.759593],
        [0.333333, 0.499985, 0.795743, 0.816751],
        [0.333333, 0.500000, 0.800252, 0.850170],
    ],
    3: [
        [0.472213, 0.472213, 0.381966],
        [0.648791, 0.496239, 0.445042],
        [0.725563, 0.499515, 0.472213],
        [0.770224, 0.499939, 0.485690],
        [0.800095, 0.499992, 0.492639],
        [0.821776, 0.499999, 0.496239],
        [0.838383, 0.500000, 0.498091],
        [0.851600, 0.500000, 0.499037],
    ],
}


@dataclass
class Table:
    table_id: int
    row_label: str
    rows: list
    columns: list
    values: list  # values[i][j] for rows[i], columns[j]

    def max_deviation(self) -> float:
        printed = PRINTED[self.table_id]
        return max(abs(v - p) for vr, pr in zip(self.values, printed) for v, p in zip(vr, pr))

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow([self.row_label, *self.columns])
        for row, vals in zip(self.rows, self.values):
            w.writerow([row, *(f"{v:.6f}" for v in vals)])
        return buf.getvalue()

    def to_markdown(self) -> str:
        head = f"| {self.row_label} | " + " | ".join(self.columns) + " |"
        sep = "|" + "---|" * (len(self.columns) + 1)
        body = [f"| {row} | " + " | ".join(f"{v:.6f}" for v in vals) + " |"
                for row, vals in zip(self.rows, self.values)]
        return "\n".join([head, sep, *body]) + "\n"

    def to_json(self) -> str:
        return json.dumps({
            "table": self.table_id,
            "row_label": self.row_label,
            "rows": self.rows,
            "columns": self.columns,
            "values": [[round(v, 6) for v in vals] for vals in self.values],
        }, indent=2)


def compute_table(table_id: int, tol: float = 1e-13) -> Table:
    if table_id not in _COLUMNS:
        raise ValueError("table id must be 1, 2 or 3")
    cols = _COLUMNS[table_id]
    rows = _ROWS[table_id]
    values = [
        [solve(RadiusQuery(th, **fixed, **{var: row}), tol).value for _, th, fixed, var in cols]
        for row in rows
    ]
    # tables 2 and 3 mix row parameters, so the row label is just an index
    label = "m" if table_id == 1 else "n"
    return Table(table_id, label, rows, [c[0] for c in cols], values)
