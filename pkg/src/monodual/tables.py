"""Cayley tables: the carrier data structure for every finite algebra here.

A table of order n is a tuple of n tuples of ints in 0..n-1, so tables are
hashable and usable as dict keys / set members directly.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import permutations

Row = tuple[int, ...]
Rows = tuple[Row, ...]


class MalformedTable(ValueError):
    pass


def as_rows(rows) -> Rows:
    """Normalise nested lists/tuples to the canonical tuple form, validating shape."""
    out = tuple(tuple(int(v) for v in row) for row in rows)
    n = len(out)
    if n == 0:
        raise MalformedTable("empty table")
    for row in out:
        if len(row) != n:
            raise MalformedTable(f"table is not square: row of length {len(row)}, order {n}")
        for v in row:
            if not 0 <= v < n:
                raise MalformedTable(f"entry {v} out of range for order {n}")
    return out


@dataclass(frozen=True)
class CayleyTable:
    """An n-by-n operation table over elements 0..n-1."""

    rows: Rows

    @classmethod
    def from_rows(cls, rows) -> "CayleyTable":
        return cls(as_rows(rows))

    @property
    def order(self) -> int:
        return len(self.rows)

    def apply(self, x: int, y: int) -> int:
        return self.rows[x][y]

    def to_json(self) -> str:
        return json.dumps({"order": self.order, "table": [list(r) for r in self.rows]})

    @classmethod
    def from_json(cls, text: str) -> "CayleyTable":
        obj = json.loads(text)
        rows = as_rows(obj["table"])
        if obj.get("order") not in (None, len(rows)):
            raise MalformedTable("declared order disagrees with table size")
        return cls(rows)


def transpose(rows: Rows) -> Rows:
    n = len(rows)
    return tuple(tuple(rows[j][i] for j in range(n)) for i in range(n))


def relabel(rows: Rows, perm) -> Rows:
    """Rename elements, old index i becoming perm[i]."""
    n = len(rows)
    inv = [0] * n
    for old, new in enumerate(perm):
        inv[new] = old
    return tuple(tuple(perm[rows[inv[i]][inv[j]]] for j in range(n)) for i in range(n))


def neutral_of(rows: Rows):
    n = len(rows)
    for e in range(n):
        if all(rows[e][x] == x == rows[x][e] for x in range(n)):
            return e
    return None


def absorbing_of(rows: Rows):
    n = len(rows)
    for a in range(n):
        if all(rows[a][x] == a == rows[x][a] for x in range(n)):
            return a
    return None


def almost_absorbing_of(rows: Rows):
    """Element absorbing against everything except itself."""
    n = len(rows)
    for a in range(n):
        if rows[a][a] != a and all(
            rows[a][x] == a == rows[x][a] for x in range(n) if x != a
        ):
            return a
    return None


def is_associative(rows: Rows) -> bool:
    n = len(rows)
    rng = range(n)
    return all(
        rows[rows[x][y]][z] == rows[x][rows[y][z]] for x in rng for y in rng for z in rng
    )


def is_commutative(rows: Rows) -> bool:
    n = len(rows)
    return all(rows[x][y] == rows[y][x] for x in range(n) for y in range(x + 1, n))


def canonical_form(rows: Rows, neutral: int = 0) -> Rows:
    """Lexicographically smallest relabeling that puts ``neutral`` at index 0."""
    n = len(rows)
    others = [x for x in range(n) if x != neutral]
    best = None
    for slots in permutations(range(1, n)):
        perm = [0] * n
        perm[neutral] = 0
        for slot, old in zip(slots, others):
            perm[old] = slot
        cand = relabel(rows, perm)
        if best is None or cand < best:
            best = cand
    return best


def canonical_form_with_opposite(rows: Rows, neutral: int = 0) -> Rows:
    """Canonical form treating a table and its transpose as the same structure."""
    return min(canonical_form(rows, neutral), canonical_form(transpose(rows), neutral))


def render_table(label: str, rows: Rows, names=None) -> str:
    """Text rendering with a header row and column of element names."""
    n = len(rows)
    if names is None:
        names = [str(i) for i in range(n)]
    width = max(len(label), max(len(s) for s in names))
    cell = max(len(s) for s in names)
    head = label.rjust(width) + " | " + " ".join(s.rjust(cell) for s in names)
    sep = "-" * (width + 1) + "+" + "-" * (len(head) - width - 2)
    lines = [head, sep]
    for i, row in enumerate(rows):
        lines.append(
            names[i].rjust(width) + " | " + " ".join(names[v].rjust(cell) for v in row)
        )
    return "\n".join(lines)
