"""Loopless multigraphs on {0, 1, ..., n} with root vertex 0.

The adjacency matrix stores edge multiplicities; Laplace-type matrices
and per-subset boundary degrees are derived from it. Includes the edge
surgeries (root-edge deletion, merging a vertex into the root) used by
the determinant-splitting checks, seeded instance generators, and a
small text/JSON file format.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, NamedTuple

from .exact_linalg import IntMatrix, matrix
from .rng import SplitMix64


@dataclass(frozen=True)
class Multigraph:
    """Symmetric nonnegative adjacency on n+1 vertices, zero diagonal."""

    n: int
    adj: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"need at least one non-root vertex, got n={self.n}")
        size = self.n + 1
        if len(self.adj) != size or any(len(row) != size for row in self.adj):
            raise ValueError(f"adjacency must be {size}x{size}")
        for i in range(size):
            if self.adj[i][i] != 0:
                raise ValueError(f"loop at vertex {i}")
            for j in range(i + 1, size):
                if self.adj[i][j] != self.adj[j][i]:
                    raise ValueError(f"adjacency not symmetric at ({i},{j})")
                if self.adj[i][j] < 0:
                    raise ValueError(f"negative multiplicity at ({i},{j})")

    def degree(self, i: int) -> int:
        return sum(self.adj[i])

    def degrees(self) -> tuple[int, ...]:
        return tuple(self.degree(i) for i in range(self.n + 1))


def from_edges(n: int, edges: Iterable[tuple[int, int, int]]) -> Multigraph:
    """Multigraph from (i, j, multiplicity) triples; unlisted pairs are 0."""
    adj = [[0] * (n + 1) for _ in range(n + 1)]
    for i, j, m in edges:
        if i == j:
            raise ValueError(f"loop edge ({i},{j})")
        if not (0 <= i <= n and 0 <= j <= n):
            raise ValueError(f"vertex out of range in edge ({i},{j})")
        adj[i][j] += m
        adj[j][i] += m
    return Multigraph(n, tuple(tuple(row) for row in adj))


def complete_multigraph(n: int, a: int, b: int) -> Multigraph:
    """Every root edge with multiplicity a, every non-root pair with b."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if a < 1 or b < 1:
        raise ValueError(f"multiplicities must be >= 1, got a={a}, b={b}")
    adj = [[0] * (n + 1) for _ in range(n + 1)]
    for i in range(1, n + 1):
        adj[0][i] = adj[i][0] = a
        for j in range(i + 1, n + 1):
            adj[i][j] = adj[j][i] = b
    return Multigraph(n, tuple(tuple(row) for row in adj))


def complete_minus_root_edges(n: int, r: int) -> Multigraph:
    """Simple complete graph on n+1 vertices minus the r root edges to the
    top-numbered vertices n-r+1, ..., n."""
    if not 0 <= r <= n:
        raise ValueError(f"r must lie in [0, {n}], got {r}")
    g = complete_multigraph(n, 1, 1)
    adj = [list(row) for row in g.adj]
    for i in range(n - r + 1, n + 1):
        adj[0][i] = adj[i][0] = 0
    return Multigraph(n, tuple(tuple(row) for row in adj))


def degree_outside(g: Multigraph, subset: Iterable[int], i: int) -> int:
    """Number of edges from i to vertices outside `subset` (root included)."""
    a = _check_subset(g, subset)
    if i not in a:
        raise ValueError(f"vertex {i} not in subset {sorted(a)}")
    return sum(g.adj[i][j] for j in range(g.n + 1) if j not in a)


def _check_subset(g: Multigraph, subset: Iterable[int]) -> frozenset[int]:
    a = frozenset(subset)
    if not a:
        raise ValueError("subset must be nonempty")
    if not a <= frozenset(range(1, g.n + 1)):
        raise ValueError(f"subset {sorted(a)} not contained in [1..{g.n}]")
    return a


class Laplacians(NamedTuple):
    l: IntMatrix
    q: IntMatrix
    ltilde: IntMatrix
    qtilde: IntMatrix


def laplacians(g: Multigraph) -> Laplacians:
    """Laplacian D - A, signless Laplacian D + A, and their truncations
    (row and column of the root removed)."""
    degs = g.degrees()
    size = g.n + 1
    l = matrix([[(degs[i] if i == j else 0) - g.adj[i][j] for j in range(size)] for i in range(size)])
    q = matrix([[(degs[i] if i == j else 0) + g.adj[i][j] for j in range(size)] for i in range(size)])
    lt = matrix([row[1:] for row in l.rows[1:]])
    qt = matrix([row[1:] for row in q.rows[1:]])
    return Laplacians(l, q, lt, qt)


def delete_root_edge(g: Multigraph, j: int) -> Multigraph:
    """Remove one copy of the edge between the root and j."""
    if not 1 <= j <= g.n:
        raise ValueError(f"vertex {j} out of range")
    if g.adj[0][j] == 0:
        raise ValueError(f"no root edge to vertex {j} to delete")
    adj = [list(row) for row in g.adj]
    adj[0][j] -= 1
    adj[j][0] -= 1
    return Multigraph(g.n, tuple(tuple(row) for row in adj))


def merge_into_root(g: Multigraph, j: int) -> Multigraph:
    """Contract vertex j into the root: its edges to other non-root
    vertices are transferred to the root, its root edges vanish, and the
    remaining vertices are renumbered densely."""
    if g.n < 2:
        raise ValueError("merging needs at least two non-root vertices")
    if not 1 <= j <= g.n:
        raise ValueError(f"vertex {j} out of range")
    kept = [0] + [v for v in range(1, g.n + 1) if v != j]
    adj = [[0] * g.n for _ in range(g.n)]
    for new_r, r in enumerate(kept):
        for new_s, s in enumerate(kept):
            if new_r == new_s:
                continue
            m = g.adj[r][s]
            if r == 0:
                m += g.adj[j][s]
            elif s == 0:
                m += g.adj[r][j]
            adj[new_r][new_s] = m
    return Multigraph(g.n - 1, tuple(tuple(row) for row in adj))


def relabel_vertices(g: Multigraph, perm: Iterable[int]) -> Multigraph:
    """Relabel non-root vertices: perm[k] is the old vertex placed at k+1."""
    perm = tuple(perm)
    if sorted(perm) != list(range(1, g.n + 1)):
        raise ValueError("perm must be a permutation of 1..n")
    order = (0,) + perm
    adj = tuple(tuple(g.adj[order[i]][order[j]] for j in range(g.n + 1)) for i in range(g.n + 1))
    return Multigraph(g.n, adj)


def random_multigraph(n: int, max_multiplicity: int, seed: int) -> Multigraph:
    """Seeded multigraph: every pair gets a uniform multiplicity in
    [0, max_multiplicity]."""
    if n < 1 or max_multiplicity < 1:
        raise ValueError("need n >= 1 and max_multiplicity >= 1")
    rng = SplitMix64(seed)
    adj = [[0] * (n + 1) for _ in range(n + 1)]
    for i in range(n + 1):
        for j in range(i + 1, n + 1):
            m = rng.randint(0, max_multiplicity)
            adj[i][j] = adj[j][i] = m
    return Multigraph(n, tuple(tuple(row) for row in adj))


def random_root_deletion(n: int, a: int, b: int, seed: int) -> Multigraph:
    """Seeded subgraph of the complete multigraph obtained by deleting a
    uniform sub-multiset of root edges only (each root multiplicity drops
    to an independent uniform value in [0, a])."""
    g = complete_multigraph(n, a, b)
    rng = SplitMix64(seed)
    adj = [list(row) for row in g.adj]
    for i in range(1, n + 1):
        kept = rng.randint(0, a)
        adj[0][i] = adj[i][0] = kept
    return Multigraph(n, tuple(tuple(row) for row in adj))


# --- file format ------------------------------------------------------------
#
# Text form: first significant line is n; each following line "i j m" sets
# multiplicity m on the pair {i, j} (0 <= i < j <= n, m >= 1); '#' starts a
# comment; unlisted pairs are 0. JSON form: {"n": int, "adj": [[...], ...]}.


class GraphFormatError(ValueError):
    """Malformed graph file; message names the offending line."""


def parse_graph(text: str) -> Multigraph:
    stripped = text.lstrip()
    if stripped.startswith("{"):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise GraphFormatError(f"invalid graph JSON: {exc}") from exc
        if not isinstance(data, dict) or "n" not in data or "adj" not in data:
            raise GraphFormatError('graph JSON needs keys "n" and "adj"')
        try:
            return Multigraph(int(data["n"]), tuple(tuple(int(x) for x in row) for row in data["adj"]))
        except (TypeError, ValueError) as exc:
            raise GraphFormatError(f"invalid graph JSON: {exc}") from exc

    n = None
    pairs: dict[tuple[int, int], int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if n is None:
            if len(fields) != 1:
                raise GraphFormatError(f"line {lineno}: expected the vertex count n alone")
            try:
                n = int(fields[0])
            except ValueError:
                raise GraphFormatError(f"line {lineno}: n is not an integer") from None
            if n < 1:
                raise GraphFormatError(f"line {lineno}: n must be >= 1")
            continue
        if len(fields) != 3:
            raise GraphFormatError(f"line {lineno}: expected 'i j m'")
        try:
            i, j, m = (int(f) for f in fields)
        except ValueError:
            raise GraphFormatError(f"line {lineno}: non-integer field") from None
        if not (0 <= i < j <= n):
            raise GraphFormatError(f"line {lineno}: need 0 <= i < j <= {n}")
        if m < 1:
            raise GraphFormatError(f"line {lineno}: multiplicity must be >= 1")
        if (i, j) in pairs:
            raise GraphFormatError(f"line {lineno}: duplicate pair ({i}, {j})")
        pairs[(i, j)] = m
    if n is None:
        raise GraphFormatError("empty graph file")
    return from_edges(n, [(i, j, m) for (i, j), m in pairs.items()])


def format_graph(g: Multigraph) -> str:
    lines = [str(g.n)]
    for i in range(g.n + 1):
        for j in range(i + 1, g.n + 1):
            if g.adj[i][j]:
                lines.append(f"{i} {j} {g.adj[i][j]}")
    return "\n".join(lines) + "\n"


def graph_to_json(g: Multigraph) -> str:
    return json.dumps({"n": g.n, "adj": [list(row) for row in g.adj]})


def read_graph_file(path: str) -> Multigraph:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_graph(fh.read())
