"""Exhaustive ground truth over the space of proper colorings.

States are encoded in base k with vertex 0 least significant; searches
generate neighbors in ascending vertex order, then ascending color order, so
every answer is deterministic. Everything here is desk-scale machinery
guarded by a k^n cap (default 10^7).
"""

from __future__ import annotations

from .errors import ImproperInput, StateSpaceTooLarge
from .graphs import Coloring, Graph, is_proper

DEFAULT_STATE_CAP = 10 ** 7

_ENUMERATION_LIMIT = 20


def _checked_total(g: Graph, k: int, cap: int | None) -> int:
    if k < 1:
        raise ValueError("k must be positive")
    total = k ** g.n
    limit = DEFAULT_STATE_CAP if cap is None else cap
    if total > limit:
        raise StateSpaceTooLarge(f"k^n = {total} exceeds the state cap {limit}")
    return total


def encode_coloring(colors, k: int) -> int:
    code = 0
    for c in reversed(colors):
        code = code * k + (c - 1)
    return code


def decode_coloring(code: int, n: int, k: int) -> tuple[int, ...]:
    out = []
    for _ in range(n):
        code, digit = divmod(code, k)
        out.append(digit + 1)
    return tuple(out)


def _checked_coloring(g: Graph, k: int, c: Coloring, name: str) -> None:
    if len(c.colors) != g.n:
        raise ValueError(f"{name} has {len(c.colors)} entries for {g.n} vertices")
    if c.k != k:
        raise ValueError(f"{name} declares palette {c.k}, expected {k}")
    if not is_proper(g, c):
        raise ImproperInput(f"{name} is not a proper coloring")


def count_proper_colorings(g: Graph, k: int, cap: int | None = None) -> int:
    """Number of proper k-colorings, by backtracking over vertices 0..n-1."""
    _checked_total(g, k, cap)
    earlier = [[w for w in g.adjacency[v] if w < v] for v in range(g.n)]
    colors = [0] * g.n

    def count_from(v: int) -> int:
        if v == g.n:
            return 1
        total = 0
        for c in range(1, k + 1):
            if all(colors[w] != c for w in earlier[v]):
                colors[v] = c
                total += count_from(v + 1)
        colors[v] = 0
        return total

    return count_from(0)


def _proper_codes(g: Graph, k: int) -> list[int]:
    earlier = [[w for w in g.adjacency[v] if w < v] for v in range(g.n)]
    powers = [k ** v for v in range(g.n)]
    colors = [0] * g.n
    out: list[int] = []

    def extend(v: int, code: int) -> None:
        if v == g.n:
            out.append(code)
            return
        for c in range(1, k + 1):
            if all(colors[w] != c for w in earlier[v]):
                colors[v] = c
                extend(v + 1, code + (c - 1) * powers[v])
        colors[v] = 0

    extend(0, 0)
    return out


def _bfs_levels(g: Graph, k: int, start: int, total: int,
                goal: int | None = None):
    """Level-by-level BFS from `start`. Returns (distance to goal, ...) when
    `goal` is given and reached, else (None, reached count, eccentricity)."""
    powers = [k ** v for v in range(g.n)]
    visited = bytearray(total)
    visited[start] = 1
    frontier = [start]
    reached = 1
    distance = 0
    eccentricity = 0
    while frontier:
        distance += 1
        next_frontier: list[int] = []
        for code in frontier:
            colors = decode_coloring(code, g.n, k)
            for v in range(g.n):
                current = colors[v]
                for c in range(1, k + 1):
                    if c == current:
                        continue
                    if any(colors[w] == c for w in g.adjacency[v]):
                        continue
                    neighbor = code + (c - current) * powers[v]
                    if goal is not None and neighbor == goal:
                        return distance, reached, eccentricity
                    if not visited[neighbor]:
                        visited[neighbor] = 1
                        reached += 1
                        next_frontier.append(neighbor)
        if next_frontier:
            eccentricity = distance
        frontier = next_frontier
    return None, reached, eccentricity


def bfs_distance(g: Graph, k: int, alpha: Coloring, beta: Coloring,
                 cap: int | None = None) -> int | None:
    """Exact shortest walk length between two proper colorings, or None
    when they lie in different components."""
    total = _checked_total(g, k, cap)
    _checked_coloring(g, k, alpha, "alpha")
    _checked_coloring(g, k, beta, "beta")
    start = encode_coloring(alpha.colors, k)
    goal = encode_coloring(beta.colors, k)
    if start == goal:
        return 0
    distance, _, _ = _bfs_levels(g, k, start, total, goal=goal)
    return distance


def exact_diameter(g: Graph, k: int, cap: int | None = None) -> int | None:
    """Largest pairwise distance among proper colorings, or None when the
    walk space is disconnected (including the vacuous no-colorings case).

    Runs one BFS per proper coloring, so it is quadratic in the number of
    colorings; meant for tiny instances only.
    """
    total = _checked_total(g, k, cap)
    codes = _proper_codes(g, k)
    if not codes:
        return None
    best = 0
    for source in codes:
        _, reached, eccentricity = _bfs_levels(g, k, source, total)
        if reached < len(codes):
            return None
        best = max(best, eccentricity)
    return best


def enumerate_special_is(g: Graph, d: int) -> list[tuple[int, ...]]:
    """All independent sets whose members have degree at most d - 1 in g.

    Includes the empty set. Enumeration order is by candidate bitmask, so
    the result is deterministic.
    """
    if d < 1:
        raise ValueError("d must be positive")
    if g.n > _ENUMERATION_LIMIT:
        raise StateSpaceTooLarge(
            f"n = {g.n} too large for subset enumeration (limit {_ENUMERATION_LIMIT})")
    candidates = [v for v in range(g.n) if g.degree(v) <= d - 1]
    adjacency_bits = {v: sum(1 << w for w in g.adjacency[v]) for v in candidates}
    out: list[tuple[int, ...]] = []
    for bits in range(1 << len(candidates)):
        members = [candidates[i] for i in range(len(candidates)) if bits >> i & 1]
        member_bits = sum(1 << v for v in members)
        if all(adjacency_bits[v] & member_bits == 0 for v in members):
            out.append(tuple(members))
    return out
