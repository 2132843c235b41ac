"""Degree-layer partitions of a graph.

A partition with parameter s lists disjoint non-empty layers V_1..V_t
covering every vertex, where each V_i is an independent set and each of its
members has degree at most s in the graph left after removing V_1..V_{i-1}.
Two constructions are provided: greedy low-degree peeling for graphs of
bounded maximum average degree (layer count logarithmic in n), and singleton
layers in degeneracy-removal order for everything else (layer count n).

Layer indices are 0-based in code. Serialized form: a line ``s t`` followed
by one line of ascending vertex ids per layer.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import SizeGuaranteeViolated
from .graphs import Graph, degeneracy_ordering


@dataclass(frozen=True)
class SpecialISParams:
    """Peeling parameters: degree bound d and exact rational slack epsilon.

    Guarantees hold whenever the maximum average degree of the graph being
    peeled is at most d - epsilon; every extracted layer then has size at
    least ceil(epsilon * h / d^2) on an h-vertex residual graph.
    """

    d: int
    epsilon: Fraction

    def __post_init__(self):
        if self.d < 1:
            raise ValueError("d must be a positive integer")
        eps = Fraction(self.epsilon)
        object.__setattr__(self, "epsilon", eps)
        if not 0 < eps < self.d:
            raise ValueError("epsilon must satisfy 0 < epsilon < d")

    def threshold(self, h: int) -> int:
        """Guaranteed layer size on an h-vertex residual graph."""
        num = self.epsilon.numerator * h
        den = self.epsilon.denominator * self.d * self.d
        return -(-num // den)


@dataclass(frozen=True)
class DegreePartition:
    s: int
    layers: tuple[tuple[int, ...], ...]

    @property
    def t(self) -> int:
        return len(self.layers)

    def layer_index(self) -> tuple[int, ...]:
        """Vertex -> 0-based layer index (assumes the layers cover 0..n-1)."""
        n = sum(len(layer) for layer in self.layers)
        out = [-1] * n
        for i, layer in enumerate(self.layers):
            for v in layer:
                out[v] = i
        return tuple(out)


@dataclass(frozen=True)
class EmbeddedOrdering:
    """Layer-respecting vertex ordering, stored first layer first.

    Positions never decrease in layer index, and every vertex has at most s
    neighbors at strictly later positions (same-layer neighbors cannot exist
    because layers are independent sets).
    """

    order: tuple[int, ...]
    layer_of: tuple[int, ...]     # vertex -> 0-based layer index
    position_of: tuple[int, ...]  # vertex -> index into `order`


@dataclass(frozen=True)
class LayeredSubgraphRef:
    """The union of the first `boundary` layers of a partition (1-based count)."""

    boundary: int

    def __post_init__(self):
        if self.boundary < 1:
            raise ValueError("boundary must be at least 1")


def _greedy_low_degree_is(g: Graph, active: set[int], d: int) -> list[int]:
    # Candidates are the active vertices of residual degree <= d-1, scanned
    # in ascending id; each pick blocks at most d - 1 later candidates.
    chosen: list[int] = []
    blocked: set[int] = set()
    for v in sorted(active):
        if v in blocked:
            continue
        residual_degree = sum(1 for w in g.adjacency[v] if w in active)
        if residual_degree <= d - 1:
            chosen.append(v)
            blocked.update(g.adjacency[v])
    return chosen


def _extract_layer(g: Graph, active: set[int], params: SpecialISParams,
                   round_index: int | None) -> tuple[int, ...]:
    chosen = _greedy_low_degree_is(g, active, params.d)
    need = params.threshold(len(active))
    if len(chosen) < need:
        raise SizeGuaranteeViolated(len(chosen), need, len(active), round_index)
    return tuple(chosen)


def special_independent_set(g: Graph, params: SpecialISParams) -> tuple[int, ...]:
    """Independent set of vertices of degree <= d-1, of guaranteed size.

    Greedy over low-degree vertices in ascending id order. Raises
    SizeGuaranteeViolated when the result is smaller than
    ceil(epsilon*n/d^2), the symptom of a density precondition failure.
    """
    return _extract_layer(g, set(range(g.n)), params, round_index=None)


def build_degree_partition(g: Graph, params: SpecialISParams) -> DegreePartition:
    """Peel greedy low-degree independent sets until the graph is exhausted.

    The result has s = d - 1. Each round shrinks an h-vertex residual to at
    most h - ceil(epsilon*h/d^2) vertices, so the layer count never exceeds
    partition_round_bound(n, params).
    """
    active = set(range(g.n))
    layers = []
    round_index = 1
    while active:
        layer = _extract_layer(g, active, params, round_index)
        layers.append(layer)
        active.difference_update(layer)
        round_index += 1
    return DegreePartition(s=params.d - 1, layers=tuple(layers))


def partition_round_bound(n: int, params: SpecialISParams) -> int:
    """Smallest r with n * (1 - epsilon/d^2)^r < 1, computed exactly.

    Explicit form of the peeling recurrence; build_degree_partition never
    needs more rounds than this.
    """
    shrink = 1 - params.epsilon / (params.d * params.d)
    remaining = Fraction(max(n, 0))
    rounds = 0
    while remaining >= 1:
        remaining *= shrink
        rounds += 1
    return rounds


def degree_partition_from_degeneracy(g: Graph) -> DegreePartition:
    """Singleton layers in degeneracy-removal order; s is the degeneracy.

    The vertex removed first (a minimum-degree one) becomes the first
    layer, so each singleton has at most s neighbors in later layers.
    """
    ordering, degeneracy = degeneracy_ordering(g)
    removal = tuple(reversed(ordering))
    return DegreePartition(s=degeneracy, layers=tuple((v,) for v in removal))


def validate_partition(g: Graph, p: DegreePartition) -> str | None:
    """None when the partition is valid, else a message naming the first violation."""
    seen: dict[int, int] = {}
    for i, layer in enumerate(p.layers):
        if not layer:
            return f"layer {i + 1} is empty"
        for v in layer:
            if not 0 <= v < g.n:
                return f"layer {i + 1} contains out-of-range vertex {v}"
            if v in seen:
                return f"vertex {v} appears in layers {seen[v] + 1} and {i + 1}"
            seen[v] = i
    for v in range(g.n):
        if v not in seen:
            return f"vertex {v} uncovered"
    layer_of = [seen[v] for v in range(g.n)]
    for i, layer in enumerate(p.layers):
        for v in sorted(layer):
            residual_degree = 0
            for w in g.adjacency[v]:
                if layer_of[w] == i:
                    return (f"layer {i + 1} not independent: vertices "
                            f"{min(v, w)} and {max(v, w)} adjacent")
                if layer_of[w] > i:
                    residual_degree += 1
            if residual_degree > p.s:
                return (f"vertex {v} has degree {residual_degree} > s={p.s} "
                        f"in the residual graph at layer {i + 1}")
    return None


def embedded_ordering(p: DegreePartition) -> EmbeddedOrdering:
    """Concatenate layers in order, ascending vertex ids within each layer."""
    order: list[int] = []
    for layer in p.layers:
        order.extend(sorted(layer))
    n = len(order)
    layer_of = [0] * n
    for i, layer in enumerate(p.layers):
        for v in layer:
            layer_of[v] = i
    position_of = [0] * n
    for pos, v in enumerate(order):
        position_of[v] = pos
    return EmbeddedOrdering(tuple(order), tuple(layer_of), tuple(position_of))


def later_layer_degree(g: Graph, p: DegreePartition, v: int) -> int:
    """Number of neighbors of v lying in layers strictly after v's layer."""
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} out of range")
    layer_of = p.layer_index()
    mine = layer_of[v]
    return sum(1 for w in g.adjacency[v] if layer_of[w] > mine)


def serialize_partition(p: DegreePartition) -> str:
    lines = [f"{p.s} {p.t}"]
    lines.extend(" ".join(str(v) for v in sorted(layer)) for layer in p.layers)
    return "\n".join(lines) + "\n"
