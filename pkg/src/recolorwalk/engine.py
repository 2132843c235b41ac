"""Construction of single-vertex recoloring walks between proper colorings.

All machinery runs over one fixed degree-layer partition and its embedded
ordering. Storage direction: orderings are stored first layer first, and
every scanning pass runs from the last position toward the first, so "later
position" always implies "strictly later layer" for neighbors (same-layer
neighbors cannot exist, layers being independent sets).

Recursion never materializes subgraphs. Each recursive call receives a
vertex mask and recolors masked vertices only; vertices outside a call's
mask but within its layer range always hold colors outside the call's
palette, so they can never block a recoloring to a palette color. The code
does not *rely* on that invariant for safety: every single recoloring is
assertion-checked for properness against the full graph, so a broken
precondition surfaces as an AssertionError rather than an invalid walk.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .errors import ImproperInput, PaletteTooSmall, SequenceViolation
from .graphs import Coloring, Graph, is_proper
from .layering import (
    DegreePartition,
    EmbeddedOrdering,
    LayeredSubgraphRef,
    SpecialISParams,
    build_degree_partition,
    embedded_ordering,
    validate_partition,
)


@dataclass(frozen=True)
class RecoloringStep:
    vertex: int
    new_color: int


@dataclass(frozen=True)
class RecoloringSequence:
    """A walk in the space of proper colorings, anchored at `initial`.

    Every prefix application yields a proper coloring, and no step recolors
    a vertex to the color it already has.
    """

    initial: Coloring
    steps: tuple[RecoloringStep, ...]


@dataclass(frozen=True)
class RecolorStats:
    per_vertex: tuple[int, ...]
    total: int
    max_per_vertex: int


@dataclass(frozen=True)
class WorkSets:
    """Instrumentation snapshot of one inner layer-clearing call.

    `w` is the still-target-colored part of the active layer when the call
    started, `w_a` the part cleared by this call, `u` the masked vertices of
    earlier layers. `depth` is the layer-depth budget of the enclosing
    elimination; `inner_mask_later_degree` the largest within-mask
    later-layer degree of u minus the promoted set (-1 when empty), which
    the recursion requires to be strictly below `depth`.
    """

    layer: int
    target: int
    color: int
    w: tuple[int, ...]
    w_a: tuple[int, ...]
    u: tuple[int, ...]
    depth: int
    promoted_to_target: tuple[int, ...]
    promoted_to_color: tuple[int, ...]
    w_a_recolor_counts: tuple[int, ...]
    inner_mask_later_degree: int


@dataclass
class EliminationTrace:
    """Collects one WorkSets record per inner layer-clearing call."""

    claims: list[WorkSets] = field(default_factory=list)


class _WalkState:
    """Mutable replay state: current colors, recorded steps, per-vertex counts."""

    __slots__ = ("g", "colors", "steps", "olds", "counts")

    def __init__(self, g: Graph, start: Coloring):
        self.g = g
        self.colors = list(start.colors)
        self.steps: list[RecoloringStep] = []
        self.olds: list[int] = []
        self.counts = [0] * g.n

    def recolor(self, v: int, color: int) -> None:
        old = self.colors[v]
        assert old != color, f"no-op recoloring of vertex {v}"
        for w in self.g.adjacency[v]:
            assert self.colors[w] != color, \
                f"recoloring vertex {v} to {color} clashes with neighbor {w}"
        self.steps.append(RecoloringStep(v, color))
        self.olds.append(old)
        self.colors[v] = color
        self.counts[v] += 1


def _promote(state: _WalkState, ord_: EmbeddedOrdering, mask: frozenset[int],
             target: int) -> frozenset[int]:
    # Scan masked vertices from the last position toward the first,
    # recoloring each to `target` whenever no neighbor currently holds it.
    taken = set()
    colors = state.colors
    adjacency = state.g.adjacency
    for v in reversed(ord_.order):
        if v not in mask:
            continue
        if colors[v] == target:
            taken.add(v)
            continue
        if all(colors[w] != target for w in adjacency[v]):
            state.recolor(v, target)
            taken.add(v)
    return frozenset(taken)


def _active_depth(state: _WalkState, ord_: EmbeddedOrdering, boundary: int,
                  palette: frozenset[int], mask: frozenset[int]) -> int:
    # Largest number of later-layer neighbors that could ever hold a palette
    # color during this call: masked neighbors (they stay inside the
    # palette) plus unmasked ones currently colored from it.
    layer_of = ord_.layer_of
    colors = state.colors
    best = 0
    for v in mask:
        lv = layer_of[v]
        if lv >= boundary:
            continue
        count = 0
        for w in state.g.adjacency[v]:
            if layer_of[w] > lv and (w in mask or colors[w] in palette):
                count += 1
        if count > best:
            best = count
    return best


def _claim_depth(g: Graph, ord_: EmbeddedOrdering, u_set: frozenset[int],
                 w_a: tuple[int, ...]) -> int:
    # Forward degree within u_set | w_a alone; zero means the direct
    # recoloring base case is safe (no edges from u into w_a).
    members = u_set | set(w_a)
    pos = ord_.position_of
    best = 0
    for v in members:
        count = sum(1 for w in g.adjacency[v] if w in members and pos[w] > pos[v])
        if count > best:
            best = count
    return best


def _masked_later_degree_max(g: Graph, ord_: EmbeddedOrdering,
                             mask: frozenset[int]) -> int:
    layer_of = ord_.layer_of
    best = -1
    for v in mask:
        count = sum(1 for w in g.adjacency[v]
                    if w in mask and layer_of[w] > layer_of[v])
        if count > best:
            best = count
    return best


def _eliminate(state: _WalkState, ord_: EmbeddedOrdering, boundary: int,
               target: int, palette: frozenset[int], mask: frozenset[int],
               trace: EliminationTrace | None) -> None:
    """Purge `target` from the masked part of layers 0..boundary-1.

    Loop invariant between rounds: the lowest layer holding `target` within
    the masked boundary strictly increases, because a round ends with the
    active layer and everything below it target-free.
    """
    if boundary <= 0 or not mask:
        return
    depth = _active_depth(state, ord_, boundary, palette, mask)
    if len(palette) < depth + 2:
        raise PaletteTooSmall(
            f"palette of {len(palette)} colors cannot clear a color at layer "
            f"depth {depth}; at least {depth + 2} colors are needed")
    layer_of = ord_.layer_of
    while True:
        h = None
        for v in mask:
            if state.colors[v] == target and layer_of[v] < boundary:
                if h is None or layer_of[v] < h:
                    h = layer_of[v]
        if h is None:
            break
        u_set = frozenset(v for v in mask if layer_of[v] < h)
        for a in sorted(palette - {target}):
            w_current = tuple(v for v in sorted(mask)
                              if layer_of[v] == h and state.colors[v] == target)
            if not w_current:
                break
            pos = ord_.position_of
            w_a = tuple(v for v in w_current
                        if all(state.colors[w] != a
                               for w in state.g.adjacency[v] if pos[w] > pos[v]))
            if not w_a:
                continue
            _clear_layer(state, ord_, h, target, a, u_set, w_a, w_current,
                         depth, palette, trace)
        assert not any(state.colors[v] == target
                       for v in mask if layer_of[v] == h), \
            "active layer not cleared; some vertex fit no replacement color"


def _clear_layer(state: _WalkState, ord_: EmbeddedOrdering, h: int,
                 target: int, a: int, u_set: frozenset[int],
                 w_a: tuple[int, ...], w_current: tuple[int, ...], depth: int,
                 palette: frozenset[int],
                 trace: EliminationTrace | None) -> None:
    """Move the w_a vertices from `target` to `a`, recoloring only u_set | w_a.

    General shape: promote u toward `target` (freeing `a`-space below),
    recursively purge `a` from the unpromoted rest, recolor w_a directly,
    then repeat the first two phases with `a` and `target` interchanged so
    u ends target-free again. When u | w_a has no internal forward edges the
    direct recoloring alone is already proper.
    """
    g = state.g
    pos = ord_.position_of
    assert all(state.colors[v] != target for v in u_set), \
        "earlier layers must be target-free on entry"
    for v in w_a:
        assert state.colors[v] == target
        assert all(state.colors[w] != a
                   for w in g.adjacency[v] if pos[w] > pos[v])
    counts_before = {v: state.counts[v] for v in w_a}
    if depth == 0 or _claim_depth(g, ord_, u_set, w_a) == 0:
        for v in sorted(w_a):
            state.recolor(v, a)
        promoted_first: frozenset[int] = frozenset()
        promoted_second: frozenset[int] = frozenset()
        inner_later = -1
    else:
        promoted_first = _promote(state, ord_, u_set, target)
        inner = u_set - promoted_first
        inner_later = _masked_later_degree_max(g, ord_, inner)
        assert inner_later < depth, \
            "promotion must strictly reduce the masked layer depth"
        _eliminate(state, ord_, h, a, palette - {target}, inner, trace)
        for v in sorted(w_a):
            state.recolor(v, a)
        promoted_second = _promote(state, ord_, u_set, a)
        _eliminate(state, ord_, h, target, palette - {a},
                   u_set - promoted_second, trace)
    assert all(state.colors[v] != target for v in u_set)
    assert all(state.colors[v] == a for v in w_a)
    deltas = tuple(state.counts[v] - counts_before[v] for v in sorted(w_a))
    assert all(delta <= 1 for delta in deltas), \
        "a cleared vertex may be recolored at most once"
    if trace is not None:
        trace.claims.append(WorkSets(
            layer=h,
            target=target,
            color=a,
            w=w_current,
            w_a=tuple(sorted(w_a)),
            u=tuple(sorted(u_set)),
            depth=depth,
            promoted_to_target=tuple(sorted(promoted_first)),
            promoted_to_color=tuple(sorted(promoted_second)),
            w_a_recolor_counts=deltas,
            inner_mask_later_degree=inner_later,
        ))


def _between(a_state: _WalkState, b_state: _WalkState, p: DegreePartition,
             ord_: EmbeddedOrdering, mask: frozenset[int],
             palette: frozenset[int], trace: EliminationTrace | None) -> None:
    """Drive both sides to a common coloring of the masked vertices.

    With two colors left the masked subgraph has no internal edges, so the
    first side can copy the second directly. Otherwise both sides purge the
    top color and promote toward it; promotion after a purge is a pure
    function of the mask and ordering, so the promoted sets coincide and the
    recursion may drop them from the mask together with the top color.
    """
    if len(palette) <= 2:
        for v in sorted(mask):
            if a_state.colors[v] != b_state.colors[v]:
                a_state.recolor(v, b_state.colors[v])
        return
    target = max(palette)
    _eliminate(a_state, ord_, p.t, target, palette, mask, trace)
    _eliminate(b_state, ord_, p.t, target, palette, mask, trace)
    promoted_a = _promote(a_state, ord_, mask, target)
    promoted_b = _promote(b_state, ord_, mask, target)
    assert promoted_a == promoted_b, \
        "the two promotion sweeps must agree on the shared set"
    _between(a_state, b_state, p, ord_, mask - promoted_a,
             palette - {target}, trace)


def _checked_inputs(g: Graph, p: DegreePartition, colorings: dict[str, Coloring],
                    k: int | None = None) -> None:
    problem = validate_partition(g, p)
    if problem is not None:
        raise ValueError(f"invalid partition: {problem}")
    for name, c in colorings.items():
        if len(c.colors) != g.n:
            raise ValueError(
                f"{name} has {len(c.colors)} entries for {g.n} vertices")
        if k is not None and c.k != k:
            raise ValueError(f"{name} declares palette {c.k}, expected {k}")
        if not is_proper(g, c):
            raise ImproperInput(f"{name} is not a proper coloring")


def greedy_promote(g: Graph, ord_: EmbeddedOrdering, c: Coloring, target: int,
                   mask: Iterable[int]) -> tuple[RecoloringSequence, tuple[int, ...]]:
    """Single promotion sweep toward `target` over the masked vertices.

    Processes positions last to first, recoloring a vertex whenever no
    neighbor currently holds `target`. Returns the steps and the set of
    masked vertices holding `target` afterwards. When no masked vertex held
    `target` initially and no neighbor outside the mask does either, that
    set is the greedy maximal independent set of the masked subgraph in
    processing order, independent of the coloring.
    """
    if len(c.colors) != g.n:
        raise ValueError(f"coloring has {len(c.colors)} entries for {g.n} vertices")
    if not is_proper(g, c):
        raise ImproperInput("input coloring is not proper")
    mask_set = frozenset(mask)
    if any(not 0 <= v < g.n for v in mask_set):
        raise ValueError("mask contains out-of-range vertices")
    state = _WalkState(g, c)
    taken = _promote(state, ord_, mask_set, target)
    return RecoloringSequence(c, tuple(state.steps)), tuple(sorted(taken))


def eliminate_color(g: Graph, p: DegreePartition, f: LayeredSubgraphRef,
                    c: Coloring, target: int, palette: Iterable[int],
                    mask: Iterable[int] | None = None,
                    trace: EliminationTrace | None = None) -> RecoloringSequence:
    """Recolor so `target` disappears from the masked part of the first
    f.boundary layers, touching nothing outside it.

    `palette` must contain `target`, cover every color used on the mask, and
    exceed the masked layer depth by at least 2. Callers passing a partial
    mask must guarantee that unmasked vertices within the boundary hold
    colors outside the palette.
    """
    _checked_inputs(g, p, {"input coloring": c})
    if not 1 <= f.boundary <= p.t:
        raise ValueError(f"boundary {f.boundary} outside 1..{p.t}")
    palette_set = frozenset(palette)
    if target not in palette_set:
        raise ValueError(f"target color {target} not in the palette")
    mask_set = (frozenset(range(g.n)) if mask is None else frozenset(mask))
    if any(not 0 <= v < g.n for v in mask_set):
        raise ValueError("mask contains out-of-range vertices")
    for v in sorted(mask_set):
        if c.colors[v] not in palette_set:
            raise ImproperInput(
                f"vertex {v} holds color {c.colors[v]} outside the palette")
    state = _WalkState(g, c)
    ord_ = embedded_ordering(p)
    _eliminate(state, ord_, f.boundary, target, palette_set, mask_set, trace)
    return RecoloringSequence(c, tuple(state.steps))


def clear_layer_color(g: Graph, p: DegreePartition, ord_: EmbeddedOrdering,
                      c: Coloring, target: int, a: int, u: Iterable[int],
                      w_a: Iterable[int], depth: int,
                      trace: EliminationTrace | None = None) -> RecoloringSequence:
    """One inner clearing call: move w_a from `target` to `a` using only
    u | w_a, against the full palette {1..c.k}.

    Preconditions (no vertex of u holds `target`; every w_a vertex holds
    `target` and has no later-position neighbor colored `a`) are asserted,
    not assumed.
    """
    _checked_inputs(g, p, {"input coloring": c})
    w_a_tuple = tuple(sorted(set(w_a)))
    if not w_a_tuple:
        return RecoloringSequence(c, ())
    layer_of = ord_.layer_of
    layers = {layer_of[v] for v in w_a_tuple}
    if len(layers) != 1:
        raise ValueError("w_a must lie within a single layer")
    h = layers.pop()
    u_set = frozenset(u)
    if any(layer_of[v] >= h for v in u_set):
        raise ValueError("u must lie in layers before the w_a layer")
    state = _WalkState(g, c)
    palette = frozenset(range(1, c.k + 1))
    _clear_layer(state, ord_, h, target, a, u_set, w_a_tuple, w_a_tuple,
                 depth, palette, trace)
    return RecoloringSequence(c, tuple(state.steps))


def reduce_palette(g: Graph, p: DegreePartition, c: Coloring, k: int,
                   target_size: int,
                   trace: EliminationTrace | None = None) -> RecoloringSequence:
    """Eliminate colors k, k-1, ..., target_size+1 from the whole graph.

    Bridges an arbitrary palette down to the target_size >= s+2 colors the
    walk recursion wants.
    """
    _checked_inputs(g, p, {"input coloring": c}, k=k)
    if target_size < p.s + 2:
        raise PaletteTooSmall(
            f"target palette {target_size} below the required {p.s + 2}")
    state = _WalkState(g, c)
    ord_ = embedded_ordering(p)
    mask = frozenset(range(g.n))
    for j in range(k, target_size, -1):
        _eliminate(state, ord_, p.t, j, frozenset(range(1, j + 1)), mask, trace)
    return RecoloringSequence(c, tuple(state.steps))


def recolor_between(g: Graph, p: DegreePartition, alpha: Coloring,
                    beta: Coloring, k: int,
                    trace: EliminationTrace | None = None) -> RecoloringSequence:
    """Emit a walk from alpha to beta in the space of proper k-colorings.

    Both sides are first reduced to s+2 colors, then recursively driven to a
    common coloring (purge top color, promote toward it, recurse on the rest
    with one color fewer). The emitted sequence is the alpha-side steps
    followed by the beta-side steps reversed, each reversed step restoring
    the color the vertex held before that step.
    """
    _checked_inputs(g, p, {"alpha": alpha, "beta": beta}, k=k)
    if k < p.s + 2:
        raise PaletteTooSmall(
            f"k = {k} but the partition needs at least {p.s + 2} colors")
    ord_ = embedded_ordering(p)
    a_state = _WalkState(g, alpha)
    b_state = _WalkState(g, beta)
    mask = frozenset(range(g.n))
    for j in range(k, p.s + 2, -1):
        palette = frozenset(range(1, j + 1))
        _eliminate(a_state, ord_, p.t, j, palette, mask, trace)
        _eliminate(b_state, ord_, p.t, j, palette, mask, trace)
    _between(a_state, b_state, p, ord_, mask,
             frozenset(range(1, p.s + 3)), trace)
    assert a_state.colors == b_state.colors, \
        "both sides must meet at the same coloring"
    steps = list(a_state.steps)
    for i in range(len(b_state.steps) - 1, -1, -1):
        steps.append(RecoloringStep(b_state.steps[i].vertex, b_state.olds[i]))
    return RecoloringSequence(alpha, tuple(steps))


def recolor_theorem_pipeline(
    g: Graph, d: int, epsilon, alpha: Coloring, beta: Coloring, k: int,
    trace: EliminationTrace | None = None,
) -> tuple[RecoloringSequence, RecolorStats, DegreePartition]:
    """End-to-end walk construction for graphs of maximum average degree
    at most d - epsilon: build the (d-1)-depth partition, then walk.
    """
    if k < d + 1:
        raise PaletteTooSmall(f"k = {k} but at least d + 1 = {d + 1} colors are needed")
    params = SpecialISParams(d=d, epsilon=epsilon)
    partition = build_degree_partition(g, params)
    seq = recolor_between(g, partition, alpha, beta, k, trace)
    return seq, sequence_stats(seq), partition


def verify_sequence(g: Graph, alpha: Coloring,
                    seq: RecoloringSequence | Iterable[RecoloringStep],
                    k: int) -> Coloring:
    """Replay a step list from alpha, checking every walk rule.

    Raises SequenceViolation naming the first offending step (index -1 for
    a bad initial coloring); returns the final coloring on success.
    """
    steps = seq.steps if isinstance(seq, RecoloringSequence) else tuple(seq)
    if len(alpha.colors) != g.n:
        raise ValueError(f"coloring has {len(alpha.colors)} entries for {g.n} vertices")
    colors = list(alpha.colors)
    for v in range(g.n):
        if not 1 <= colors[v] <= k:
            raise SequenceViolation(-1, f"initial color of vertex {v} outside 1..{k}")
    for u, v in g.edges():
        if colors[u] == colors[v]:
            raise SequenceViolation(-1, f"initial coloring improper on edge ({u}, {v})")
    for i, step in enumerate(steps):
        v, c = step.vertex, step.new_color
        if not 0 <= v < g.n:
            raise SequenceViolation(i, f"vertex {v} out of range")
        if not 1 <= c <= k:
            raise SequenceViolation(i, f"color {c} outside 1..{k}")
        if colors[v] == c:
            raise SequenceViolation(i, f"vertex {v} already has color {c}")
        for w in g.adjacency[v]:
            if colors[w] == c:
                raise SequenceViolation(
                    i, f"neighbor {w} of vertex {v} already has color {c}")
        colors[v] = c
    return Coloring(tuple(colors), k)


def sequence_stats(seq: RecoloringSequence) -> RecolorStats:
    per_vertex = [0] * len(seq.initial.colors)
    for step in seq.steps:
        per_vertex[step.vertex] += 1
    return RecolorStats(tuple(per_vertex), len(seq.steps),
                        max(per_vertex, default=0))


def elim_bound(s: int, t: int) -> int:
    """Per-vertex recoloring ceiling for one color elimination at layer
    depth s with the tight palette of s + 2 colors.

    Counting the recursion as implemented: an elimination visits at most t
    layer rounds; a round runs at most s + 1 replacement-color passes; each
    pass touches an earlier-layer vertex at most twice directly (the two
    promotion sweeps) plus twice recursively one depth lower, and an
    active-layer vertex is directly recolored at most once over the whole
    call (the active layer only ever moves upward):

        elim(0, t) = 1
        elim(s, t) = t * (s + 1) * (2 + 2 * elim(s - 1, t)) + 1
    """
    if s <= 0:
        return 1
    return t * (s + 1) * (2 + 2 * elim_bound(s - 1, t)) + 1


def walk_bound(s: int, t: int) -> int:
    """Per-vertex ceiling over a full two-sided walk at depth s with k = s + 2.

    Each recursion level runs one elimination and one promotion sweep on
    both sides before descending one depth with one color fewer, and the
    two-color base level recolors each vertex at most once:

        walk(0, t) = 1
        walk(s, t) = 2 * elim(s, t) + 2 + walk(s - 1, t)
    """
    if s <= 0:
        return 1
    return 2 * elim_bound(s, t) + 2 + walk_bound(s - 1, t)
