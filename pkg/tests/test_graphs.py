import random
from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from recolorwalk import (
    Coloring,
    Graph,
    GraphFormatError,
    StateSpaceTooLarge,
    degeneracy_ordering,
    is_proper,
    mad_brute,
    mad_exact,
    parse_coloring,
    parse_graph,
    serialize_graph,
)

import families


@st.composite
def graphs(draw, max_n=8):
    n = draw(st.integers(min_value=1, max_value=max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    if pairs:
        edges = draw(st.lists(st.sampled_from(pairs), unique=True))
    else:
        edges = []
    return Graph.from_edges(n, edges)


def degeneracy_brute(g: Graph) -> int:
    """Largest minimum degree over all non-empty induced subgraphs."""
    best = 0
    for size in range(1, g.n + 1):
        for subset in combinations(range(g.n), size):
            inside = set(subset)
            min_deg = min(
                sum(1 for w in g.adjacency[v] if w in inside) for v in subset)
            best = max(best, min_deg)
    return best


class TestParse:
    def test_smallest_path(self):
        g = parse_graph("3 2\n0 1\n1 2")
        assert g.n == 3 and g.m == 2
        assert g.adjacency == ((1,), (0, 2), (1,))

    def test_single_vertex(self):
        g = parse_graph("1 0")
        assert g.n == 1 and g.m == 0

    def test_self_loop_reports_line(self):
        with pytest.raises(GraphFormatError, match="line 2.*self-loop"):
            parse_graph("2 1\n0 0")

    def test_duplicate_edge_is_an_error(self):
        with pytest.raises(GraphFormatError, match="line 3.*duplicate"):
            parse_graph("3 2\n0 1\n0 1")

    def test_out_of_range(self):
        with pytest.raises(GraphFormatError, match="line 2"):
            parse_graph("2 1\n0 5")

    def test_requires_u_smaller_than_v(self):
        with pytest.raises(GraphFormatError, match="0 <= u < v"):
            parse_graph("3 1\n2 1")

    def test_edge_count_mismatch(self):
        with pytest.raises(GraphFormatError, match="expected 2 edges"):
            parse_graph("3 2\n0 1")
        with pytest.raises(GraphFormatError, match="more than 1"):
            parse_graph("3 1\n0 1\n1 2")

    def test_rejects_empty_graph(self):
        with pytest.raises(GraphFormatError, match="at least 1"):
            parse_graph("0 0")

    def test_missing_header(self):
        with pytest.raises(GraphFormatError, match="missing header"):
            parse_graph("# nothing here\n")

    def test_comments_and_blanks_ignored(self):
        g = parse_graph("# a path\n\n3 2\n0 1\n# middle\n1 2\n")
        assert g.m == 2

    @settings(max_examples=60)
    @given(graphs())
    def test_serialize_round_trip(self, g):
        assert parse_graph(serialize_graph(g)) == g

    def test_parse_coloring(self):
        c = parse_coloring("1 2 1", 3, 3)
        assert c.colors == (1, 2, 1)
        with pytest.raises(GraphFormatError, match="expected 3 colors"):
            parse_coloring("1 2", 3, 3)
        with pytest.raises(GraphFormatError, match="outside 1..2"):
            parse_coloring("1 3 1", 3, 2)
        with pytest.raises(GraphFormatError, match="not an integer"):
            parse_coloring("1 x 1", 3, 3)


class TestProperness:
    def test_path_examples(self):
        p3 = families.path_graph(3)
        assert is_proper(p3, Coloring((1, 2, 1), 3))
        assert not is_proper(p3, Coloring((1, 1, 2), 3))

    def test_triangle(self):
        assert is_proper(families.complete_graph(3), Coloring((1, 2, 3), 3))

    def test_length_mismatch(self):
        with pytest.raises(ValueError, match="entries"):
            is_proper(families.path_graph(3), Coloring((1, 2), 3))

    @settings(max_examples=40)
    @given(graphs(max_n=6), st.randoms(use_true_random=False))
    def test_matches_direct_enumeration(self, g, rnd):
        colors = tuple(rnd.randint(1, 3) for _ in range(g.n))
        c = Coloring(colors, 3)
        direct = all(colors[u] != colors[v] for u, v in g.edges())
        assert is_proper(g, c) == direct


class TestDegeneracy:
    def test_path_is_one_degenerate(self):
        assert degeneracy_ordering(families.path_graph(4))[1] == 1

    def test_complete_graph(self):
        assert degeneracy_ordering(families.complete_graph(4))[1] == 3

    def test_five_cycle_against_brute_force(self):
        c5 = families.cycle_graph(5)
        assert degeneracy_brute(c5) == 2
        assert degeneracy_ordering(c5)[1] == 2

    def test_ordering_property_and_minimality(self):
        rng = random.Random(7)
        for _ in range(40):
            g = families.random_graph(rng, rng.randint(1, 7), rng.random())
            ordering, degeneracy = degeneracy_ordering(g)
            position = {v: i for i, v in enumerate(ordering)}
            back = max(
                (sum(1 for w in g.adjacency[v] if position[w] < position[v])
                 for v in range(g.n)),
                default=0)
            assert back <= degeneracy
            assert degeneracy == degeneracy_brute(g)


class TestMad:
    def test_brute_trivial_values(self):
        assert mad_brute(families.path_graph(3)) == Fraction(4, 3)
        assert mad_brute(families.empty_graph(1)) == 0
        assert mad_brute(families.cycle_graph(4)) == 2

    def test_brute_cap(self):
        with pytest.raises(StateSpaceTooLarge):
            mad_brute(families.empty_graph(21))

    def test_exact_trivial_values(self):
        assert mad_exact(families.complete_graph(3)) == 2
        assert mad_exact(families.star_graph(3)) == Fraction(3, 2)

    def test_petersen(self):
        pet = families.petersen_graph()
        assert mad_brute(pet) == 3
        assert mad_exact(pet) == 3

    def test_exact_agrees_with_brute_on_random_sample(self):
        rng = random.Random(20240810)
        checked = 0
        while checked < 200:
            n = rng.randint(1, 10)
            g = families.random_graph(rng, n, rng.random())
            assert mad_exact(g) == mad_brute(g)
            checked += 1

    def test_degeneracy_density_band(self):
        rng = random.Random(99)
        for _ in range(60):
            g = families.random_graph(rng, rng.randint(1, 9), rng.random())
            degeneracy = degeneracy_ordering(g)[1]
            mad = mad_exact(g)
            assert degeneracy <= mad < 2 * (degeneracy + 1)
