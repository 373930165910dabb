import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import single_cycles
from orbitpatterns.digraph import (
    adjacency_matrix,
    aperiodic_closed_walk_count,
    build,
    closed_walk_count,
    loop_vertices,
    odd_generator,
    primitive_cycle_exists,
    relabel_inverse,
    to_dot,
)
from orbitpatterns.pattern import Pattern, inverse, parse_pattern, stefan
from walk_oracle import aperiodic_closed_walk_exists, count_aperiodic_closed_walks

SHIFT7 = parse_pattern("2 3 4 5 6 7 1")
S1A4 = parse_pattern("9 5 8 7 6 4 3 1 2")


class TestBuild:
    def test_two_orbit_is_single_red_loop(self):
        d = build(Pattern((2, 1)))
        assert d.edges() == [(1, 1, True)]

    def test_stefan3_structure(self):
        d = build(stefan(3))
        assert list(d.targets(1)) == [4, 5, 6]
        assert list(d.targets(3)) == [5] and d.red_target(3) == 5
        assert d.has_edge(4, 4)

    def test_second_minimal_red_edge_to_j1(self):
        d = build(S1A4)
        assert d.has_edge(8, 1) and d.red_target(8) == 1

    @given(single_cycles(8))
    def test_out_ranges_contiguous_and_red_iff_outdegree_one(self, p):
        d = build(p)
        for v in d.vertices():
            lo, hi = d.out_lo[v - 1], d.out_hi[v - 1]
            assert 1 <= lo <= hi <= d.n_vertices
            red = d.red_target(v)
            if hi == lo:
                assert red == lo
            else:
                assert red is None

    @given(single_cycles(9))
    def test_lemma_digraph_properties(self, p):
        # every vertex has a successor and a predecessor; a predecessor
        # different from itself exists unless the period is even and the
        # vertex is the middle gap
        d = build(p)
        for r in d.vertices():
            preds = [u for u in d.vertices() if d.has_edge(u, r)]
            assert preds
            assert len(list(d.targets(r))) >= 1
            if not (p.m % 2 == 0 and r == p.m // 2):
                assert any(u != r for u in preds)

    def test_loop_exists_exhaustively_period7(self, all_period7):
        for p in all_period7:
            assert loop_vertices(build(p))


class TestLoops:
    def test_spec_values(self):
        assert loop_vertices(build(stefan(3))) == {4}
        assert loop_vertices(build(SHIFT7)) == {6}
        assert loop_vertices(build(S1A4)) == {5}


class TestRelabelInverse:
    @given(single_cycles(8))
    def test_matches_inverse_pattern(self, p):
        assert relabel_inverse(build(p)) == build(inverse(p))

    def test_involution_and_fixed_point(self):
        d = build(stefan(3))
        assert relabel_inverse(relabel_inverse(d)) == d
        loop = build(Pattern((2, 1)))
        assert relabel_inverse(loop) == loop


class TestWalkCounts:
    def test_single_red_loop(self):
        d = build(Pattern((2, 1)))
        for length in range(1, 8):
            assert closed_walk_count(d, length) == 1
            assert primitive_cycle_exists(d, length) is (length == 1)

    def test_stefan3_length1(self):
        assert closed_walk_count(build(stefan(3)), 1) == 1

    def test_counts_match_brute_force(self, all_period5):
        for p in all_period5:
            d = build(p)
            mat = adjacency_matrix(d)
            for length in range(1, 9):
                walks = sum(
                    count_aperiodic_closed_walks(mat, div)
                    for div in range(1, length + 1)
                    if length % div == 0
                )
                assert closed_walk_count(d, length) == walks
                assert aperiodic_closed_walk_count(d, length) == count_aperiodic_closed_walks(mat, length)

    def test_bad_length(self):
        with pytest.raises(ValueError):
            closed_walk_count(build(stefan(2)), 0)


class TestPrimitiveCycles:
    def test_spec_values(self):
        d = build(stefan(3))
        assert primitive_cycle_exists(d, 5) is False
        assert primitive_cycle_exists(d, 7) is True
        assert primitive_cycle_exists(build(SHIFT7), 3) is True

    @given(single_cycles(7), st.integers(min_value=1, max_value=12))
    @settings(max_examples=60)
    def test_agrees_with_dfs(self, p, length):
        d = build(p)
        assert primitive_cycle_exists(d, length) == aperiodic_closed_walk_exists(
            adjacency_matrix(d), length)


class TestOddGenerator:
    def test_spec_values(self):
        assert odd_generator(stefan(3)) == 7
        assert odd_generator(S1A4) == 7
        assert odd_generator(SHIFT7) == 3

    @pytest.mark.parametrize("k", range(1, 8))
    def test_stefan_is_generated_by_its_own_period(self, k):
        assert odd_generator(stefan(k)) == 2 * k + 1


class TestDot:
    def test_red_attribute_and_determinism(self):
        text = to_dot(build(stefan(2)))
        assert text == to_dot(build(stefan(2)))
        assert 'J2 -> J4 [color="red"];' in text
        assert text.startswith("digraph transitions {")

    def test_two_orbit(self):
        assert to_dot(build(Pattern((2, 1)))) == (
            'digraph transitions {\n  J1;\n  J1 -> J1 [color="red"];\n}\n'
        )
