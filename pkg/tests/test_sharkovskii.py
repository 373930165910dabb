import numpy as np
import pytest

from orbitpatterns.errors import EmptySet, NonPositive
from orbitpatterns.sharkovskii import Order, SharkovskiiKey, compare, forces, generator_of, sort_key


class TestKey:
    @pytest.mark.parametrize("n, a, b", [(1, 0, 1), (12, 2, 3), (40, 3, 5), (7, 0, 7)])
    def test_decomposition(self, n, a, b):
        key = SharkovskiiKey.of(n)
        assert (key.a, key.b) == (a, b)
        assert key.b % 2 == 1
        assert key.to_int() == n

    def test_nonpositive(self):
        with pytest.raises(NonPositive):
            SharkovskiiKey.of(0)


class TestCompare:
    def test_published_fragments(self):
        # 1 < 2 < 4 < 8 < ... < 20 < 12 < ... < 10 < 6 < ... < 9 < 7 < 5 < 3
        assert compare(6, 9) is Order.LESS
        assert compare(5, 3) is Order.LESS
        assert compare(7, 5) is Order.LESS
        assert compare(9, 7) is Order.LESS
        assert compare(20, 12) is Order.LESS
        assert compare(10, 6) is Order.LESS
        assert compare(3, 5) is Order.GREATER

    @pytest.mark.parametrize("n", [1, 2, 7, 48])
    def test_reflexive(self, n):
        assert compare(n, n) is Order.EQUAL

    def test_powers_of_two_ascend(self):
        for i in range(7):
            for j in range(7):
                expected = Order.LESS if i < j else Order.GREATER if i > j else Order.EQUAL
                assert compare(2**i, 2**j) is expected

    def test_even_below_odd(self):
        for even in range(2, 60, 2):
            for odd in range(3, 60, 2):
                assert compare(even, odd) is Order.LESS

    def test_nonpositive(self):
        with pytest.raises(NonPositive):
            compare(0, 3)

    def test_total_order_on_1_to_200(self):
        # Vectorized exhaustive check: trichotomy over all pairs and
        # transitivity over all 200^3 triples via boolean matrix product.
        ns = range(1, 201)
        less = np.array([[compare(a, b) is Order.LESS for b in ns] for a in ns])
        equal = np.array([[compare(a, b) is Order.EQUAL for b in ns] for a in ns])
        assert (equal == np.eye(200, dtype=bool)).all()
        assert (less ^ less.T ^ equal).all()          # exactly one of <, >, =
        assert not (less & less.T).any()              # antisymmetry
        closure = (less.astype(int) @ less.astype(int)) > 0
        assert (~closure | less).all()                # transitivity

    def test_matches_sort_key(self):
        ordered = sorted(range(1, 201), key=sort_key)
        for a, b in zip(ordered, ordered[1:]):
            assert compare(a, b) is Order.LESS


class TestForces:
    def test_spec_values(self):
        assert forces(7, 9) is True
        assert forces(9, 7) is False
        assert forces(5, 5) is True

    def test_downset(self):
        down = {m for m in range(1, 101) if forces(12, m)}
        assert down == {m for m in range(1, 101) if compare(m, 12) is not Order.GREATER}
        assert 12 in down and 1 in down and 3 not in down


class TestGenerator:
    def test_spec_values(self):
        assert generator_of({1, 2, 4, 6, 7}) == 7
        assert generator_of({1}) == 1
        assert generator_of({1, 2, 4, 6, 7, 8, 9}) == 7

    def test_empty(self):
        with pytest.raises(EmptySet):
            generator_of(set())

    def test_generator_forces_all(self):
        periods = {1, 2, 4, 8, 6, 12, 10, 9}
        g = generator_of(periods)
        assert all(forces(g, m) for m in periods)
