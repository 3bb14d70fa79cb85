"""
Tests for the counting identities, intersection profiles and intertwining relations.
"""
import random
from itertools import combinations

import pytest
from hypothesis import given, strategies as st

from src.errors import InconsistentIncidence, MismatchedPointSets, PointOutOfRange
from src.designs.constructions import trivial_design
from src.incidence.intersections import counting_identity_check, delta_identities, delta_profile, t_count
from src.incidence.mutual import mutual_matrix
from src.incidence.zvectors import bijection_check, intertwining_check
from src.models.incidence import DeltaProfile
from tests.conftest import CORPUS, CORPUS_PAIRS


class TestCountingIdentity:
    """Tests for sum |Q_j ∩ X| = sum t_Q(x)."""

    def test_fano_first_three_points(self, fano):
        """Both sides are 9 for X = {1, 2, 3}."""
        left = sum(len({1, 2, 3} & set(block)) for block in fano.blocks)
        assert left == 9
        assert counting_identity_check(fano.blocks, {1, 2, 3})

    def test_all_points(self, ex3_d1):
        """With X = V both sides are b k = 30."""
        assert sum(t_count(ex3_d1.blocks, x) for x in range(1, 7)) == 30
        assert counting_identity_check(ex3_d1.blocks, range(1, 7))

    def test_t_count(self, ex1_d2):
        """Point 7 lies in twelve blocks of the 28-block design."""
        assert t_count(ex1_d2.blocks, 7) == 12

    def test_empty_block_list(self):
        """No blocks means no incidences."""
        assert t_count([], 1) == 0
        assert counting_identity_check([], {1, 2})

    @pytest.mark.parametrize('point', [0, 99, True])
    def test_t_count_point_out_of_range(self, fano, point):
        """Points must be integers in 1..v."""
        with pytest.raises(PointOutOfRange):
            t_count(fano.blocks, point)

    def test_t_count_explicit_v(self, fano):
        """With v given, a point missing from the listed blocks still counts as in range."""
        assert t_count(fano.blocks[:1], 7, v=7) == 0
        with pytest.raises(PointOutOfRange):
            t_count(fano.blocks[:1], 8, v=7)

    def test_random_corpus_samples(self):
        """500 samples of block sub-lists Q and point sets X drawn from corpus designs."""
        rng = random.Random(7)
        names = sorted(CORPUS)
        for _ in range(500):
            d = CORPUS[rng.choice(names)]
            blocks = rng.sample(d.blocks, rng.randint(0, d.b))
            x, y = rng.sample(range(1, d.v + 1), 2)
            subset = {x, y} | set(rng.sample(range(1, d.v + 1), rng.randint(0, d.v)))
            assert counting_identity_check(blocks, subset, d.v)

    @given(
        st.lists(st.sets(st.integers(min_value=1, max_value=9)), max_size=8),
        st.sets(st.integers(min_value=1, max_value=9)),
    )
    def test_identity_holds_for_any_blocks(self, blocks, subset):
        """The identity is a double count and needs no balance."""
        assert counting_identity_check([sorted(block) for block in blocks], subset)


class TestDeltaProfile:
    """Tests for the intersection-size histogram."""

    def test_fano_pair(self, fano):
        """S = {1, 2}: one block contains both, four contain one, two contain neither."""
        profile = delta_profile({1, 2}, fano)
        assert profile.counts == (2, 4, 1)
        assert profile.as_dict() == {2: 1, 1: 4, 0: 2}
        assert list(profile.as_dict()) == [2, 1, 0]
        assert profile.total == 7

    def test_fano_line(self, fano):
        """A line meets itself in three points and every other line in one."""
        profile = delta_profile((1, 2, 4), fano)
        assert profile.counts == (0, 6, 0, 1)
        assert profile.as_dict() == {3: 1, 1: 6}

    def test_empty_subset(self, fano):
        """Every block misses the empty set."""
        profile = delta_profile((), fano)
        assert profile.counts == (7,)
        assert delta_identities((), fano) == (True, True, True)

    def test_length_capped_at_k(self, fano):
        """Counts run over 0..min(|S|, k)."""
        assert len(delta_profile(range(1, 8), fano).counts) == 4

    def test_point_out_of_range(self, fano):
        """S must lie inside 1..v."""
        with pytest.raises(PointOutOfRange):
            delta_profile({1, 9}, fano)

    def test_to_dict(self, fano):
        """Serialized counts are keyed by size as text."""
        assert delta_profile({1, 2}, fano).to_dict() == {
            'subset_size': 2,
            'counts': {'2': 1, '1': 4, '0': 2},
        }

    def test_negative_count_rejected(self):
        """Counts are nonnegative."""
        with pytest.raises(InconsistentIncidence):
            DeltaProfile(2, (1, -1))

    def test_moments(self):
        """First, second and pair moments of a hand-built profile."""
        profile = DeltaProfile(3, (1, 2, 3, 4))
        assert profile.moment(1) == 2 + 6 + 12
        assert profile.moment(2) == 2 + 12 + 36
        assert profile.pair_moment() == 3 + 12


class TestDeltaIdentities:
    """Sweep of the three moment identities over every subset of small designs."""

    @pytest.mark.parametrize('name', sorted(n for n in CORPUS if CORPUS[n].v <= 8))
    def test_every_subset(self, name):
        """All three identities hold for all 2^v subsets."""
        d = CORPUS[name]
        for size in range(d.v + 1):
            for subset in combinations(range(1, d.v + 1), size):
                assert delta_identities(subset, d) == (True, True, True), subset

    @pytest.mark.parametrize('name', ['cyclic11', 'cyclic11_complement'])
    def test_random_subsets_of_eleven_points(self, name):
        """Random subsets of the v = 11 designs."""
        d = CORPUS[name]
        rng = random.Random(name)
        for _ in range(200):
            subset = rng.sample(range(1, 12), rng.randint(0, 11))
            assert all(delta_identities(subset, d))


class TestIntertwining:
    """Tests for M^T Z1 = (r1 - lambda1) Z2 and M Z2 = (r2 - lambda2) Z1."""

    @pytest.mark.parametrize('first,second', CORPUS_PAIRS)
    def test_all_point_pairs(self, first, second):
        """Both relations hold for every pair of distinct points."""
        d1, d2 = CORPUS[first], CORPUS[second]
        mim = mutual_matrix(d1, d2)
        for x, y in combinations(range(1, d1.v + 1), 2):
            assert intertwining_check(d1, d2, x, y, mim) == (True, True), (x, y)

    def test_same_point_trivially_holds(self, fano, ex1_d2):
        """Z(x, x) = 0 on both sides."""
        assert intertwining_check(fano, ex1_d2, 4, 4) == (True, True)

    def test_mismatched_point_sets(self, fano):
        """The designs must share v."""
        with pytest.raises(MismatchedPointSets):
            intertwining_check(fano, trivial_design(6), 1, 2)


class TestBijection:
    """Tests for the correspondence between Z vectors of V and of a design."""

    @pytest.mark.parametrize('name', sorted(CORPUS))
    def test_corpus(self, name):
        """M(V, d) carries Z_V onto Z_d and back up to r - lambda."""
        assert bijection_check(CORPUS[name])
