"""
Tests for design family generators, difference sets and construction recipes.
"""
import pytest

from src.designs.constructions import (
    complement_design,
    complete_design,
    cyclic_design,
    multiset_difference,
    trivial_design,
    union_design,
)
from src.designs.core import designs_equal, designs_ordered_equal
from src.designs.fixtures import fixture
from src.designs.recipes import build_from_recipe
from src.errors import (
    BlockNotPresent,
    ComplementTooSmall,
    ConstructionError,
    InvalidK,
    MixedBlockSize,
    MixedV,
    NotABibd,
    NotADifferenceSet,
    PointOutOfRange,
    UnknownFixture,
    UsageError,
)
from src.models.difference_set import DifferenceSetSpec


class TestTrivialAndComplete:
    """Tests for the trivial and complete families."""

    def test_trivial(self):
        """Singleton blocks in point order."""
        design = trivial_design(5)
        assert design.params.as_tuple() == (5, 5, 1, 1, 0)
        assert design.blocks == ((1,), (2,), (3,), (4,), (5,))

    @pytest.mark.parametrize('v,k,expected', [
        (4, 2, (4, 6, 3, 2, 1)),
        (5, 3, (5, 10, 6, 3, 3)),
        (6, 2, (6, 15, 5, 2, 1)),
        (7, 3, (7, 35, 15, 3, 5)),
        (8, 7, (8, 8, 7, 7, 6)),
    ])
    def test_complete_params(self, v, k, expected):
        """Parameters are binomial coefficients."""
        assert complete_design(v, k).params.as_tuple() == expected

    def test_complete_lexicographic(self):
        """Blocks come in lexicographic order."""
        assert complete_design(4, 2).blocks == ((1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4))

    @pytest.mark.parametrize('k', [0, 4, 5])
    def test_complete_invalid_k(self, k):
        """Block size must lie in 1..v-1."""
        with pytest.raises(InvalidK):
            complete_design(4, k)


class TestComplement:
    """Tests for complement_design."""

    def test_fano_complement(self, fano):
        """The complement of the Fano plane is (7,7,4,4,2)."""
        complement = complement_design(fano)
        assert complement.params.as_tuple() == (7, 7, 4, 4, 2)
        assert complement.blocks[0] == (3, 5, 6, 7)

    def test_trivial_complement_is_all_triples(self):
        """Complementing singletons of four points gives every triple."""
        assert designs_equal(complement_design(trivial_design(4)), complete_design(4, 3))

    def test_complement_twice(self, fano):
        """Complementing twice returns the design with the same block order."""
        assert designs_ordered_equal(complement_design(complement_design(fano)), fano)

    def test_too_small(self):
        """Complements with single-point blocks are rejected."""
        with pytest.raises(ComplementTooSmall):
            complement_design(complete_design(4, 3))


class TestMultisetDifference:
    """Tests for removing one design from another."""

    def test_triples_minus_fano(self, fano, ex1_d2):
        """All triples of seven points minus the Fano lines is the 28-block design."""
        difference = multiset_difference(complete_design(7, 3), fano)
        assert difference.params.as_tuple() == (7, 28, 12, 3, 4)
        assert designs_equal(difference, ex1_d2)

    def test_keeps_order_removes_earliest(self, fano):
        """Removing one copy of the Fano plane from a doubled one leaves the second copy."""
        doubled = union_design(fano, fano)
        assert designs_ordered_equal(multiset_difference(doubled, fano), fano)

    def test_block_not_present(self, fano):
        """A block of the subtrahend that big lacks is reported."""
        with pytest.raises(BlockNotPresent) as info:
            multiset_difference(fano, complete_design(7, 3))
        assert info.value.block == (1, 2, 3)

    def test_nothing_left(self, fano):
        """Subtracting a design from itself leaves no design."""
        with pytest.raises(NotABibd, match="no blocks"):
            multiset_difference(fano, fano)

    def test_mixed_v(self, fano):
        """Designs on different point sets cannot be subtracted."""
        with pytest.raises(MixedV):
            multiset_difference(fano, trivial_design(6))


class TestUnion:
    """Tests for union_design."""

    def test_doubled_fano(self, fano):
        """Joining the Fano plane with itself doubles b, r and lambda."""
        assert union_design(fano, fano).params.as_tuple() == (7, 14, 6, 3, 2)

    def test_mixed_block_size(self, fano):
        """Block sizes must agree."""
        with pytest.raises(MixedBlockSize):
            union_design(fano, trivial_design(7))

    def test_mixed_v(self):
        """Point sets must agree."""
        with pytest.raises(MixedV):
            union_design(trivial_design(6), trivial_design(7))


class TestCyclic:
    """Tests for difference sets and their developments."""

    def test_fano_from_difference_set(self, fano):
        """Developing {1,2,4} mod 7 reproduces the Fano plane block for block."""
        design = cyclic_design(DifferenceSetSpec.create_new(7, [1, 2, 4]))
        assert designs_ordered_equal(design, fano)

    def test_quadratic_residues_mod_11(self):
        """The residues {1,3,4,5,9} give an (11,11,5,5,2) design."""
        spec = DifferenceSetSpec.create_new(11, [1, 3, 4, 5, 9])
        assert spec.lambda_ == 2
        assert cyclic_design(spec).params.as_tuple() == (11, 11, 5, 5, 2)
        assert complement_design(cyclic_design(spec)).params.as_tuple() == (11, 11, 6, 6, 3)

    @pytest.mark.parametrize('modulus,base', [(7, [1, 2, 4]), (11, [1, 3, 4, 5, 9])])
    def test_orbit_closed_under_shift(self, modulus, base):
        """Adding 1 mod v to every point permutes the blocks."""
        design = cyclic_design(DifferenceSetSpec.create_new(modulus, base))
        shifted = [tuple(sorted(p % modulus + 1 for p in block)) for block in design.blocks]
        assert sorted(shifted) == sorted(design.blocks)
        assert shifted != list(design.blocks)

    def test_not_a_difference_set(self):
        """{1,2,3} mod 7 produces difference 1 twice."""
        with pytest.raises(NotADifferenceSet, match="difference 1 arises 2 times, expected 1"):
            DifferenceSetSpec.create_new(7, [1, 2, 3])

    def test_uneven_pairs(self):
        """A base block whose pair count is not a multiple of v-1 is rejected."""
        with pytest.raises(NotADifferenceSet) as info:
            DifferenceSetSpec.create_new(7, [1, 2])
        assert info.value.difference == 2
        assert info.value.count == 0

    def test_residue_out_of_range(self):
        """Residues are written 1..v."""
        with pytest.raises(PointOutOfRange):
            DifferenceSetSpec.create_new(7, [1, 2, 12])

    def test_empty_base(self):
        """An empty base block is rejected."""
        with pytest.raises(ConstructionError):
            DifferenceSetSpec.create_new(7, [])

    def test_to_dict(self):
        """Serialization sorts the base block."""
        spec = DifferenceSetSpec.create_new(7, [4, 1, 2])
        assert spec.to_dict() == {'modulus': 7, 'base_block': [1, 2, 4]}


class TestFixtures:
    """Tests for the published fixtures."""

    @pytest.mark.parametrize('name,expected', [
        ('fano', (7, 7, 3, 3, 1)),
        ('ex1_d2', (7, 28, 12, 3, 4)),
        ('ex3_d1', (6, 10, 5, 3, 2)),
        ('ex3_d2', (6, 15, 5, 2, 1)),
    ])
    def test_params(self, name, expected):
        """Each fixture is a valid design with its published parameters."""
        assert fixture(name).params.as_tuple() == expected

    def test_unknown(self):
        """Unknown names list the known ones."""
        with pytest.raises(UnknownFixture, match="fano"):
            fixture('heawood')


class TestRecipes:
    """Tests for the construction recipe language."""

    def test_fixture_name(self, fano):
        """A bare fixture name."""
        assert designs_ordered_equal(build_from_recipe('fano'), fano)

    def test_difference(self, ex1_d2):
        """complete:7:3-fano is the 28-block design."""
        assert designs_equal(build_from_recipe('complete:7:3-fano'), ex1_d2)

    def test_complement_of_cyclic(self):
        """Prefix complement applies to one term."""
        design = build_from_recipe('complement:cyclic:11:1,3,4,5,9')
        assert design.params.as_tuple() == (11, 11, 6, 6, 3)

    def test_union_ignores_whitespace(self):
        """Whitespace around operators is ignored."""
        assert build_from_recipe(' fano + fano ').params.as_tuple() == (7, 14, 6, 3, 2)

    def test_left_to_right(self):
        """Operators apply left to right."""
        design = build_from_recipe('fano+fano-fano')
        assert design.params.as_tuple() == (7, 7, 3, 3, 1)

    def test_trivial(self):
        """trivial:V builds singletons."""
        assert build_from_recipe('trivial:5').params.as_tuple() == (5, 5, 1, 1, 0)

    @pytest.mark.parametrize('recipe', ['', '   ', 'fano+', '-fano', 'bogus', 'complete:7', 'complete:7:x'])
    def test_malformed(self, recipe):
        """Malformed recipes are usage errors."""
        with pytest.raises(UsageError):
            build_from_recipe(recipe)

    def test_construction_failure_propagates(self):
        """A well-formed recipe that cannot be built raises the construction error."""
        with pytest.raises(InvalidK):
            build_from_recipe('complete:7:7')
