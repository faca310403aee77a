"""
Tests for locally closed sets and the refined topology they generate.
"""

import pytest
import logging

from src.core import discrete
from src.enumeration import enumerate_labeled
from src.locally_closed import (
    LC_CRITERIA,
    criteria_agree,
    criterion_e,
    evaluate_criteria,
    is_lc_mask,
    is_locally_closed,
    lc_decompositions,
    locally_closed_family,
    locally_closed_masks,
    standard_decomposition,
    tl_topology,
)

logger = logging.getLogger(__name__)


class TestCriteria:
    """Test the seven characterizations of a locally closed set."""

    def test_seven_way_agreement(self):
        pairs = 0
        for n in range(5):
            for space in enumerate_labeled(n, jobs=1, progress=False):
                for a in range(1 << n):
                    assert criteria_agree(space, a), (space, a)
                    pairs += 1
        # 1 + 2 + 16 + 232 + 5680
        assert pairs == 5931
        logger.info(f"Criteria agree on {pairs} (space, subset) pairs")

    def test_all_criteria_registered(self):
        assert sorted(LC_CRITERIA) == ["a", "b", "c", "d", "e", "f", "g"]

    def test_chain_gap_is_not_locally_closed(self, chain3):
        # cl{a,c} ∖ {a,c} = {b}, which is not closed
        mask = chain3.ground.mask_of(["a", "c"])
        assert not any(evaluate_criteria(chain3, mask).values())
        assert not is_lc_mask(chain3, mask)

    def test_indiscrete_singleton(self, indiscrete2):
        assert not is_locally_closed(indiscrete2, indiscrete2.subset(["a"]))
        assert is_locally_closed(indiscrete2, indiscrete2.subset([]))


class TestFamily:
    """Test the locally closed family and decompositions."""

    def test_sierpinski_family_is_everything(self, sierpinski):
        assert locally_closed_masks(sierpinski) == (0, 1, 2, 3)

    def test_chain_family(self, chain3):
        assert locally_closed_masks(chain3) == (0, 1, 2, 3, 4, 6, 7)
        assert [s.labels for s in locally_closed_family(chain3)][:3] == [[], ["a"], ["b"]]

    def test_family_matches_per_subset_test(self):
        for n in range(4):
            for space in enumerate_labeled(n, jobs=1, progress=False):
                expected = tuple(a for a in range(1 << n) if criterion_e(space, a))
                assert locally_closed_masks(space) == expected

    def test_standard_decomposition(self, sierpinski):
        decomposition = standard_decomposition(sierpinski, sierpinski.subset(["b"]))
        assert decomposition.to_dict() == {"open": ["a", "b"], "closed": ["b"]}

    def test_all_decompositions_meet_to_the_set(self, chain3):
        b = chain3.ground.mask_of(["b"])
        decompositions = lc_decompositions(chain3, b)
        assert decompositions
        for d in decompositions:
            assert chain3.is_open(d.open_part.bits)
            assert chain3.is_closed(d.closed_part.bits)
            assert d.open_part.bits & d.closed_part.bits == b

    def test_dense_locally_closed_sets_are_open(self):
        for n in range(4):
            for space in enumerate_labeled(n, jobs=1, progress=False):
                for a in locally_closed_masks(space):
                    if space.is_dense(a):
                        assert space.is_open(a)


class TestRefinedTopology:
    """Test the topology generated by the locally closed sets."""

    def test_sierpinski_refines_to_discrete(self, sierpinski):
        assert tl_topology(sierpinski) == discrete(sierpinski.ground)

    def test_chain_refines_to_discrete(self, chain3):
        assert tl_topology(chain3) == discrete(chain3.ground)

    def test_locally_indiscrete_is_fixed(self, partition3):
        assert tl_topology(partition3) == partition3

    def test_indiscrete_is_fixed(self, indiscrete2):
        assert tl_topology(indiscrete2) == indiscrete2

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_refinement_is_finer(self, n):
        for space in enumerate_labeled(n, jobs=1, progress=False):
            refined = tl_topology(space)
            assert set(space.opens) <= set(refined.opens)
            for a in locally_closed_masks(space):
                assert refined.is_open(a)
