"""
Tests for enumeration of finite topologies, the oracle and canonical forms.
"""

from itertools import permutations
from math import factorial

import pytest
import logging

from src.constructions import relabel
from src.core import SizeCapExceeded, validate_topology
from src.enumeration import (
    canonical_form,
    canonical_key,
    count_labeled,
    enumerate_classes,
    enumerate_labeled,
    iter_topology_families,
    oracle_count,
    topology_from_key,
)
from src.maps import automorphism_count, find_homeomorphism

logger = logging.getLogger(__name__)

LABELED_COUNTS = {0: 1, 1: 1, 2: 4, 3: 29, 4: 355}
CLASS_COUNTS = {1: 1, 2: 3, 3: 9, 4: 33}


class TestLabeledEnumeration:
    """Test the preorder search."""

    @pytest.mark.parametrize("n,expected", sorted(LABELED_COUNTS.items()))
    def test_counts(self, n, expected):
        assert count_labeled(n, jobs=1) == expected

    @pytest.mark.slow
    def test_five_points(self):
        assert count_labeled(5, jobs=1) == 6942

    def test_each_space_once_and_valid(self):
        spaces = list(enumerate_labeled(3, jobs=1, progress=False))
        assert len({space.opens for space in spaces}) == 29
        for space in spaces:
            assert validate_topology(space.ground, list(space.opens)) == space

    def test_worker_count_does_not_change_order(self):
        serial = [space.opens for space in enumerate_labeled(4, jobs=1, progress=False)]
        parallel = [space.opens for space in enumerate_labeled(4, jobs=3, progress=False)]
        assert serial == parallel
        assert count_labeled(4, jobs=3) == 355

    def test_size_cap(self):
        with pytest.raises(SizeCapExceeded):
            list(enumerate_labeled(8))
        with pytest.raises(SizeCapExceeded):
            count_labeled(-1)


class TestOracle:
    """Test the family-closure oracle against the preorder search."""

    @pytest.mark.parametrize("n", [0, 1, 2, 3, 4])
    def test_counts_agree(self, n):
        assert oracle_count(n) == count_labeled(n, jobs=1)

    def test_same_families(self):
        from_preorders = {space.opens for space in enumerate_labeled(3, jobs=1, progress=False)}
        assert set(iter_topology_families(3)) == from_preorders

    def test_cap(self):
        with pytest.raises(SizeCapExceeded):
            next(iter_topology_families(5))


class TestCanonicalForms:
    """Test canonical forms and homeomorphism classes."""

    @pytest.mark.parametrize("n,expected", sorted(CLASS_COUNTS.items()))
    def test_class_counts(self, n, expected):
        assert len(list(enumerate_classes(n, jobs=1, progress=False))) == expected

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_orbit_sizes_add_up(self, n):
        total = sum(factorial(n) // automorphism_count(space)
                    for space in enumerate_classes(n, jobs=1, progress=False))
        assert total == LABELED_COUNTS[n]

    def test_known_forms(self, chain3, partition3, sierpinski):
        assert canonical_key(chain3) == (3, (0, 1, 3, 7))
        assert canonical_key(partition3) == (3, (0, 1, 6, 7))
        assert canonical_key(sierpinski) == (2, (0, 1, 3))

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_relabeling_invariance(self, n):
        for space in enumerate_labeled(n, jobs=1, progress=False):
            key = canonical_key(space)
            for perm in permutations(range(n)):
                assert canonical_key(relabel(space, perm)) == key

    @pytest.mark.parametrize("n", [3, 4])
    def test_canonical_form_is_fixed(self, n):
        for space in enumerate_classes(n, jobs=1, progress=False):
            canonical, relabeling = canonical_form(space)
            assert canonical == space
            assert relabeling == {label: label for label in space.labels}

    def test_relabeling_maps_onto_canonical(self, space_factory):
        space = space_factory("xyz", ["", "z", "yz", "xyz"])
        canonical, relabeling = canonical_form(space)
        assert relabeling == {"x": "c", "y": "b", "z": "a"}
        assert canonical == topology_from_key((3, (0, 1, 3, 7)))

    def test_equal_forms_iff_homeomorphic(self):
        spaces = list(enumerate_labeled(3, jobs=1, progress=False))
        keys = [canonical_key(space) for space in spaces]
        for i, left in enumerate(spaces):
            for j, right in enumerate(spaces):
                assert (keys[i] == keys[j]) == (find_homeomorphism(left, right) is not None)
