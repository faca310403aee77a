"""
Tests for ground sets, topology validation, operators, the preorder
correspondence and space files.
"""

import json

import pytest
import logging

from src.core import (
    ForeignPoint,
    GroundSet,
    MalformedFile,
    MissingEmpty,
    MissingWhole,
    NotClosedUnderIntersection,
    NotClosedUnderUnion,
    Preorder,
    RelationNotReflexive,
    RelationNotTransitive,
    boundary,
    classify_set,
    closure,
    derived_set,
    discrete,
    dump_space,
    generate_from_subbase,
    indiscrete,
    interior,
    load_space,
    minimal_neighborhood,
    parse_space,
    specialization_preorder,
    topology_from_preorder,
    validate_topology,
)
from src.config import env_int
from src.enumeration import enumerate_labeled

logger = logging.getLogger(__name__)


class TestValidation:
    """Test topology validation and its error tokens."""

    @pytest.fixture
    def ground(self):
        return GroundSet(("a", "b", "c"))

    def test_valid_family(self, ground):
        space = validate_topology(ground, [7, 0, 1, 3, 1])
        assert space.opens == (0, 1, 3, 7)

    def test_missing_empty(self, ground):
        with pytest.raises(MissingEmpty):
            validate_topology(ground, [1, 7])

    def test_missing_whole(self, ground):
        with pytest.raises(MissingWhole):
            validate_topology(ground, [0, 1])

    def test_union_violation_names_the_pair(self, ground):
        with pytest.raises(NotClosedUnderUnion) as info:
            validate_topology(ground, [0, 1, 2, 7])
        assert info.value.witness == (["a"], ["b"])
        assert info.value.token == "NotClosedUnderUnion"

    def test_intersection_violation(self, ground):
        with pytest.raises(NotClosedUnderIntersection) as info:
            validate_topology(ground, [0, 3, 6, 7])
        assert info.value.witness == (["a", "b"], ["b", "c"])

    def test_foreign_bits(self, ground):
        with pytest.raises(ForeignPoint):
            validate_topology(ground, [0, 8, 7])

    def test_foreign_label(self, ground):
        with pytest.raises(ForeignPoint) as info:
            ground.mask_of(["a", "z"])
        assert info.value.label == "z"

    def test_empty_ground_set(self):
        space = validate_topology(GroundSet(()), [0])
        assert space.size == 0
        assert space.opens == (0,)

    def test_subbase_generation(self, ground):
        space = generate_from_subbase(ground, [3, 6])
        # {a,b} ∩ {b,c} = {b} and the union {a,b,c} join the family
        assert space.opens == (0, 2, 3, 6, 7)


class TestOperators:
    """Test closure, interior and friends on the Sierpiński space."""

    def test_closure_and_interior(self, sierpinski):
        a = sierpinski.subset(["a"])
        b = sierpinski.subset(["b"])
        assert closure(sierpinski, a).labels == ["a", "b"]
        assert closure(sierpinski, b).labels == ["b"]
        assert interior(sierpinski, b).labels == []
        assert interior(sierpinski, a).labels == ["a"]

    def test_boundary_and_derived(self, sierpinski):
        a = sierpinski.subset(["a"])
        assert boundary(sierpinski, a).labels == ["b"]
        assert derived_set(sierpinski, a).labels == ["b"]
        assert derived_set(sierpinski, sierpinski.subset(["b"])).labels == []

    def test_minimal_neighborhoods(self, sierpinski):
        assert minimal_neighborhood(sierpinski, "a").labels == ["a"]
        assert minimal_neighborhood(sierpinski, "b").labels == ["a", "b"]
        assert sierpinski.point_closures == (0b11, 0b10)

    def test_classification(self, sierpinski):
        flags = classify_set(sierpinski, sierpinski.subset(["a"]))
        assert flags.open and flags.dense and flags.preopen
        assert not flags.closed
        assert not flags.regular_open

        flags = classify_set(sierpinski, sierpinski.subset(["b"]))
        assert flags.closed and not flags.open and not flags.dense

    def test_closure_is_kuratowski(self, chain3):
        for a in range(1 << chain3.size):
            cl = chain3.closure_mask(a)
            assert a & ~cl == 0
            assert chain3.closure_mask(cl) == cl
            for b in range(1 << chain3.size):
                assert chain3.closure_mask(a | b) == cl | chain3.closure_mask(b)

    def test_foreign_point_set(self, sierpinski, chain3):
        with pytest.raises(ForeignPoint):
            closure(sierpinski, chain3.subset(["a"]))


class TestPreorder:
    """Test the preorder / finite topology correspondence."""

    def test_specialization_of_sierpinski(self, sierpinski):
        preorder = specialization_preorder(sierpinski)
        # b lies in the closure of a
        assert ("b", "a") in preorder.pairs()
        assert ("a", "b") not in preorder.pairs()

    def test_round_trip(self, chain3, partition3, sierpinski):
        for space in (chain3, partition3, sierpinski):
            assert topology_from_preorder(specialization_preorder(space)) == space

    def test_from_pairs(self, sierpinski):
        preorder = Preorder.from_pairs(GroundSet(("a", "b")), [("b", "a")])
        assert topology_from_preorder(preorder) == sierpinski

    def test_not_reflexive(self):
        with pytest.raises(RelationNotReflexive) as info:
            Preorder.from_pairs(GroundSet(("a", "b")), [], reflexive=False)
        assert info.value.label == "a"

    def test_not_transitive(self):
        with pytest.raises(RelationNotTransitive) as info:
            Preorder.from_pairs(GroundSet(("a", "b", "c")), [("a", "b"), ("b", "c")])
        assert info.value.witness == ("a", "b", "c")

    def test_discrete_and_indiscrete(self):
        ground = GroundSet.standard(3)
        assert len(discrete(ground).opens) == 8
        assert indiscrete(ground).opens == (0, 7)


class TestSpaceFiles:
    """Test space file parsing and serialization."""

    def test_fixture_round_trip(self, spaces_dir):
        files = sorted(spaces_dir.glob("*.json"))
        assert len(files) >= 17
        for path in files:
            space = load_space(path)
            text = dump_space(space)
            assert dump_space(parse_space(text)) == text
            assert parse_space(text) == space

    def test_opens_in_any_order(self, sierpinski):
        space = parse_space({"points": ["a", "b"], "opens": [["b", "a"], [], ["a"]]})
        assert space == sierpinski
        assert json.loads(dump_space(space)) == {"points": ["a", "b"], "opens": [[], ["a"], ["a", "b"]]}

    def test_invalid_json(self):
        with pytest.raises(MalformedFile):
            parse_space("{not json")

    def test_schema_errors(self):
        with pytest.raises(MalformedFile):
            parse_space({"points": ["a"]})
        with pytest.raises(MalformedFile):
            parse_space({"points": ["a", "a"], "opens": [[], ["a"]]})

    def test_foreign_label_in_file(self):
        with pytest.raises(ForeignPoint):
            parse_space({"points": ["a"], "opens": [[], ["a"], ["z"]]})

    def test_missing_file(self, tmp_path):
        with pytest.raises(MalformedFile):
            load_space(tmp_path / "absent.json")

    def test_file_not_utf8(self, tmp_path):
        bad = tmp_path / "bad.json"
        bad.write_bytes(b'{"points": ["\xff"], "opens": [[]]}')
        with pytest.raises(MalformedFile):
            load_space(bad)

    def test_library(self, library, sierpinski):
        assert "sierpinski" in library.list_spaces()
        assert library.get_space("sierpinski") == sierpinski
        assert library.get_space("no-such-space") is None
        logger.info(f"Library spaces: {library.list_spaces()}")


def _spaces_up_to(n_max):
    for n in range(n_max + 1):
        yield from enumerate_labeled(n, jobs=1, progress=False)


class TestOperatorLaws:
    """Laws checked on every space with at most four points."""

    def test_kuratowski(self):
        for space in _spaces_up_to(4):
            assert space.closure_mask(0) == 0
            for a in range(1 << space.size):
                cl = space.closure_mask(a)
                assert a & ~cl == 0
                assert space.closure_mask(cl) == cl
                for b in range(1 << space.size):
                    assert space.closure_mask(a | b) == cl | space.closure_mask(b)

    def test_interior_and_boundary_from_closure(self):
        for space in _spaces_up_to(4):
            full = space.full
            for a in range(1 << space.size):
                complement_closure = space.closure_mask(full & ~a)
                assert space.interior_mask(a) == full & ~complement_closure
                assert space.boundary_mask(a) == space.closure_mask(a) & complement_closure

    def test_preorder_round_trip(self):
        for space in _spaces_up_to(4):
            assert topology_from_preorder(specialization_preorder(space)) == space

    def test_classification_implications(self):
        for space in _spaces_up_to(4):
            for a in range(1 << space.size):
                flags = classify_set(space, a)
                assert flags.clopen == (flags.open and flags.closed)
                if flags.regular_open:
                    assert flags.open
                if flags.open:
                    assert flags.preopen
                assert flags.open == space.is_open(a)
                assert flags.closed == space.is_closed(a)


class TestConfig:
    """Test environment parsing."""

    def test_integer_value(self, monkeypatch):
        monkeypatch.setenv("LCTOPO_TEST_INT", "3")
        assert env_int("LCTOPO_TEST_INT", 1) == 3

    def test_unset_value(self, monkeypatch):
        monkeypatch.delenv("LCTOPO_TEST_INT", raising=False)
        assert env_int("LCTOPO_TEST_INT", 7) == 7

    def test_bad_value_falls_back(self, monkeypatch, caplog):
        monkeypatch.setenv("LCTOPO_TEST_INT", "many")
        with caplog.at_level(logging.WARNING):
            assert env_int("LCTOPO_TEST_INT", 1) == 1
        assert "LCTOPO_TEST_INT" in caplog.text
