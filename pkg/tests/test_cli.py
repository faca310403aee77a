"""
Tests for the lctopo command line.
"""

import json

import pytest
import logging

from src.cli import dot_quote, export_dot, hasse_edges, run
from src.core import GroundSet, dump_space, validate_topology

logger = logging.getLogger(__name__)


def _lines(capsys):
    out = capsys.readouterr().out
    return [json.loads(line) for line in out.splitlines() if line.strip()]


class TestCheck:
    """Test check and the exit-code contract."""

    def test_property_true(self, capsys):
        assert run(["check", "sierpinski", "--property", "submaximal"]) == 0
        assert _lines(capsys) == [{"property": "submaximal", "value": True}]

    def test_property_false(self, capsys):
        assert run(["check", "sierpinski", "--property", "td", "--property", "t1"]) == 1
        assert [r["value"] for r in _lines(capsys)] == [True, False]

    def test_file_path(self, spaces_dir, capsys):
        assert run(["check", str(spaces_dir / "sierpinski.json"), "--property", "door"]) == 0

    def test_invalid_space(self, tmp_path, capsys):
        bad = tmp_path / "bad.json"
        bad.write_text(json.dumps({"points": ["a", "b", "c"], "opens": [[], ["a"], ["b"], ["a", "b", "c"]]}))
        assert run(["check", str(bad)]) == 2
        (record,) = _lines(capsys)
        assert record["error"] == "NotClosedUnderUnion"

    def test_unknown_property(self, capsys):
        assert run(["check", "sierpinski", "--property", "t7"]) == 2
        assert _lines(capsys)[0]["error"] == "UnknownProperty"

    def test_malformed_file(self, tmp_path, capsys):
        bad = tmp_path / "bad.json"
        bad.write_text("{")
        assert run(["check", str(bad)]) == 2
        assert _lines(capsys)[0]["error"] == "MalformedFile"

    def test_file_not_utf8(self, tmp_path, capsys):
        bad = tmp_path / "bad.json"
        bad.write_bytes(b'{"points": ["\xff"], "opens": [[], ["\xff"]]}')
        assert run(["check", str(bad)]) == 2
        assert _lines(capsys)[0]["error"] == "MalformedFile"

    def test_unknown_space_name(self, capsys):
        assert run(["check", "no-such-space"]) == 2

    def test_fixture_round_trip(self, spaces_dir, capsys):
        for path in sorted(spaces_dir.glob("*.json")):
            assert run(["check", str(path)]) == 0
            (record,) = _lines(capsys)
            assert record["space"] == json.loads(path.read_text(encoding="utf-8"))

    def test_missing_subcommand(self):
        with pytest.raises(SystemExit) as info:
            run([])
        assert info.value.code == 2


class TestSpaceCommands:
    """Test lc, classify-set, tl and construct."""

    def test_tl_of_sierpinski_is_discrete(self, capsys):
        assert run(["tl", "sierpinski"]) == 0
        (record,) = _lines(capsys)
        assert record == {"points": ["a", "b"], "opens": [[], ["a"], ["b"], ["a", "b"]]}

    def test_lc_subset(self, capsys):
        assert run(["lc", "chain3", "--subset", "a,c"]) == 1
        assert _lines(capsys)[0]["locally_closed"] is False
        assert run(["lc", "chain3", "--subset", "b", "--all-decompositions"]) == 0
        record = _lines(capsys)[0]
        assert record["standard_decomposition"] == {"open": ["a", "b"], "closed": ["b", "c"]}
        assert record["decompositions"]
        assert set(record["criteria"].values()) == {True}

    def test_lc_family(self, capsys):
        assert run(["lc", "sierpinski"]) == 0
        assert _lines(capsys)[0]["locally_closed_family"] == [[], ["a"], ["b"], ["a", "b"]]

    def test_foreign_subset(self, capsys):
        assert run(["lc", "sierpinski", "--subset", "z"]) == 2
        assert _lines(capsys)[0]["error"] == "ForeignPoint"

    def test_classify_set(self, capsys):
        assert run(["classify-set", "sierpinski", "--subset", "a"]) == 0
        record = _lines(capsys)[0]
        assert record["open"] and record["dense"] and record["locally_closed"]
        assert not record["closed"]

    def test_construct_product(self, spaces_dir, capsys):
        assert run(["construct", "product", "sierpinski", "sierpinski"]) == 0
        (record,) = _lines(capsys)
        assert record == json.loads((spaces_dir / "sierpinski_square.json").read_text(encoding="utf-8"))

    def test_construct_subspace(self, capsys):
        assert run(["construct", "subspace", "chain3", "--subset", "a,c"]) == 0
        assert _lines(capsys)[0] == {"points": ["a", "c"], "opens": [[], ["a"], ["a", "c"]]}

    def test_construct_sum(self, capsys):
        assert run(["construct", "sum", "sierpinski", "point"]) == 0
        assert _lines(capsys)[0]["points"] == ["0:a", "0:b", "1:a"]


class TestMapCommands:
    """Test map-classify against the stored map examples."""

    @pytest.mark.parametrize("name,require,forbid", [
        ("lc_continuous_not_continuous", "lc-continuous", "continuous"),
        ("locally_closed_not_open", "locally-closed-map", "open-map"),
        ("locally_closed_not_closed", "locally-closed-map", "closed-map"),
    ])
    def test_examples(self, name, require, forbid, capsys):
        assert run(["map-classify", name, "--require", require, "--forbid", forbid]) == 0
        record = _lines(capsys)[0]
        assert record["classification"][require.replace("-", "_")] is True

    def test_mismatch(self, capsys):
        assert run(["map-classify", "lc_continuous_not_continuous", "--require", "continuous"]) == 1

    def test_unknown_flag(self, capsys):
        assert run(["map-classify", "collapse_chain", "--require", "bouncy"]) == 2
        assert _lines(capsys)[-1]["error"] == "UnknownKind"

    def test_map_file_not_utf8(self, tmp_path, capsys):
        bad = tmp_path / "bad_map.json"
        bad.write_bytes(b'{"source": {"points": ["\xff"], "opens": [[]]}}')
        assert run(["map-classify", str(bad)]) == 2
        assert _lines(capsys)[0]["error"] == "MalformedFile"


class TestEnumerationCommands:
    """Test enumerate, verify and search."""

    def test_counts(self, capsys):
        assert run(["enumerate", "-n", "3", "--count-only", "--jobs", "1"]) == 0
        assert _lines(capsys) == [{"n": 3, "labeled": 29}]
        assert run(["enumerate", "-n", "3", "--classes", "--count-only", "--jobs", "1"]) == 0
        assert _lines(capsys) == [{"n": 3, "classes": 9}]

    def test_enumerate_lines(self, capsys):
        assert run(["enumerate", "-n", "2", "--jobs", "1"]) == 0
        assert len(_lines(capsys)) == 4

    def test_size_cap(self, capsys):
        assert run(["enumerate", "-n", "9", "--count-only"]) == 2
        assert _lines(capsys)[0]["error"] == "SizeCapExceeded"

    def test_verify(self, capsys):
        assert run(["verify", "--prop", "P05", "-n", "3", "--jobs", "1"]) == 0
        (record,) = _lines(capsys)
        assert record["prop"] == "P05"
        assert record["checked"] == 29
        assert record["counterexamples"] == []

    def test_verify_output_independent_of_workers(self, capsys):
        argv = ["verify", "--prop", "P01", "--prop", "P10", "--prop", "P18", "-n", "3", "--no-timing"]
        assert run(argv + ["--jobs", "1"]) == 0
        serial = capsys.readouterr().out
        assert run(argv + ["--jobs", "8"]) == 0
        parallel = capsys.readouterr().out
        assert serial == parallel

    def test_unknown_proposition(self, capsys):
        assert run(["verify", "--prop", "P77", "-n", "2"]) == 2

    def test_search_found_and_absent(self, capsys):
        assert run(["search", "--require", "td", "--forbid", "thalf", "-n", "3", "--jobs", "1"]) == 0
        assert _lines(capsys)[0]["n"] == 3
        assert run(["search", "--require", "t0", "--forbid", "td", "-n", "3", "--jobs", "1"]) == 1
        assert _lines(capsys)[0]["found"] is False

    def test_phenomena(self, capsys):
        assert run(["search-phenomenon", "union-of-lc-not-lc", "-n", "4"]) == 0
        record = _lines(capsys)[0]
        assert record["witness"]["subsets"] == [["a"], ["c"]]
        assert run(["search-map-phenomenon", "locally-closed-not-open", "-n", "2"]) == 0
        assert run(["search-phenomenon", "no-such-kind", "-n", "3"]) == 2

    def test_measure(self, capsys):
        assert run(["measure", "-n", "2", "--claim", "tl-idempotent"]) == 0
        assert _lines(capsys)[0]["claim"] == "tl-idempotent"

    def test_list(self, capsys):
        assert run(["list", "propositions"]) == 0
        assert len(_lines(capsys)) == 25


class TestDotExport:
    """Test Hasse diagram export."""

    def test_sierpinski_single_edge(self, sierpinski, capsys):
        covers, equivalences = hasse_edges(sierpinski)
        assert covers == [(1, 0)]
        assert equivalences == []
        assert "n1 -> n0" in export_dot(sierpinski)
        assert run(["export-dot", "sierpinski"]) == 0
        assert "digraph" in capsys.readouterr().out

    def test_discrete_has_no_edges(self, discrete2):
        assert hasse_edges(discrete2) == ([], [])
        assert "->" not in export_dot(discrete2)

    def test_indiscrete_is_a_two_way_edge(self, indiscrete2):
        assert hasse_edges(indiscrete2) == ([], [(0, 1)])
        text = export_dot(indiscrete2)
        assert "n0 -> n1" in text
        assert "both" in text

    def test_chain_is_reduced(self, chain3):
        covers, _ = hasse_edges(chain3)
        # c <= b <= a; the implied edge c -> a is dropped
        assert covers == [(1, 0), (2, 1)]

    def test_labels_are_escaped(self, tmp_path, capsys):
        space = validate_topology(GroundSet(('a"b', "c\\d")), [0b00, 0b01, 0b11])
        text = export_dot(space)
        assert 'label="a\\"b"' in text
        assert 'label="c\\\\d"' in text

        path = tmp_path / "quoted.json"
        path.write_text(dump_space(space), encoding="utf-8")
        assert run(["export-dot", str(path)]) == 0
        assert 'label="a\\"b"' in capsys.readouterr().out

    def test_dot_quote(self):
        assert dot_quote("a") == '"a"'
        assert dot_quote('say "hi"') == '"say \\"hi\\""'
        assert dot_quote("back\\slash") == '"back\\\\slash"'
