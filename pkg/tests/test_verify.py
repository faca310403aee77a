"""
Tests for the proposition registry and the exhaustive runner.
"""

import pytest
import logging

from src.core import SizeCapExceeded, UnknownProposition
from src.verify import (
    Domain,
    PROPOSITIONS,
    Proposition,
    Witness,
    get_proposition,
    list_propositions,
    replay_counterexample,
    verify_all,
    verify_proposition,
)

logger = logging.getLogger(__name__)


def _fails_on_nonempty(space, a):
    return "subset is nonempty" if a else None


class TestRegistry:
    """Test proposition lookup."""

    def test_twenty_five_propositions(self):
        ids = [p.proposition_id for p in list_propositions()]
        assert ids == [f"P{k:02d}" for k in range(1, 26)]

    def test_lookup_is_case_insensitive(self):
        assert get_proposition("p05") is PROPOSITIONS["P05"]

    def test_unknown(self):
        with pytest.raises(UnknownProposition):
            get_proposition("P99")

    def test_to_dict(self):
        data = get_proposition("P01").to_dict()
        assert data["domain"] == "space+subset"
        assert data["cap"] == 4


class TestRunner:
    """Test exhaustive verification."""

    def test_connected_refined_topology(self):
        report = verify_proposition("P05", 3)
        assert report.verified
        assert report.checked == 29

    def test_submaximal_spaces_at_four(self):
        report = verify_proposition("P04", 4)
        assert report.verified
        assert report.checked == 355

    def test_criteria_at_four(self):
        report = verify_proposition("P01", 4)
        assert report.verified
        assert report.checked == 5680

    def test_subset_pairs_are_counted(self):
        report = verify_proposition("P03", 2)
        # 4 spaces, 16 ordered subset pairs each
        assert report.checked == 64
        assert report.verified

    def test_map_domain_counts_size_pairs(self):
        report = verify_proposition("P18", 1)
        # (0,1): one empty map; (1,0): none; (1,1): one
        assert report.checked == 2

    def test_all_propositions_at_three(self):
        reports = verify_all(3, jobs=1)
        assert len(reports) == 25
        for report in reports:
            assert report.verified, report.to_dict()
        logger.info(f"Checked {sum(r.checked for r in reports)} instances")

    @pytest.mark.slow
    def test_all_propositions_at_caps(self):
        for report in verify_all(4, jobs=1):
            assert report.verified, report.to_dict()

    def test_cap_is_enforced(self):
        with pytest.raises(SizeCapExceeded):
            verify_proposition("P18", 4)

    def test_workers_do_not_change_the_report(self):
        serial = verify_proposition("P10", 4, jobs=1).to_dict(timing=False)
        parallel = verify_proposition("P10", 4, jobs=3).to_dict(timing=False)
        assert serial == parallel

    def test_report_fields(self):
        data = verify_proposition("P05", 2).to_dict()
        assert set(data) == {"prop", "n", "checked", "counterexamples", "ms"}
        assert "ms" not in verify_proposition("P05", 2).to_dict(timing=False)


class TestCounterexamples:
    """Test witness collection and replay with a deliberately false claim."""

    @pytest.fixture
    def false_claim(self):
        return Proposition("X01", "false claim", "every subset is empty",
                           Domain.SUBSETS, _fails_on_nonempty)

    def test_counterexamples_are_reported(self, false_claim):
        report = verify_proposition(false_claim, 2)
        assert not report.verified
        # three nonempty subsets in each of the four spaces
        assert len(report.counterexamples) == 12

    def test_replay(self, false_claim):
        report = verify_proposition(false_claim, 2)
        for witness in report.counterexamples:
            assert replay_counterexample(false_claim, witness) == "subset is nonempty"

    def test_witness_round_trip(self, false_claim):
        witness = verify_proposition(false_claim, 2).counterexamples[0]
        assert Witness.from_dict(witness.to_dict()) == witness
