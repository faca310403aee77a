"""
Verify module: the proposition registry, exhaustive runner, witness search
and measured claims.
"""

from .report import (
    Witness,
    VerificationReport,
    MeasurementReport,
    SearchOutcome,
    space_witness,
    pair_witness,
    map_witness,
)
from .propositions import (
    Domain,
    DOMAIN_CAPS,
    Proposition,
    PROPOSITIONS,
    list_propositions,
    get_proposition,
)
from .runner import verify_proposition, verify_all, replay_counterexample
from .search import (
    SET_PHENOMENA,
    MAP_PHENOMENA,
    search,
    search_set_phenomena,
    search_map_phenomena,
    list_set_phenomena,
    list_map_phenomena,
    replay_search_witness,
)
from .measure import MEASURED_CLAIMS, measure_claims

__all__ = [
    "Witness",
    "VerificationReport",
    "MeasurementReport",
    "SearchOutcome",
    "space_witness",
    "pair_witness",
    "map_witness",
    "Domain",
    "DOMAIN_CAPS",
    "Proposition",
    "PROPOSITIONS",
    "list_propositions",
    "get_proposition",
    "verify_proposition",
    "verify_all",
    "replay_counterexample",
    "SET_PHENOMENA",
    "MAP_PHENOMENA",
    "search",
    "search_set_phenomena",
    "search_map_phenomena",
    "list_set_phenomena",
    "list_map_phenomena",
    "replay_search_witness",
    "MEASURED_CLAIMS",
    "measure_claims",
]
