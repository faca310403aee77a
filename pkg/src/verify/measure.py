"""
Measured claims: statements that are reported on, never asserted.
"""

import logging
from typing import Callable, Dict, Iterator, List

from ..config import MAP_LEVEL_CAP, SPACE_LEVEL_CAP
from ..core import UnknownKind
from ..enumeration import enumerate_labeled
from ..locally_closed import tl_topology
from ..maps import FiniteMap, enumerate_maps, is_continuous, is_lc_continuous, is_locally_closed_map
from .report import MeasurementReport, map_witness, space_witness

logger = logging.getLogger(__name__)

# composition triples grow as |spaces|^3 * maps^2
COMPOSITION_CAP = 2


def _spaces_up_to(n: int) -> List:
    return [space for size in range(n + 1) for space in enumerate_labeled(size, jobs=1, progress=False)]


def _maps_up_to(n: int) -> Iterator[FiniteMap]:
    spaces = _spaces_up_to(n)
    for source in spaces:
        for target in spaces:
            yield from enumerate_maps(source, target)


def measure_tl_idempotent(n: int) -> MeasurementReport:
    n = min(n, SPACE_LEVEL_CAP)
    report = MeasurementReport(claim="tl-idempotent", n=n)
    for space in enumerate_labeled(n, jobs=1, progress=False):
        report.checked += 1
        refined = tl_topology(space)
        if tl_topology(refined).opens == refined.opens:
            report.holds += 1
        else:
            report.fails += 1
            if report.example is None:
                report.example = space_witness(space, "refining twice differs from refining once")
    return report


def measure_lc_continuity_converse(n: int) -> MeasurementReport:
    """Among maps continuous from the refined source topology, how many are lc-continuous."""
    n = min(n, MAP_LEVEL_CAP)
    report = MeasurementReport(claim="lc-continuity-converse", n=n)
    for f in _maps_up_to(n):
        if not is_continuous(f.with_source(tl_topology(f.source))):
            continue
        report.checked += 1
        if is_lc_continuous(f):
            report.holds += 1
        else:
            report.fails += 1
            if report.example is None:
                report.example = map_witness(f, "continuous from the refined topology but not lc-continuous")
    return report


def measure_lc_map_composition(n: int) -> MeasurementReport:
    """Whether g after f is a locally closed map when f and g are."""
    n = min(n, COMPOSITION_CAP)
    report = MeasurementReport(claim="lc-map-composition", n=n)
    spaces = _spaces_up_to(n)
    lc_maps = {}
    for source in spaces:
        for target in spaces:
            lc_maps[source, target] = [f for f in enumerate_maps(source, target) if is_locally_closed_map(f)]

    for x in spaces:
        for y in spaces:
            for z in spaces:
                for f in lc_maps[x, y]:
                    for g in lc_maps[y, z]:
                        report.checked += 1
                        composite = f.compose(g)
                        if is_locally_closed_map(composite):
                            report.holds += 1
                        else:
                            report.fails += 1
                            if report.example is None:
                                report.example = map_witness(
                                    composite, "composite of locally closed maps is not locally closed"
                                )
    return report


def measure_lc_continuous_strictly_weaker(n: int) -> MeasurementReport:
    """Among lc-continuous maps, how many are also continuous."""
    n = min(n, MAP_LEVEL_CAP)
    report = MeasurementReport(claim="lc-continuous-strictly-weaker", n=n)
    for f in _maps_up_to(n):
        if not is_lc_continuous(f):
            continue
        report.checked += 1
        if is_continuous(f):
            report.holds += 1
        else:
            report.fails += 1
            if report.example is None:
                report.example = map_witness(f, "lc-continuous but not continuous")
    return report


MEASURED_CLAIMS: Dict[str, Callable[[int], MeasurementReport]] = {
    "tl-idempotent": measure_tl_idempotent,
    "lc-continuity-converse": measure_lc_continuity_converse,
    "lc-map-composition": measure_lc_map_composition,
    "lc-continuous-strictly-weaker": measure_lc_continuous_strictly_weaker,
}


def measure_claims(n: int, claims: List[str] = None) -> List[MeasurementReport]:
    """
    Run measured claims at size n (each clamped to its own cap).

    Raises:
        UnknownKind: for an unregistered claim name
    """
    names = claims or list(MEASURED_CLAIMS)
    reports = []
    for name in names:
        measure = MEASURED_CLAIMS.get(name)
        if measure is None:
            raise UnknownKind(name)
        report = measure(n)
        logger.info(f"Measured {name} at n={report.n}: {report.holds} hold, {report.fails} fail")
        reports.append(report)
    return reports
