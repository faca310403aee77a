"""
Exhaustive proposition runner.

Every proposition is checked over all instances of its domain at size n.
The instance space is cut into work units (one per first preorder row for
single-space domains, one per pair of sizes for pair domains). Units are
processed in a fixed order, serially or by a worker pool, so counts and
counterexample lists do not depend on the number of workers.
"""

import logging
import time
from multiprocessing import Pool
from typing import List, Optional, Tuple, Union

from tqdm import tqdm

from ..config import DEFAULT_JOBS, SHOW_PROGRESS
from ..core import GroundSet, SizeCapExceeded, topology_from_neighborhoods
from ..enumeration import check_enumeration_size, enumerate_labeled, first_rows, iter_rows
from ..maps import enumerate_maps
from .propositions import PROPOSITIONS, Domain, Proposition, get_proposition, list_propositions
from .report import VerificationReport, Witness, map_witness, pair_witness, space_witness

logger = logging.getLogger(__name__)

UnitResult = Tuple[int, List[Witness]]


def _work_units(proposition: Proposition, n: int) -> list:
    if proposition.domain in (Domain.MAPS, Domain.SPACE_PAIRS):
        return [(p, q) for p in range(n + 1) for q in range(n + 1) if max(p, q) == n]
    return first_rows(n) or [None]


def _spaces_of_unit(n: int, first_row: Optional[int]):
    ground = GroundSet.standard(n)
    for rows in iter_rows(n, first_row):
        yield topology_from_neighborhoods(ground, rows)


def _run_space_unit(proposition: Proposition, n: int, first_row: Optional[int]) -> UnitResult:
    checked = 0
    witnesses = []
    subsets = range(1 << n)
    for space in _spaces_of_unit(n, first_row):
        if proposition.domain is Domain.SPACES:
            checked += 1
            clause = proposition.check(space)
            if clause:
                witnesses.append(space_witness(space, clause))
        elif proposition.domain is Domain.SUBSETS:
            for a in subsets:
                checked += 1
                clause = proposition.check(space, a)
                if clause:
                    witnesses.append(space_witness(space, clause, subsets=[a]))
        else:
            for a in subsets:
                for b in subsets:
                    checked += 1
                    clause = proposition.check(space, a, b)
                    if clause:
                        witnesses.append(space_witness(space, clause, subsets=[a, b]))
    return checked, witnesses


def _run_pair_unit(proposition: Proposition, p: int, q: int) -> UnitResult:
    checked = 0
    witnesses = []
    targets = list(enumerate_labeled(q, jobs=1, progress=False))
    for source in enumerate_labeled(p, jobs=1, progress=False):
        for target in targets:
            if proposition.domain is Domain.SPACE_PAIRS:
                checked += 1
                clause = proposition.check(source, target)
                if clause:
                    witnesses.append(pair_witness(source, target, clause))
                continue
            for f in enumerate_maps(source, target):
                checked += 1
                clause = proposition.check(f)
                if clause:
                    witnesses.append(map_witness(f, clause))
    return checked, witnesses


def _run(proposition: Proposition, n: int, unit) -> UnitResult:
    if proposition.domain in (Domain.MAPS, Domain.SPACE_PAIRS):
        return _run_pair_unit(proposition, *unit)
    return _run_space_unit(proposition, n, unit)


def _run_unit(task) -> UnitResult:
    proposition_id, n, unit = task
    return _run(get_proposition(proposition_id), n, unit)


def verify_proposition(proposition: Union[str, Proposition], n: int, jobs: int = None,
                       progress: bool = None) -> VerificationReport:
    """
    Check a proposition over every instance of its domain at size n.

    Args:
        proposition: Proposition or its id ("P05")
        n: Instance size
        jobs: Worker processes (defaults to DEFAULT_JOBS)
        progress: Show a tqdm bar on stderr

    Returns:
        VerificationReport listing every counterexample found

    Raises:
        UnknownProposition, SizeCapExceeded
    """
    if not isinstance(proposition, Proposition):
        proposition = get_proposition(proposition)
    if n > proposition.cap:
        raise SizeCapExceeded(f"{proposition.proposition_id} domain size", n, proposition.cap)
    check_enumeration_size(n)
    jobs = DEFAULT_JOBS if jobs is None else jobs
    progress = SHOW_PROGRESS if progress is None else progress

    started = time.perf_counter()
    report = VerificationReport(proposition=proposition.proposition_id, n=n)
    tasks = [(proposition.proposition_id, n, unit) for unit in _work_units(proposition, n)]
    registered = PROPOSITIONS.get(proposition.proposition_id) is proposition

    if jobs > 1 and len(tasks) > 1 and registered:
        with Pool(jobs) as pool:
            results = list(tqdm(pool.imap(_run_unit, tasks), total=len(tasks),
                                desc=proposition.proposition_id, disable=not progress))
    else:
        results = []
        for _, _, unit in tqdm(tasks, desc=proposition.proposition_id, disable=not progress):
            results.append(_run(proposition, n, unit))

    for checked, witnesses in results:
        report.checked += checked
        report.counterexamples.extend(witnesses)
    report.elapsed_ms = int((time.perf_counter() - started) * 1000)

    if report.verified:
        logger.info(f"{report.proposition} verified at n={n} over {report.checked} instances")
    else:
        logger.warning(
            f"{report.proposition} has {len(report.counterexamples)} counterexamples at n={n}"
        )
    return report


def verify_all(n: int, jobs: int = None, progress: bool = None) -> List[VerificationReport]:
    """Every registered proposition at min(n, its domain cap), ordered by id."""
    return [
        verify_proposition(p, min(n, p.cap), jobs=jobs, progress=progress)
        for p in list_propositions()
    ]


def replay_counterexample(proposition: Union[str, Proposition], witness: Witness) -> Optional[str]:
    """Re-run a proposition check on the data recorded in a witness."""
    if not isinstance(proposition, Proposition):
        proposition = get_proposition(proposition)
    if proposition.domain is Domain.SPACES:
        return proposition.check(witness.spaces[0])
    if proposition.domain in (Domain.SUBSETS, Domain.SUBSET_PAIRS):
        return proposition.check(witness.spaces[0], *witness.subset_masks())
    if proposition.domain is Domain.SPACE_PAIRS:
        return proposition.check(*witness.spaces)
    return proposition.check(witness.finite_map())
