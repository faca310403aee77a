"""
Command-line interface for the lctopo engine.

Structured results are written to stdout as JSON lines; logging goes to
stderr. Exit codes: 0 success, 1 a property is false / a counterexample
was found / a witness is absent, 2 input error.
"""

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import List, Optional, Sequence

from ..config import DEFAULT_JOBS, LOG_LEVEL, MAPS_DIR, SHOW_PROGRESS
from ..constructions import disjoint_sum, product, subspace
from ..core import (
    LcTopoError,
    MalformedFile,
    Topology,
    UnknownKind,
    classify_set,
    dump_space,
    get_space_library,
    load_space,
)
from ..enumeration import count_labeled, enumerate_classes, enumerate_labeled
from ..locally_closed import (
    evaluate_criteria,
    is_locally_closed,
    lc_decompositions,
    locally_closed_family,
    standard_decomposition,
    tl_topology,
)
from ..maps import FiniteMap, MapClassification, classify_map, load_map
from ..properties import check_property, list_properties, property_profile, resolve_property
from ..verify import (
    list_map_phenomena,
    list_propositions,
    list_set_phenomena,
    measure_claims,
    search,
    search_map_phenomena,
    search_set_phenomena,
    verify_all,
    verify_proposition,
)
from .dot_export import export_dot

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FALSE = 1
EXIT_INPUT_ERROR = 2


def emit(record: dict):
    print(json.dumps(record, ensure_ascii=False))


def resolve_space(argument: str) -> Topology:
    """A space file path, or the name of a library space (e.g. ``sierpinski``)."""
    path = Path(argument)
    if path.exists():
        return load_space(path)
    space = get_space_library().get_space(argument)
    if space is None:
        raise MalformedFile(f"no space file or library space named {argument!r}")
    return space


def resolve_map(argument: str) -> FiniteMap:
    path = Path(argument)
    if not path.exists():
        path = MAPS_DIR / f"{argument}.json"
    if not path.exists():
        raise MalformedFile(f"no map file or library map named {argument!r}")
    return load_map(path)


def parse_subset(space: Topology, text: str) -> int:
    """Comma-separated labels; the empty string is the empty set."""
    labels = [label.strip() for label in text.split(",") if label.strip()]
    return space.subset(labels).bits


def _map_flag(name: str) -> str:
    field_name = name.replace("-", "_")
    if field_name not in MapClassification.__dataclass_fields__:
        raise UnknownKind(name)
    return field_name


# --- subcommands ---------------------------------------------------------------

def cmd_check(args) -> int:
    space = resolve_space(args.space)
    if not args.property:
        emit({"valid": True, "space": space.to_dict(), "profile": property_profile(space)})
        return EXIT_OK

    holds = True
    for name in args.property:
        value = check_property(space, name)
        emit({"property": resolve_property(name).value, "value": value})
        holds = holds and value
    return EXIT_OK if holds else EXIT_FALSE


def cmd_classify_set(args) -> int:
    space = resolve_space(args.space)
    mask = parse_subset(space, args.subset)
    record = {"subset": space.ground.labels_of(mask)}
    record.update(classify_set(space, mask).to_dict())
    record["locally_closed"] = is_locally_closed(space, mask)
    emit(record)
    return EXIT_OK


def cmd_lc(args) -> int:
    space = resolve_space(args.space)
    if args.subset is None:
        emit({"locally_closed_family": [s.labels for s in locally_closed_family(space)]})
        return EXIT_OK

    mask = parse_subset(space, args.subset)
    locally_closed = is_locally_closed(space, mask)
    record = {
        "subset": space.ground.labels_of(mask),
        "locally_closed": locally_closed,
        "criteria": evaluate_criteria(space, mask),
    }
    if locally_closed:
        record["standard_decomposition"] = standard_decomposition(space, mask).to_dict()
        if args.all_decompositions:
            record["decompositions"] = [d.to_dict() for d in lc_decompositions(space, mask)]
    emit(record)
    return EXIT_OK if locally_closed else EXIT_FALSE


def cmd_tl(args) -> int:
    print(dump_space(tl_topology(resolve_space(args.space))))
    return EXIT_OK


def cmd_map_classify(args) -> int:
    f = resolve_map(args.map)
    classification = classify_map(f).to_dict()
    emit({"map": f.as_labels(), "classification": classification})

    required = [_map_flag(name) for name in args.require]
    forbidden = [_map_flag(name) for name in args.forbid]
    matches = all(classification[k] for k in required) and not any(classification[k] for k in forbidden)
    if not matches:
        logger.info(f"Map {args.map} does not match --require {args.require} --forbid {args.forbid}")
    return EXIT_OK if matches else EXIT_FALSE


def cmd_construct(args) -> int:
    if args.construction == "subspace":
        if len(args.spaces) != 1 or args.subset is None:
            raise MalformedFile("subspace takes one space and --subset")
        space = resolve_space(args.spaces[0])
        result = subspace(space, parse_subset(space, args.subset))
    else:
        factors = [resolve_space(name) for name in args.spaces]
        result = product(factors) if args.construction == "product" else disjoint_sum(factors)
    print(dump_space(result))
    return EXIT_OK


def cmd_enumerate(args) -> int:
    jobs, progress = args.jobs, args.progress
    if args.count_only:
        if args.classes:
            count = sum(1 for _ in enumerate_classes(args.n, jobs=jobs, progress=progress))
        else:
            count = count_labeled(args.n, jobs=jobs)
        emit({"n": args.n, "classes" if args.classes else "labeled": count})
        return EXIT_OK

    spaces = enumerate_classes(args.n, jobs=jobs, progress=progress) if args.classes \
        else enumerate_labeled(args.n, jobs=jobs, progress=progress)
    for space in spaces:
        print(dump_space(space))
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.all:
        reports = verify_all(args.n, jobs=args.jobs, progress=args.progress)
    elif args.prop:
        reports = [verify_proposition(prop, args.n, jobs=args.jobs, progress=args.progress) for prop in args.prop]
    else:
        raise MalformedFile("verify needs --prop or --all")

    for report in reports:
        emit(report.to_dict(timing=not args.no_timing))
    failed = [r.proposition for r in reports if not r.verified]
    if failed:
        logger.warning(f"Counterexamples found for {', '.join(failed)}")
        return EXIT_FALSE
    logger.info(f"{len(reports)} propositions verified")
    return EXIT_OK


def _outcome(outcome) -> int:
    emit(outcome.to_dict())
    return EXIT_OK if outcome.found else EXIT_FALSE


def cmd_search(args) -> int:
    return _outcome(search(args.require, args.forbid, args.n, jobs=args.jobs, progress=args.progress))


def cmd_search_phenomenon(args) -> int:
    return _outcome(search_set_phenomena(args.kind, args.n))


def cmd_search_map_phenomenon(args) -> int:
    return _outcome(search_map_phenomena(args.kind, args.n))


def cmd_measure(args) -> int:
    for report in measure_claims(args.n, args.claim or None):
        emit(report.to_dict())
    return EXIT_OK


def cmd_export_dot(args) -> int:
    sys.stdout.write(export_dot(resolve_space(args.space)))
    return EXIT_OK


def cmd_list(args) -> int:
    if args.what == "properties":
        for pid in list_properties():
            emit({"property": pid.value})
    elif args.what == "propositions":
        for proposition in list_propositions():
            emit(proposition.to_dict())
    elif args.what == "spaces":
        for name in get_space_library().list_spaces():
            emit({"space": name})
    else:
        for kind in list_set_phenomena():
            emit({"phenomenon": kind, "level": "set"})
        for kind in list_map_phenomena():
            emit({"phenomenon": kind, "level": "map"})
    return EXIT_OK


# --- parser --------------------------------------------------------------------

def _add_workers(parser: argparse.ArgumentParser):
    parser.add_argument('--jobs', type=int, default=DEFAULT_JOBS, help='Worker processes')
    parser.add_argument('--progress', action='store_true', default=SHOW_PROGRESS,
                        help='Show progress bars on stderr')


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="lctopo", description="Locally closed sets in finite spaces")
    commands = parser.add_subparsers(dest="command", required=True)

    p = commands.add_parser("check", help="Validate a space and evaluate properties")
    p.add_argument("space", help="Space file or library name")
    p.add_argument("--property", action="append", default=[], help="Property token (repeatable)")
    p.set_defaults(handler=cmd_check)

    p = commands.add_parser("classify-set", help="Classify a subset of a space")
    p.add_argument("space")
    p.add_argument("--subset", required=True, help="Comma-separated labels")
    p.set_defaults(handler=cmd_classify_set)

    p = commands.add_parser("lc", help="Locally closed test or the whole locally closed family")
    p.add_argument("space")
    p.add_argument("--subset", help="Comma-separated labels; omit for the family")
    p.add_argument("--all-decompositions", action="store_true",
                   help="List every open/closed decomposition")
    p.set_defaults(handler=cmd_lc)

    p = commands.add_parser("tl", help="Topology generated by the locally closed sets")
    p.add_argument("space")
    p.set_defaults(handler=cmd_tl)

    p = commands.add_parser("map-classify", help="Classify a map file")
    p.add_argument("map", help="Map file or library map name")
    p.add_argument("--require", action="append", default=[], help="Flag that must hold (e.g. lc-continuous)")
    p.add_argument("--forbid", action="append", default=[], help="Flag that must fail (e.g. continuous)")
    p.set_defaults(handler=cmd_map_classify)

    p = commands.add_parser("construct", help="Build subspaces, products and sums")
    p.add_argument("construction", choices=["subspace", "product", "sum"])
    p.add_argument("spaces", nargs="+")
    p.add_argument("--subset", help="Subspace points, comma-separated")
    p.set_defaults(handler=cmd_construct)

    p = commands.add_parser("enumerate", help="All topologies on n points")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--classes", action="store_true", help="One canonical space per homeomorphism class")
    p.add_argument("--count-only", action="store_true")
    _add_workers(p)
    p.set_defaults(handler=cmd_enumerate)

    p = commands.add_parser("verify", help="Check propositions exhaustively")
    p.add_argument("--prop", action="append", help="Proposition id, e.g. P05 (repeatable)")
    p.add_argument("--all", action="store_true")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--no-timing", action="store_true", help="Omit elapsed milliseconds from reports")
    _add_workers(p)
    p.set_defaults(handler=cmd_verify)

    p = commands.add_parser("search", help="Least space with required and without forbidden properties")
    p.add_argument("--require", action="append", default=[])
    p.add_argument("--forbid", action="append", default=[])
    p.add_argument("-n", type=int, required=True)
    _add_workers(p)
    p.set_defaults(handler=cmd_search)

    p = commands.add_parser("search-phenomenon", help="Least witness of a set-level phenomenon")
    p.add_argument("kind")
    p.add_argument("-n", type=int, required=True)
    p.set_defaults(handler=cmd_search_phenomenon)

    p = commands.add_parser("search-map-phenomenon", help="Least witness of a map-level phenomenon")
    p.add_argument("kind")
    p.add_argument("-n", type=int, required=True)
    p.set_defaults(handler=cmd_search_map_phenomenon)

    p = commands.add_parser("measure", help="Report on claims that are measured, not asserted")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--claim", action="append", default=[])
    p.set_defaults(handler=cmd_measure)

    p = commands.add_parser("export-dot", help="Hasse diagram of the specialization preorder")
    p.add_argument("space")
    p.set_defaults(handler=cmd_export_dot)

    p = commands.add_parser("list", help="List registered names")
    p.add_argument("what", choices=["properties", "propositions", "spaces", "phenomena"])
    p.set_defaults(handler=cmd_list)

    return parser


def run(argv: Optional[Sequence[str]] = None) -> int:
    """Parse arguments, dispatch, and map domain errors to exit code 2."""
    args = build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except LcTopoError as e:
        logger.error(f"{e.token}: {e.message}")
        emit(e.to_dict())
        return EXIT_INPUT_ERROR


def main(argv: List[str] = None):
    logging.basicConfig(
        level=LOG_LEVEL,
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        stream=sys.stderr
    )
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
