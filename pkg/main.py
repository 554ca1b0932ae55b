"""
Command-line entry point for tdorbit
"""
import argparse
import logging
import sys
from typing import List, Optional, Tuple

from classification.classes import (
    b_invariants,
    class_representative,
    class_size,
    count_classes_by_strings,
    count_classes_recursive,
    enumerate_classes,
)
from classification.orbits import count_for_partition, counts_by_dimension, enumerate_descriptors
from classification.partitions import (
    PartitionType,
    all_compositions,
    all_flocks,
    container_of_flock,
    iminus_iplus,
    sparse_sequences,
    type_of,
)
from config.run_config import FORMATS, SUITES, ConfigPresets, RunConfig
from models.errors import BudgetExceeded, TDOrbitError
from reporting.charts import CountsChart
from reporting.emitters import Report, emit
from representations.gelfand_model import assign_characters, assignment_listing, verify_model
from representations.orbit_method import character_table, irreducible_dimension
from verification.verification_manager import VerificationManager

logger = logging.getLogger("tdorbit")

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int, default=None, help="rank n of G_n")
    common.add_argument("--q", type=int, default=None, help="prime field size")
    common.add_argument("--format", choices=FORMATS, default=None)
    common.add_argument("--output", default=None, help="write the report to this file instead of stdout")
    common.add_argument("--config", default=None, help="JSON run configuration to start from")
    common.add_argument("--preset", choices=("quick", "desk", "acceptance"), default=None)
    common.add_argument("--jobs", type=int, default=None,
                        help="worker processes for character tables (default $TDORBIT_JOBS or 1)")
    common.add_argument("--seed", type=int, default=None)
    common.add_argument("--samples", type=int, default=None, help="random pairs for homomorphism checks")
    common.add_argument("--verbose", action="store_true")

    parser = argparse.ArgumentParser(prog="tdorbit", description="Orbits, classes and representations of TD_n(F_p)")
    sub = parser.add_subparsers(dest="command", required=True)

    counts = sub.add_parser("counts", parents=[common], help="orbit and class counts per dimension")
    counts.add_argument("--plot", default=None, help="save a bar chart to this file")
    for name in ("orbits", "classes"):
        p = sub.add_parser(name, parents=[common], help=f"{name} of G_n")
        p.add_argument("--enumerate", action="store_true")
    partitions = sub.add_parser("partitions", parents=[common], help="compositions, flocks and containers")
    partitions.add_argument("--flocks", action="store_true")
    partitions.add_argument("--containers", action="store_true")
    irreps = sub.add_parser("irreps", parents=[common], help="irreducible representations")
    irreps.add_argument("--char-table", action="store_true")
    sub.add_parser("model", parents=[common], help="Gelfand model assignment and multiplicities")
    verify = sub.add_parser("verify", parents=[common], help="run acceptance suites")
    verify.add_argument("--suite", choices=SUITES, default=None)
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    if args.config:
        config = RunConfig.load_from_file(args.config)
    elif args.preset:
        config = ConfigPresets.by_name(args.preset)
    else:
        config = RunConfig()
    config.command = args.command
    overrides = {
        "n": args.n,
        "q": args.q,
        "format": args.format,
        "output": args.output,
        "jobs": args.jobs,
        "seed": args.seed,
        "homomorphism_samples": args.samples,
        "suite": getattr(args, "suite", None),
        "plot": getattr(args, "plot", None),
    }
    for name, value in overrides.items():
        if value is not None:
            setattr(config, name, value)
    return config


# Command reports

def class_table(n: int, q: int, config: RunConfig):
    if n >= 2:
        return count_classes_recursive(n, q)
    return count_classes_by_strings(n, q, config.max_dot_strings)


def counts_report(config: RunConfig) -> Report:
    n, q = config.n, config.q
    orbits = counts_by_dimension(n, q)
    classes = class_table(n, q, config).totals()
    rows = [["orbit", d, c] for d, c in orbits.items()] + [["class", k, c] for k, c in classes.items()]
    footer = [f"total orbits {sum(orbits.values())}, total classes {sum(classes.values())}"]
    if config.plot:
        chart = CountsChart(n, q, orbits, classes)
        if chart.save_chart(config.plot):
            footer.append(f"chart saved to {config.plot}")
    return Report(
        f"Counts for G_{n}(F_{q})",
        {"orbits": orbits, "classes": classes},
        ["kind", "dimension", "count"],
        rows,
        footer,
    )


def orbits_report(config: RunConfig, enumerate_all: bool) -> Report:
    n, q = config.n, config.q
    if enumerate_all:
        descriptors = list(enumerate_descriptors(n, q, config.max_group_order))
        rows = [[str(d.partition), [v.value for v in d.y_values], [[r, v.value] for r, v in d.odd_invariants],
                 d.dimension] for d in descriptors]
        return Report(f"Coadjoint orbits of G_{n}(F_{q})", {"orbits": descriptors},
                      ["partition", "y", "invariants", "dimension"], rows)
    compositions = sorted(all_compositions(n))
    rows = [[str(p), p.nu, p.n - p.nu, count_for_partition(p, q)] for p in compositions]
    payload = {str(p): {"dimension": p.n - p.nu, "count": count_for_partition(p, q)} for p in compositions}
    return Report(f"Orbits of G_{n}(F_{q}) per partition", payload, ["partition", "nu", "dimension", "orbits"], rows)


def classes_report(config: RunConfig, enumerate_all: bool) -> Report:
    n, q = config.n, config.q
    if enumerate_all:
        rows = []
        payload = []
        for c in enumerate_classes(n, q, config.max_group_order):
            invariants = [inv.label for inv in b_invariants(class_representative(c))]
            rows.append([[x.value for x in c.a], [x.value for x in c.b_coset], class_size(c), invariants])
            payload.append(dict(c.to_dict(), size=class_size(c), invariants=invariants))
        return Report(f"Conjugacy classes of G_{n}(F_{q})", {"classes": payload},
                      ["a", "b", "size", "b-invariants"], rows)
    table = class_table(n, q, config)
    rows = [[k, table.empty_first.get(k, 0), table.heavy_first.get(k, 0), table.total(k)] for k in range(n)]
    return Report(f"Classes of G_{n}(F_{q}) per dimension", table.get_table_summary(),
                  ["k", "a1 = 0", "a1 != 0", "total"], rows)


def partitions_report(config: RunConfig, flocks: bool, containers: bool) -> Report:
    n = config.n
    if flocks:
        rows = []
        for kind in (PartitionType.ODD, PartitionType.EVEN):
            for f in all_flocks(n, kind):
                rows.append([kind.value, str(f.head), str(f.tail), f.k, len(f.members()), container_of_flock(f).label()])
        payload = {"flocks": [dict(zip(("type", "head", "tail", "k", "size", "container"), r)) for r in rows]}
        footer = [f"{sum(1 for r in rows if r[0] == 'odd')} odd-type and "
                  f"{sum(1 for r in rows if r[0] == 'even')} even-type flocks"]
        return Report(f"Flocks of n={n}", payload, ["type", "head", "tail", "k", "size", "container"], rows, footer)
    if containers:
        rows = []
        for s in sparse_sequences(n):
            minus, plus = iminus_iplus(s, n)
            rows.append([s.label(), list(minus), list(plus)])
        payload = {"containers": [{"I": r[0], "I-": r[1], "I+": r[2]} for r in rows]}
        return Report(f"Containers of n={n}", payload, ["container", "I-", "I+"], rows)
    rows = [[str(p), type_of(p).value, p.mu, p.nu] for p in all_compositions(n)]
    payload = {"compositions": [{"parts": r[0], "type": r[1], "mu": r[2], "nu": r[3]} for r in rows]}
    return Report(f"Compositions of n={n}", payload, ["composition", "type", "mu", "nu"], rows)


def irreps_report(config: RunConfig, char_table: bool) -> Report:
    n, q = config.n, config.q
    if char_table:
        table = character_table(n, q, config.jobs, config.max_group_order)
        columns = ["orbit", "dim"] + [c.label() for c in table.classes]
        rows = [[d.label(), dim] + [list(v.coeffs) for v in row]
                for d, dim, row in zip(table.descriptors, table.dimensions(), table.rows)]
        return Report(f"Character table of G_{n}(F_{q})", table.to_dict(), columns, rows,
                      [str(table.get_table_summary())])
    descriptors = list(enumerate_descriptors(n, q, config.max_group_order))
    rows = [[d.label(), irreducible_dimension(d)] for d in descriptors]
    payload = {"irreducibles": [dict(d.to_dict(), dim=irreducible_dimension(d)) for d in descriptors]}
    return Report(f"Irreducible representations of G_{n}(F_{q})", payload, ["orbit", "dim"], rows)


def model_report(config: RunConfig) -> Report:
    n, q = config.n, config.q
    assignment = assign_characters(n, q, config.max_group_order)
    listing = assignment_listing(assignment)
    report = verify_model(n, q, assignment, jobs=config.jobs, budget=config.max_group_order)
    rows = [[r["container"], r["flock"], r["class"], r["A"], r["B"]] for r in listing]
    summary = report.get_report_summary()
    footer = [f"model dimension {summary['model_dimension']}, irreducible dimension sum "
              f"{summary['irreducible_dimension_sum']}, deviations {len(summary['deviations'])}"]
    if summary["offending_containers"]:
        footer.append("offending containers " + " ".join(summary["offending_containers"]))
    return Report(f"Gelfand model of G_{n}(F_{q})", {"assignment": listing, "multiplicities": summary},
                  ["container", "flock", "class", "A", "B"], rows, footer)


def verify_report(config: RunConfig) -> Tuple[Report, bool]:
    manager = VerificationManager(config)
    passed = manager.run(config.suite)
    rows = [[r.suite, r.name, "PASS" if r.passed else "FAIL", r.detail] for r in manager.results]
    report = Report(str(manager), manager.get_verification_summary(), ["suite", "check", "result", "detail"],
                    rows)
    return report, passed


def run(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK

    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )

    try:
        config = config_from_args(args)
    except (OSError, ValueError, TypeError) as e:
        logger.error("Could not read configuration: %s", e)
        return EXIT_USAGE
    issues = config.validate()
    if issues:
        for issue in issues:
            logger.error("%s", issue)
        return EXIT_USAGE

    passed = True
    try:
        if config.command == "counts":
            report = counts_report(config)
        elif config.command == "orbits":
            report = orbits_report(config, args.enumerate)
        elif config.command == "classes":
            report = classes_report(config, args.enumerate)
        elif config.command == "partitions":
            report = partitions_report(config, args.flocks, args.containers)
        elif config.command == "irreps":
            report = irreps_report(config, args.char_table)
        elif config.command == "model":
            report = model_report(config)
            passed = report.payload["multiplicities"]["passed"]
        else:
            report, passed = verify_report(config)
    except BudgetExceeded as e:
        logger.error("Budget exceeded: %s", e)
        return EXIT_BUDGET
    except TDOrbitError as e:
        logger.error("%s", e)
        return EXIT_FAILED

    text = emit(report, config.format, config.output)
    if config.output:
        logger.info("report written to %s", config.output)
    else:
        sys.stdout.write(text)
    return EXIT_OK if passed else EXIT_FAILED


def main():
    """Main entry point"""
    try:
        sys.exit(run(sys.argv[1:]))
    except KeyboardInterrupt:
        sys.exit(130)


if __name__ == "__main__":
    main()
