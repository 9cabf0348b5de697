# -*- coding: utf-8 -*-

"""The sdf-hyperideal command line.

::

    sdf-hyperideal validate RING
    sdf-hyperideal ideals RING
    sdf-hyperideal classify RING --ideal 0,2
    sdf-hyperideal sdf RING --ideal 0,2 [--weak]
    sdf-hyperideal theorem T1 --corpus fixtures
    sdf-hyperideal run-all --corpus fixtures+zomega:nMax=6,omegaMax=3
    sdf-hyperideal search T15 --family zomega:nMax=6
    sdf-hyperideal oracle --corpus fixtures

Defaults come from the packaged ``sdf_hyperideal.ini``, then
``~/SEAMM/sdf_hyperideal.ini``, then ``./sdf_hyperideal.ini``, then
``SDF_HYPERIDEAL_*`` environment variables, and finally the command line.

The exit code is 0 when everything checked holds, 1 for a violation or
counterexample and 2 for bad input.
"""

import importlib.resources
import json
import logging
import sys

import configargparse
from tabulate import tabulate

from .core import validate_hyperring
from .corpus import generate_corpus
from .errors import HyperringError, RingFormatError
from .harness import (
    FAMILY_MAX,
    MATRIX_CAP,
    PRODUCT_CAP,
    HarnessContext,
    check_theorem,
    exit_status,
    run_all,
    search_counterexample,
)
from .ideals import ENUMERATION_CAP, enumerate_hyperideals, is_maximal, is_prime
from .oracle import cross_check
from .ring_format import read_ring
from .sdf import classify, is_sdf_absorbing, is_weakly_sdf_absorbing

logger = logging.getLogger(__name__)

TOOL = "sdf-hyperideal"
COMMANDS = (
    "validate",
    "ideals",
    "classify",
    "sdf",
    "theorem",
    "run-all",
    "search",
    "oracle",
)


class UsageError(Exception):
    """Bad arguments, reported with exit code 2."""


class _ArgParser(configargparse.ArgParser):
    def error(self, message):
        raise UsageError(message)


def _version():
    import sdf_hyperideal_step

    return sdf_hyperideal_step.__version__


def create_parser():
    """The command-line parser with its layered defaults."""
    packaged = importlib.resources.files("sdf_hyperideal_step") / "data"
    parser = _ArgParser(
        prog=TOOL,
        description="Decide sdf-absorbing hyperideals and check their theorems.",
        default_config_files=[
            str(packaged / "sdf_hyperideal.ini"),
            "~/SEAMM/sdf_hyperideal.ini",
            "./sdf_hyperideal.ini",
        ],
        auto_env_var_prefix="SDF_HYPERIDEAL_",
        ignore_unknown_config_file_keys=True,
    )
    parser.add_argument("command", choices=COMMANDS, help="what to do")
    parser.add_argument(
        "subject", nargs="?", help="the ring document, or the theorem id"
    )
    parser.add_argument(
        "--ideal", help="the hyperideal as comma-separated element indices"
    )
    parser.add_argument(
        "--weak", action="store_true", help="check weak sdf-absorption instead"
    )
    parser.add_argument("--corpus", help="the corpus description")
    parser.add_argument("--family", help="the family of rings to search")
    parser.add_argument(
        "--format", choices=("text", "json"), default="text", help="report format"
    )
    parser.add_argument(
        "--log-level",
        default="WARNING",
        type=str.upper,
        choices=["NOTSET", "DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"],
        help="the level of informational output",
    )
    parser.add_argument(
        "--enumeration-cap",
        type=int,
        default=ENUMERATION_CAP,
        help="largest ring order whose hyperideals are enumerated",
    )
    parser.add_argument(
        "--product-cap",
        type=int,
        default=PRODUCT_CAP,
        help="largest product ring built for the product theorems",
    )
    parser.add_argument(
        "--matrix-cap",
        type=int,
        default=MATRIX_CAP,
        help="largest hypermatrix ring scanned for the matrix theorem",
    )
    parser.add_argument(
        "--family-max",
        type=int,
        default=FAMILY_MAX,
        help="largest family of hyperideals intersected",
    )
    return parser


def _members(text):
    return "{" + ",".join(str(x) for x in text) + "}"


def _parse_ideal(ring, text):
    if text is None:
        raise UsageError("--ideal is required")
    try:
        members = [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise UsageError(f"--ideal needs comma-separated integers, not '{text}'")
    return ring.subset(members)


def _need(options, name):
    value = getattr(options, name)
    if value is None:
        raise UsageError(f"'{options.command}' needs {name.replace('_', ' ')}")
    return value


def _harness_settings(options):
    return dict(
        cap=options.enumeration_cap,
        product_cap=options.product_cap,
        matrix_cap=options.matrix_cap,
        family_max=options.family_max,
    )


def _context(options, text):
    corpus = generate_corpus(text, enumeration_cap=options.enumeration_cap)
    return HarnessContext(corpus, **_harness_settings(options))


def _verdict_table(verdicts):
    rows = [
        [
            v["id"],
            v["instancesScanned"],
            v["premisesSatisfied"],
            v["conclusionsHeld"],
            v["inapplicable"],
            len(v["counterexamples"]),
            "yes" if v["vacuous"] else "",
            "" if v["gated"] else "no",
        ]
        for v in verdicts
    ]
    headers = [
        "Theorem",
        "Scanned",
        "Premises",
        "Held",
        "Inapplicable",
        "Counterexamples",
        "Vacuous",
        "Gated",
    ]
    lines = [tabulate(rows, headers, tablefmt="psql")]
    for v in verdicts:
        for c in v["counterexamples"]:
            lines.append(
                f"counterexample to {c['theorem']} {c['clause']}: {c['instance']}"
            )
    return "\n".join(lines)


def _validate(options):
    ring = read_ring(_need(options, "subject")).ring
    report = validate_hyperring(ring)
    verdict = {
        "check": "axioms",
        "ring": ring.name,
        "holds": report.passed,
        "failed": report.failed_axioms(),
        "stronglyDistributive": report.strongly_distributive,
        "identityWitnesses": list(report.identity_witnesses.members),
        "violations": [[v.axiom, list(v.witness)] for v in report.violations],
    }
    lines = [
        f"{ring.name}: {'a' if report.passed else 'not a'} multiplicative hyperring",
        f"identity witnesses: {report.identity_witnesses}",
        f"strongly distributive: {str(report.strongly_distributive).lower()}",
    ]
    for v in report.violations:
        lines.append(f"{v.axiom} fails at {v.witness}")
    return (0 if report.passed else 1), [verdict], "\n".join(lines)


def _ideals(options):
    ring = read_ring(_need(options, "subject")).ring
    ideals = enumerate_hyperideals(ring, options.enumeration_cap)
    rows = []
    for P in ideals:
        proper = P.bits != ring.full_bits
        rows.append(
            {
                "members": list(P.members.members),
                "proper": proper,
                "prime": proper and bool(is_prime(ring, P)),
                "maximal": proper
                and bool(is_maximal(ring, P, options.enumeration_cap)),
            }
        )
    verdict = {"check": "hyperideals", "ring": ring.name, "ideals": rows}
    text = tabulate(
        [
            [_members(r["members"]), r["proper"], r["prime"], r["maximal"]]
            for r in rows
        ],
        ["Hyperideal", "Proper", "Prime", "Maximal"],
        tablefmt="psql",
    )
    return 0, [verdict], f"{ring.name}: {len(rows)} hyperideals\n{text}"


def _classify(options):
    ring = read_ring(_need(options, "subject")).ring
    P = _parse_ideal(ring, options.ideal)
    report = classify(ring, P)
    flags = report.flags()
    verdict = {
        "check": "classify",
        "ring": ring.name,
        "ideal": list(P.members),
        "flags": flags,
        "radical": None if report.radical is None else list(report.radical.members),
        "dSet": None if report.d_set is None else list(report.d_set.members),
        "generator": report.generator,
        "sdfPremisePairs": report.sdf_premise_pairs,
        "weaklySdfPremisePairs": report.weakly_sdf_premise_pairs,
        "witnesses": {k: v for k, v in report.witnesses.items()},
    }
    lines = [f"{name}={str(value).lower()}" for name, value in flags.items()]
    if report.radical is not None:
        lines.append(f"radical={report.radical}")
        lines.append(f"D={report.d_set}")
    if report.generator is not None:
        lines.append(f"generator={report.generator}")
    for name, witness in report.witnesses.items():
        lines.append(f"{name} fails at {witness}")
    return 0, [verdict], "\n".join(lines)


def _sdf(options):
    ring = read_ring(_need(options, "subject")).ring
    P = _parse_ideal(ring, options.ideal)
    if options.weak:
        name, label = "weaklySdf", "weakly sdf-absorbing"
        result = is_weakly_sdf_absorbing(ring, P, exhaustive=True)
    else:
        name, label = "sdf", "sdf-absorbing"
        result = is_sdf_absorbing(ring, P, exhaustive=True)
    verdict = {
        "check": name,
        "ring": ring.name,
        "ideal": list(P.members),
        "holds": result.holds,
        "premisePairs": len(result.premise_pairs),
        "witness": None if result.witness is None else list(result.witness),
        "violations": [list(v.as_tuple()) for v in result.violations],
    }
    text = (
        f"{label}: {str(result.holds).lower()}, "
        f"premise pairs: {len(result.premise_pairs)}"
    )
    if result.witness is not None:
        text += f"\nwitness: {result.witness}"
    return (0 if result.holds else 1), [verdict], text


def _theorem(options):
    theorem_id = _need(options, "subject")
    context = _context(options, _need(options, "corpus"))
    verdict = check_theorem(theorem_id, context).as_dict()
    code = 1 if verdict["counterexamples"] else 0
    return code, [verdict], _verdict_table([verdict])


def _run_all(options):
    context = _context(options, _need(options, "corpus"))
    verdicts = run_all(context)
    report = [v.as_dict() for v in verdicts]
    return exit_status(verdicts), report, _verdict_table(report)


def _search(options):
    theorem_id = _need(options, "subject")
    family = _need(options, "family")
    found = search_counterexample(theorem_id, family, **_harness_settings(options))
    verdict = {"check": "search", "id": theorem_id, "counterexample": found}
    if found is None:
        return 0, [verdict], f"{theorem_id}: no counterexample in {family}"
    text = f"{theorem_id}: counterexample ({found['clause']}) at {found['instance']}"
    for label, document in found["rings"].items():
        text += f"\n{label}:\n{document}"
    return 1, [verdict], text.rstrip()


def _oracle(options):
    corpus = generate_corpus(
        _need(options, "corpus"), enumeration_cap=options.enumeration_cap
    )
    rings = [i.ring for i in corpus if i.origin != "matrix"]
    disagreements = cross_check(rings)
    verdict = {
        "check": "oracle",
        "rings": len(rings),
        "disagreements": disagreements,
    }
    text = (
        f"oracle and engine: {len(disagreements)} disagreements"
        f" over {len(rings)} rings"
    )
    for d in disagreements:
        text += f"\n{d['ring']} {_members(d['ideal'])} {d['predicate']}"
    return (1 if disagreements else 0), [verdict], text


_HANDLERS = {
    "validate": _validate,
    "ideals": _ideals,
    "classify": _classify,
    "sdf": _sdf,
    "theorem": _theorem,
    "run-all": _run_all,
    "search": _search,
    "oracle": _oracle,
}


def _report(command, verdicts, diagnostics):
    return {
        "tool": TOOL,
        "version": _version(),
        "command": command,
        "verdicts": verdicts,
        "diagnostics": diagnostics,
    }


def _render(options_format, report, text):
    if options_format == "json":
        return json.dumps(report, indent=2, default=list)
    return text


def run_command(argv):
    """Run one command.

    Parameters
    ----------
    argv : [str]
        The arguments, without the program name.

    Returns
    -------
    (int, dict, str)
        The exit code, the report and its rendering in the requested format.
    """
    output_format = "json" if "--format=json" in argv else "text"
    if "--format" in argv[:-1]:
        output_format = argv[argv.index("--format") + 1]
    try:
        options = create_parser().parse_args(argv)
    except UsageError as e:
        report = _report(None, [], [{"message": str(e)}])
        return 2, report, _render(output_format, report, f"usage error: {e}")

    logging.getLogger("sdf_hyperideal_step").setLevel(options.log_level)
    try:
        code, verdicts, text = _HANDLERS[options.command](options)
    except RingFormatError as e:
        diagnostics = [
            {"line": line, "column": column, "message": message}
            for line, column, message in e.diagnostics
        ]
        lines = [
            f"{options.subject}:{d['line']}:{d['column']}: {d['message']}"
            for d in diagnostics
        ]
        report = _report(options.command, [], diagnostics)
        return 2, report, _render(options.format, report, "\n".join(lines))
    except (UsageError, HyperringError, OSError) as e:
        report = _report(options.command, [], [{"message": str(e)}])
        return 2, report, _render(options.format, report, f"error: {e}")
    report = _report(options.command, verdicts, [])
    return code, report, _render(options.format, report, text)


def main(argv=None):
    """The console script."""
    logging.basicConfig(stream=sys.stderr)
    code, report, text = run_command(sys.argv[1:] if argv is None else argv)
    stream = sys.stderr if code == 2 else sys.stdout
    print(text, file=stream)
    return code


if __name__ == "__main__":
    sys.exit(main())
