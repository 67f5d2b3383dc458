"""Command line entry point: every verifier as a subcommand printing JSON verdicts.

Exit codes are 0 when everything was verified or computed, 1 when a claim was refuted or left
inconclusive, and 2 for usage and input errors.
"""
import argparse
import json
import logging
import sys
import time
from typing import Any, Callable, Dict, List, Optional, Sequence

from . import (
    braid_core,
    cohomology,
    curves,
    geometric_sections,
    oracle,
    parsing,
    presets,
    section_algebra,
    twist_calculus,
)
from .curves import Puncture
from .keys import *
from .verdict import Verdict

LOGGER = logging.getLogger(__name__)

LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s %(message)s"


def _json_argument(text: str, getter: Callable[[Any], Any]) -> Any:
    """Inline JSON, or ``@path`` to read it from a file."""
    if text.startswith("@"):
        return parsing.read_json_file(text[1:], getter)
    return parsing.loads(text, getter)


def _word_problem(args) -> Verdict:
    started = time.perf_counter()
    if args.word is None:
        raise ValueError("word-problem needs --word")
    u = parsing.get_word(args.word, args.n or 0)
    trivial = braid_core.is_identity(u)
    witness: Dict[str, Any] = {N: u.strands, "word": u.letters_string(), "pure": braid_core.is_pure(u)}
    if witness["pure"]:
        witness["linking"] = braid_core.linking_matrix(u).entries
    return Verdict.fromcheck(f"'{u}' is trivial", trivial, witness, started)


def _lantern_boundary(value: Any, n: int):
    if isinstance(value, int):
        return Puncture(n, value)
    return parsing.get_curve(value)


def _verify_lantern(args) -> Verdict:
    if args.curves is not None:
        if args.n is None:
            raise ValueError("verify-lantern with --curves needs --n")
        items = parsing.loads(args.curves, lambda value: value)
        if not isinstance(items, list) or len(items) != 7:
            raise ValueError(f"--curves takes a JSON list of seven curves, got {args.curves!r}")
        inner = [parsing.get_curve(value) for value in items[:3]]
        boundaries = [_lantern_boundary(value, args.n) for value in items[3:]]
        return twist_calculus.verify_lantern(args.n, *inner, *boundaries)
    name = args.preset or LANTERN_SUBCASE3
    known = twist_calculus.lantern_presets()
    if name not in known:
        raise ValueError(f"Unknown lantern preset {name!r}; choose from {sorted(known)}")
    return known[name].verify(args.n or 0)


def _curves_from(args, count: int) -> List[curves.Curve]:
    if not args.curve or len(args.curve) != count:
        raise ValueError(f"Expected {count} --curve arguments, got {len(args.curve or [])}")
    return [_json_argument(text, parsing.get_curve) for text in args.curve]


def _intersect(args) -> Verdict:
    started = time.perf_counter()
    c1, c2 = _curves_from(args, 2)
    count = curves.geometric_intersection(c1, c2)
    witness: Dict[str, Any] = {"intersection": count, "curves": [parsing.curve_to_json(c1), parsing.curve_to_json(c2)]}
    holds = True
    if c1.spec is not None and c2.spec is not None and not c1.conjugator and not c2.conjugator:
        witness["pl_oracle"] = oracle.pl_intersection(c1.spec, c2.spec)
        holds = witness["pl_oracle"] == count
    return Verdict.fromcheck(f"i(c1, c2) = {count}", holds, witness, started)


def _twist_commute(args) -> Verdict:
    started = time.perf_counter()
    c1, c2 = _curves_from(args, 2)
    commute = twist_calculus.twists_commute(c1, c2)
    count = curves.geometric_intersection(c1, c2)
    witness = {"commute": commute, "intersection": count, "consistent": commute == (count == 0)}
    return Verdict.fromcheck("T_c1 T_c2 = T_c2 T_c1", commute, witness, started)


def _trace_classify(args) -> Verdict:
    started = time.perf_counter()
    result = twist_calculus.classify_product_type(args.i)
    witness = {"trace": result.trace, "type": result.kind, "matrix": twist_calculus.thurston_product(args.i).rows()}
    return Verdict.fromcheck(f"T_a T_b with i(a,b) = {args.i} is {result.kind.value}", True, witness, started)


def _section_verify(args) -> Verdict:
    started = time.perf_counter()
    if args.spec is None:
        raise ValueError("section-verify needs --spec")
    spec = _json_argument(args.spec, parsing.get_section_spec)
    report = section_algebra.verify_section(spec, args.samples, seed=args.seed)
    witness = {
        "spec": parsing.section_spec_to_json(spec),
        "seed": report.seed,
        "samples": len(report.homomorphism),
        "failures": report.failures(),
    }
    return Verdict.fromcheck(f"{spec.kind} section of PB_{spec.n} is a section", report.verified, witness, started)


def _obstruction_verdict(claim: str, result: cohomology.ObstructionVerdict, started: float) -> Verdict:
    witness = {
        "verdict": result.verdict,
        "index": result.index,
        "class": result.witness,
        "constraints": result.constraints,
        "details": result.details,
    }
    status = STATUS_VERIFIED if result.no_section else STATUS_INCONCLUSIVE
    return Verdict(claim, status, witness, time.perf_counter() - started)


def _cohomology_obstruction(args) -> Verdict:
    started = time.perf_counter()
    if args.s2k is not None:
        result = cohomology.s2k_section_constraints(args.s2k, not args.no_diagonal_relation)
        return _obstruction_verdict(f"no section of PConf_3(S^{2 * args.s2k}) -> PConf_2(S^{2 * args.s2k})", result, started)
    if args.spec is not None:
        g, n, f = _json_argument(args.spec, parsing.get_obstruction_input)
    elif args.preset is not None:
        if args.g is None or args.n is None:
            raise ValueError("cohomology-obstruction with --preset needs --g and --n")
        g, n, f = args.g, args.n, cohomology.preset_pullback(args.preset, args.g, args.n)
    else:
        raise ValueError("cohomology-obstruction needs --spec, --preset or --s2k")
    result = cohomology.obstruction_closed_surface(g, n, f)
    return _obstruction_verdict(f"no section of PConf_{n + 1}(S_{g}) -> PConf_{n}(S_{g})", result, started)


def _sphere_h2(args) -> Verdict:
    started = time.perf_counter()
    if args.n is None:
        raise ValueError("sphere-h2 needs --n")
    factors = cohomology.h2_pconf_sphere(args.n)
    witness: Dict[str, Any] = {"invariant_factors": factors}
    if args.n >= 3:
        witness["euler_certificates"] = {
            str(k): cohomology.euler_class_vanishes_sphere(args.n, k)[1].combination for k in range(1, args.n + 1)
        }
    return Verdict.fromcheck(f"invariant factors of H^2(PConf_{args.n}(S^2)) are {factors}", True, witness, started)


def _geo_add(args) -> Verdict:
    started = time.perf_counter()
    if args.config is None:
        raise ValueError("geo-add needs --config")
    cfg = _json_argument(args.config, parsing.get_config)
    if args.mobius is not None:
        if not isinstance(cfg, geometric_sections.SphereConfig):
            raise ValueError("The Möbius section is for sphere configurations")
        out = geometric_sections.add_mobius(cfg, complex(args.mobius))
    else:
        if args.direction is None:
            raise ValueError("geo-add needs --direction")
        direction = parsing.get_direction(args.direction)
        if args.infinity:
            if not isinstance(cfg, geometric_sections.PlanarConfig):
                raise ValueError("Adding a point at infinity needs a planar configuration")
            out = geometric_sections.add_at_infinity(cfg, direction)
        elif args.k is not None:
            out = geometric_sections.add_near_k(cfg, args.k, direction)
        else:
            raise ValueError("geo-add needs --k, --infinity or --mobius")
    if args.figure:
        geometric_sections.write_figure_data(cfg, out, f"{args.figure}.dat")
        with open(f"{args.figure}.svg", "w") as f:
            f.write(geometric_sections.render_svg(cfg, out))
    witness = {"before": parsing.config_to_json(cfg), "after": parsing.config_to_json(out)}
    return Verdict.fromcheck("forgetting the new point gives back the configuration", geometric_sections.forget_first(out) == cfg, witness, started)


COMMANDS: Dict[str, Callable[[argparse.Namespace], Verdict]] = {
    "word-problem": _word_problem,
    "verify-lantern": _verify_lantern,
    "intersect": _intersect,
    "twist-commute": _twist_commute,
    "trace-classify": _trace_classify,
    "section-verify": _section_verify,
    "cohomology-obstruction": _cohomology_obstruction,
    "sphere-h2": _sphere_h2,
    "geo-add": _geo_add,
}


def build_argparser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0, help="Seed for randomized checks")
    common.add_argument("--samples", type=int, default=100, help="Random samples for property checks")
    common.add_argument(
        "--json", metavar="PATH", help="Also write the JSON printed on standard output to PATH; with --quiet, only to PATH"
    )
    common.add_argument("--quiet", action="store_true", help="Print nothing; only the exit code reports")
    common.add_argument("--verbose", action="store_true", help="Log progress to standard error")

    parser = argparse.ArgumentParser(prog="braid-sections", description="Exact checks on pure braid groups and sections")
    subparsers = parser.add_subparsers(dest="command", required=True)

    p = subparsers.add_parser("word-problem", parents=[common], help="Decide whether a braid word is trivial")
    p.add_argument("--n", type=int, help="Number of strands, when the word has no n=<k>; header")
    p.add_argument("--word", help="Whitespace separated letters, e.g. '1 -2 1'")

    p = subparsers.add_parser("verify-lantern", parents=[common], help="Check a lantern relation")
    p.add_argument("--preset", help=f"One of {LANTERN_SUBCASE3}, {LANTERN_CASE1}, {LANTERN_CASE3}")
    p.add_argument("--n", type=int, help="Ambient number of strands")
    p.add_argument("--curves", help="JSON list x, y, z, b1..b4; an integer is a puncture")

    for name, description in [("intersect", "Geometric intersection number"), ("twist-commute", "Whether two twists commute")]:
        p = subparsers.add_parser(name, parents=[common], help=description)
        p.add_argument("--curve", action="append", help="Curve JSON, or @file; give twice")

    p = subparsers.add_parser("trace-classify", parents=[common], help="Classify T_a T_b by trace")
    p.add_argument("--i", type=int, required=True, help="Intersection number i(a, b)")

    p = subparsers.add_parser("section-verify", parents=[common], help="Check a candidate section")
    p.add_argument("--spec", help="Section spec JSON, or @file")

    p = subparsers.add_parser("cohomology-obstruction", parents=[common], help="Cohomological obstruction to a section")
    p.add_argument("--spec", help="Obstruction input JSON, or @file")
    p.add_argument("--preset", choices=[CASE_1A, CASE_1B, CASE_2])
    p.add_argument("--g", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--s2k", type=int, metavar="K", help="Check PConf_3(S^2K) -> PConf_2(S^2K) instead")
    p.add_argument("--no-diagonal-relation", action="store_true", help="Drop c_1 + c_2 = 0 (negative control)")

    p = subparsers.add_parser("sphere-h2", parents=[common], help="H^2(PConf_n(S^2); Z)")
    p.add_argument("--n", type=int)

    p = subparsers.add_parser("geo-add", parents=[common], help="Add a point to a configuration")
    p.add_argument("--config", help="Configuration JSON, or @file")
    p.add_argument("--k", type=int, help="Add the point next to point k")
    p.add_argument("--infinity", action="store_true", help="Add the point near infinity")
    p.add_argument("--mobius", help="Möbius section of a 3 point sphere configuration at this parameter")
    p.add_argument("--direction", help="Comma separated unit direction")
    p.add_argument("--figure", metavar="PREFIX", help="Write PREFIX.dat and PREFIX.svg")

    p = subparsers.add_parser("run-all", parents=[common], help="Run preset scenarios")
    p.add_argument("--paper-suite", action="store_true", required=True, help="Every preset identity and obstruction")
    p.add_argument("--quick", action="store_true", help="Fewer random cases than the full acceptance scale")
    return parser


def exit_code(verdicts: Sequence[Verdict]) -> int:
    if any(v.status == STATUS_ERROR for v in verdicts):
        return EXIT_USAGE
    if all(v.verified for v in verdicts):
        return EXIT_OK
    return EXIT_REFUTED


def _emit(document: Any, args):
    text = json.dumps(document)
    if args.json:
        with open(args.json, "w") as f:
            f.write(text + "\n")
    if not args.quiet:
        print(text)


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_argparser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE
    level = logging.ERROR if args.quiet else logging.INFO if args.verbose else logging.WARNING
    logging.basicConfig(format=LOG_FORMAT, level=level)
    if args.command == "run-all":
        verdicts = presets.run_suite(args.seed, presets.QUICK if args.quick else presets.FULL)
        _emit([v.to_json() for v in verdicts], args)
        return exit_code(verdicts)
    try:
        verdict = COMMANDS[args.command](args)
    except (ValueError, TypeError, OSError) as e:
        LOGGER.error(f"{args.command}: {e}")
        verdict = Verdict.fromerror(args.command, e)
    _emit(verdict.to_json(), args)
    return exit_code([verdict])


if __name__ == "__main__":
    sys.exit(main())
