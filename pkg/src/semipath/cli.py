"""Command-line interface.

Exit codes: 0 on success, 2 on invalid input (non-coprime pair, non-lean
set, bad flags), 3 on an internal invariant violation.
"""

from __future__ import annotations

import argparse
import json
import sys

from .counting import count_fixed_points, count_lean_sets, count_lean_sets_total, orbit_count_table
from .leansets import LeanSet, enumerate_lean_sets
from .render import RenderSpec, render
from .semigroup import SemigroupPair, gaps, is_member
from .semimodules import Semimodule
from .syzygies import fundamental_couple, iterated_syzygy, syzygy_period
from .verify import brute_period_tally, run_checks

__all__ = ["main"]


def _pair(args) -> SemigroupPair:
    return SemigroupPair(args.alpha, args.beta)


def _parse_set(text: str) -> tuple[int, ...]:
    try:
        values = sorted({int(token) for token in text.split(",") if token.strip()})
    except ValueError:
        raise ValueError(f"could not parse {text!r} as a comma-separated integer set") from None
    if not values:
        raise ValueError("the generator set is empty")
    return tuple(values)


def _module(args) -> tuple[SemigroupPair, Semimodule]:
    pair = _pair(args)
    return pair, Semimodule(pair, _parse_set(args.set))


def _lean(args) -> tuple[SemigroupPair, LeanSet]:
    pair = _pair(args)
    return pair, LeanSet.from_members(pair, _parse_set(args.set))


def _gens_to_r(pair: SemigroupPair, gens: int) -> int:
    if not 1 <= gens <= pair.alpha:
        raise ValueError(f"generator count must lie in [1, {pair.alpha}], got {gens}")
    return gens - 1


def cmd_gaps(args) -> int:
    pair = _pair(args)
    print(" ".join(str(g.value) for g in gaps(pair)))
    return 0


def cmd_member(args) -> int:
    pair = _pair(args)
    print("true" if is_member(pair, args.n) else "false")
    return 0


def cmd_enumerate(args) -> int:
    pair = _pair(args)
    gap_count = None if args.gens is None else _gens_to_r(pair, args.gens)
    for lean in enumerate_lean_sets(pair, gap_count):
        if args.json:
            print(json.dumps(Semimodule(pair, lean.members).to_json(), separators=(",", ":")))
        else:
            print(",".join(str(m) for m in lean.members))
    return 0


def cmd_count(args) -> int:
    pair = _pair(args)
    if args.gens is None:
        expected = count_lean_sets_total(pair)
        gap_count = None
    else:
        gap_count = _gens_to_r(pair, args.gens)
        expected = count_lean_sets(pair, gap_count)
    if args.brute:
        seen = sum(1 for _ in enumerate_lean_sets(pair, gap_count))
        if seen != expected:
            raise AssertionError(f"enumerated {seen} lean sets, formula says {expected}")
    print(expected)
    return 0


def cmd_couple(args) -> int:
    pair, lean = _lean(args)
    couple = fundamental_couple(pair, lean)
    if args.json:
        print(json.dumps(couple.to_json(), separators=(",", ":")))
    else:
        print("I: " + ",".join(str(v) for v in couple.gens))
        print("J: " + ",".join(str(v) for v in couple.syzygy_gens))
    return 0


def cmd_syzygy(args) -> int:
    pair, module = _module(args)
    if not module.is_normalized:
        raise ValueError(f"the set must contain 0, got {module.gens}")
    result = iterated_syzygy(pair, module, args.iterate)
    if args.normalize:
        result = result.normalize()
    if args.json:
        print(json.dumps(result.to_json(), separators=(",", ":")))
    else:
        print(",".join(str(g) for g in result.gens))
    return 0


def cmd_orbit(args) -> int:
    pair, module = _module(args)
    report = syzygy_period(pair, module)
    if args.json:
        print(json.dumps(report.to_json(), separators=(",", ":")))
    else:
        print(f"period: {report.period}")
        for k, step in enumerate(report.cycle):
            print(f"cycle[{k}]: " + ",".join(str(g) for g in step.gens))
    return 0


def cmd_orbits(args) -> int:
    pair = _pair(args)
    table = orbit_count_table(pair, args.gens)
    if args.brute:
        tally = brute_period_tally(pair, args.gens)
        for row in table.rows:
            if tally.get(row.ell, 0) != row.exact:
                raise AssertionError(
                    f"iteration found {tally.get(row.ell, 0)} modules of period {row.ell}, "
                    f"formula says {row.exact}"
                )
    if args.json:
        print(json.dumps(table.to_json(), separators=(",", ":")))
    else:
        print("ell A exact orbits")
        for row in table.rows:
            print(f"{row.ell} {row.periodic} {row.exact} {row.orbits}")
    return 0


def cmd_fixed_points(args) -> int:
    pair = _pair(args)
    if args.gens is not None:
        print(count_fixed_points(pair, args.gens))
    else:
        for n in range(1, pair.alpha + 1):
            print(f"{n} {count_fixed_points(pair, n)}")
    return 0


def cmd_render(args) -> int:
    pair, lean = _lean(args)
    spec = RenderSpec(
        format=args.format,
        cell=args.cell,
        diagonal=not args.no_diagonal,
        markers=not args.no_markers,
        labels=args.labels,
    )
    print(render(pair, lean, spec))
    return 0


def cmd_verify(args) -> int:
    pair = _pair(args)
    results = run_checks(pair, deep=args.deep)
    failed = False
    for result in results:
        if result.skipped:
            status = "skip"
        elif result.ok:
            status = "ok"
        else:
            status = "FAIL"
            failed = True
        print(f"{status:4s} {result.name}: {result.detail}")
    return 3 if failed else 0


def _add_pair(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("alpha", type=int, help="smaller generator")
    parser.add_argument("beta", type=int, help="larger generator, coprime to alpha")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="semipath",
        description="Semimodules over a two-generator numerical semigroup: "
        "gaps, lean sets, lattice paths, syzygies and orbit counting.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gaps", help="list the gaps of <alpha,beta>")
    _add_pair(p)
    p.set_defaults(handler=cmd_gaps)

    p = sub.add_parser("member", help="test membership of n in <alpha,beta>")
    _add_pair(p)
    p.add_argument("n", type=int)
    p.set_defaults(handler=cmd_member)

    p = sub.add_parser("enumerate", help="stream all lean sets, one per line")
    _add_pair(p)
    p.add_argument("--gens", type=int, default=None, help="only sets with this many generators")
    p.add_argument("--json", action="store_true", help="emit semimodule JSON objects")
    p.set_defaults(handler=cmd_enumerate)

    p = sub.add_parser("count", help="count lean sets by closed form")
    _add_pair(p)
    p.add_argument("--gens", type=int, default=None)
    p.add_argument("--brute", action="store_true", help="recount by enumeration and compare")
    p.set_defaults(handler=cmd_count)

    p = sub.add_parser("couple", help="fundamental couple [I, J] of a lean set")
    _add_pair(p)
    p.add_argument("--set", required=True, help="comma-separated lean set containing 0")
    p.add_argument("--json", action="store_true")
    p.set_defaults(handler=cmd_couple)

    p = sub.add_parser("syzygy", help="generators of the (iterated) syzygy")
    _add_pair(p)
    p.add_argument("--set", required=True, help="comma-separated lean set containing 0")
    p.add_argument("--iterate", type=int, default=1, metavar="K", help="apply the syzygy K times")
    p.add_argument("--normalize", action="store_true", help="shift the result to contain 0")
    p.add_argument("--json", action="store_true")
    p.set_defaults(handler=cmd_syzygy)

    p = sub.add_parser("orbit", help="orbit of a semimodule under syzygy-and-normalize")
    _add_pair(p)
    p.add_argument("--set", required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(handler=cmd_orbit)

    p = sub.add_parser("orbits", help="orbit count table for n-generator semimodules")
    _add_pair(p)
    p.add_argument("--gens", type=int, required=True)
    p.add_argument("--brute", action="store_true", help="confirm by iterating every module")
    p.add_argument("--json", action="store_true")
    p.set_defaults(handler=cmd_orbits)

    p = sub.add_parser("fixed-points", help="count semimodules isomorphic to their syzygy")
    _add_pair(p)
    p.add_argument("--gens", type=int, default=None)
    p.set_defaults(handler=cmd_fixed_points)

    p = sub.add_parser("render", help="draw the path of a lean set")
    _add_pair(p)
    p.add_argument("--set", required=True)
    p.add_argument("--format", choices=("ascii", "svg"), default="ascii")
    p.add_argument("--cell", type=int, default=20, help="svg cell size in pixels")
    p.add_argument("--labels", action="store_true", help="svg: label lattice points with gap values")
    p.add_argument("--no-diagonal", action="store_true")
    p.add_argument("--no-markers", action="store_true")
    p.set_defaults(handler=cmd_render)

    p = sub.add_parser("verify", help="run the brute-force cross-check suite")
    _add_pair(p)
    p.add_argument("--deep", action="store_true", help="exhaustive sweeps, including orbit tables")
    p.set_defaults(handler=cmd_verify)

    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except AssertionError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
