"""Command-line interface.

Subcommands: check (equilibrium concepts), solve (exact or heuristic max
k-cut), dynamics (improvement dynamics with trace logging), verify (the
theorem-verification suites), search (separations, cycling dynamics, the
cut-decreasing instance).

Exit codes: 0 verdict-true/success, 1 verdict-false or nothing found
(witness printed), 2 usage or budget errors, 3 falsification events.
Every subcommand takes --json for the report schema on stdout; report
paths accept --figure to render a matplotlib figure alongside.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict

from . import io as kio
from .dynamics import Policy, run
from .equilibrium import (
    EquilibriumReport,
    classify,
    is_local_strong,
    is_nash,
    is_q_strong,
    is_strong,
)
from .game import (
    BudgetExceededError,
    GameSpec,
    cut_value,
    local_search_coloring,
    optimal_coloring_exact,
    search_space_estimate,
)
from .harness import SUITES, verify_all, verify_theorems
from .search import (
    SEPARATION_KINDS,
    SearchError,
    build_cut_decreasing_instance,
    search_improvement_cycle,
    search_separation,
)

EXIT_TRUE = 0
EXIT_FALSE = 1
EXIT_USAGE = 2
EXIT_FALSIFIED = 3


def _parse_concept(raw: str) -> tuple[str, int | None]:
    if raw == "ne":
        return "ne", None
    if raw == "se":
        return "se", None
    if raw.startswith("qse:"):
        return "qse", int(raw.split(":", 1)[1])
    if raw.startswith("lse"):
        return "lse", int(raw.split(":", 1)[1]) if ":" in raw else 1
    raise argparse.ArgumentTypeError(
        f"unknown concept {raw!r}; expected ne | qse:Q | lse:X | se"
    )


def _report_json(report: EquilibriumReport, spec: GameSpec, extra=None) -> dict:
    payload = {
        "concept": report.concept,
        "verdict": report.verdict,
        "coalitions_examined": report.coalitions_examined,
        "instance": kio.spec_to_dict(spec),
    }
    if report.witness is not None:
        payload["witness"] = kio.witness_to_dict(report.witness)
    if extra:
        payload.update(extra)
    return payload


def _cmd_check(args) -> int:
    graph, k = kio.load_graph_file(args.graph)
    spec = GameSpec(graph, args.k or k)
    sigma = kio.load_coloring_file(args.coloring, spec)
    concept, param = _parse_concept(args.concept)
    if concept == "ne":
        report = is_nash(spec, sigma)
    elif concept == "qse":
        report = is_q_strong(spec, sigma, param)
    elif concept == "lse":
        report = is_local_strong(spec, sigma, param)
    else:
        report = is_strong(spec, sigma)
    extra = {"classification": classify(spec, sigma)} if args.classify else None
    if args.json:
        kio.dump_report(_report_json(report, spec, extra), sys.stdout)
    else:
        print(f"{report.concept}: {'yes' if report.verdict else 'NO'} "
              f"({report.coalitions_examined} coalitions examined)")
        if report.witness is not None:
            move = report.witness.move
            print(f"  improving coalition {list(move.coalition)} -> "
                  f"{list(move.new_colors)}")
        if extra:
            print(f"  classification: {extra['classification']}")
    if args.figure:
        from .plots import save_coloring_figure, save_deviation_figure

        if report.witness is not None:
            save_deviation_figure(spec, sigma, report.witness.move, args.figure,
                                  title=f"{report.concept}: refuted")
        else:
            save_coloring_figure(spec, sigma, args.figure,
                                 title=f"{report.concept}: holds")
    return EXIT_TRUE if report.verdict else EXIT_FALSE


def _cmd_solve(args) -> int:
    graph, k = kio.load_graph_file(args.graph)
    spec = GameSpec(graph, args.k or k)
    if args.heuristic:
        sigma = local_search_coloring(spec, args.seed)
        value = cut_value(spec, sigma)
        mode = "heuristic"
    else:
        if not args.json:
            print(f"search-space estimate: {search_space_estimate(spec)}")
        sigma, value = optimal_coloring_exact(spec, budget=args.budget)
        mode = "exact"
    if args.json:
        kio.dump_report(
            {
                "mode": mode,
                "cut_value": kio.format_rational(value),
                "coloring": list(sigma),
                "instance": kio.spec_to_dict(spec),
            },
            sys.stdout,
        )
    else:
        print(f"{mode} cut {kio.format_rational(value)}: {list(sigma)}")
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(kio.write_coloring(sigma))
    if args.figure:
        from .plots import save_coloring_figure

        save_coloring_figure(spec, sigma, args.figure,
                             title=f"{mode} cut = {kio.format_rational(value)}")
    return EXIT_TRUE


def _parse_policy(args) -> Policy:
    raw = args.policy
    if raw == "unilateral":
        mode, cap = "unilateral-best-response", None
    elif raw.startswith("strong-minimal"):
        mode = "strong-minimal"
        cap = int(raw.split(":", 1)[1]) if ":" in raw else None
    elif raw.startswith("strong-any"):
        mode = "strong-any"
        cap = int(raw.split(":", 1)[1]) if ":" in raw else None
    elif raw == "clique":
        mode, cap = "clique-only", None
    else:
        raise argparse.ArgumentTypeError(
            f"unknown policy {raw!r}; expected unilateral | strong-minimal:Q | "
            f"strong-any:Q | clique"
        )
    selection = "seeded-random" if args.random_selection else "lexicographic"
    seed = args.seed if args.random_selection else None
    return Policy(mode=mode, max_coalition_size=cap, selection=selection, seed=seed)


def _cmd_dynamics(args) -> int:
    graph, k = kio.load_graph_file(args.graph)
    spec = GameSpec(graph, args.k or k)
    if args.start:
        sigma0 = kio.load_coloring_file(args.start, spec)
    else:
        import random

        rng = random.Random(args.seed)
        sigma0 = tuple(rng.randint(1, spec.k) for _ in range(spec.n))
    policy = _parse_policy(args)
    trace = run(spec, sigma0, policy, max_steps=args.max_steps)
    if args.json:
        payload = kio.trace_to_dict(trace)
        payload["instance"] = kio.spec_to_dict(spec)
        payload["policy"] = asdict(policy)
        kio.dump_report(payload, sys.stdout)
    else:
        for line in kio.trace_to_log_lines(trace):
            print(line)
    if args.trace_log:
        with open(args.trace_log, "w", encoding="utf-8") as fh:
            fh.write("\n".join(kio.trace_to_log_lines(trace)) + "\n")
    if args.figure:
        from .plots import save_trace_figure

        save_trace_figure(trace, args.figure)
    return EXIT_TRUE


def _cmd_verify(args) -> int:
    try:
        results = (
            verify_all(seed=args.seed, big=args.big)
            if args.suite == "all"
            else [verify_theorems(args.suite, seed=args.seed, big=args.big)]
        )
    except KeyError as exc:
        print(exc.args[0], file=sys.stderr)
        return EXIT_USAGE
    if args.json:
        kio.dump_report({"results": [r.to_dict() for r in results]}, sys.stdout)
    else:
        for r in results:
            status = "ok" if r.ok else f"{len(r.failures)} FAILURES"
            print(f"{r.suite}: {status} "
                  f"({r.instances_checked} instances, {r.seconds:.1f}s)")
            if r.notes:
                print(f"  {r.notes}")
            for failure in r.failures[:5]:
                print(f"  FALSIFICATION: {json.dumps(failure)}")
    return EXIT_TRUE if all(r.ok for r in results) else EXIT_FALSIFIED


def _cmd_search(args) -> int:
    if args.kind in SEPARATION_KINDS:
        witness = search_separation(
            args.kind, n_max=args.n_max, k=args.k, seed=args.seed,
            budget=args.budget,
        )
        if witness is None:
            print("no witness found within budget")
            return EXIT_FALSE
        payload = {
            "kind": witness.kind,
            "instance": kio.spec_to_dict(witness.spec),
            "coloring": list(witness.coloring),
            "inner": _report_json(witness.inner_report, witness.spec),
            "outer": _report_json(witness.outer_report, witness.spec),
            "revalidates": witness.revalidate(),
        }
        if args.json:
            kio.dump_report(payload, sys.stdout)
        else:
            move = witness.outer_report.witness.move
            print(f"{witness.kind}: n={witness.spec.n} k={witness.spec.k} "
                  f"coloring={list(witness.coloring)}")
            print(f"  breaking coalition {list(move.coalition)} -> "
                  f"{list(move.new_colors)}")
        if args.out:
            with open(args.out, "w", encoding="utf-8") as fh:
                json.dump(payload, fh, indent=2)
                fh.write("\n")
        if args.figure:
            from .plots import save_deviation_figure

            save_deviation_figure(
                witness.spec, witness.coloring,
                witness.outer_report.witness.move, args.figure,
                title=witness.kind,
            )
        return EXIT_TRUE
    if args.kind == "cycle":
        finding = search_improvement_cycle(seed=args.seed, budget=args.budget)
        if finding is None:
            print("no cycling instance found within budget")
            return EXIT_FALSE
        payload = {
            "kind": "cycle",
            "instance": kio.spec_to_dict(finding.spec),
            "start": list(finding.start),
            "policy": asdict(finding.policy),
            "trace": kio.trace_to_dict(finding.trace),
            "revalidates": finding.revalidate(),
        }
        if args.json:
            kio.dump_report(payload, sys.stdout)
        else:
            print(f"cycle: n={finding.spec.n}, {finding.trace.step_count} moves, "
                  f"coalition sizes {[m.size for m in finding.trace.moves]}")
            for line in kio.trace_to_log_lines(finding.trace):
                print(" ", line)
        if args.out:
            with open(args.out, "w", encoding="utf-8") as fh:
                json.dump(payload, fh, indent=2)
                fh.write("\n")
        if args.figure:
            from .plots import save_trace_figure

            save_trace_figure(finding.trace, args.figure,
                              title="minimal-coalition improvement cycle")
        return EXIT_TRUE
    if args.kind == "cut-drop":
        instance = build_cut_decreasing_instance()
        payload = {
            "kind": "cut-drop",
            "instance": kio.spec_to_dict(instance.spec),
            "coloring": list(instance.coloring),
            "move": kio.move_to_dict(instance.move),
            "cut_delta": kio.format_rational(instance.cut_delta),
            "revalidates": instance.revalidate(),
        }
        if args.json:
            kio.dump_report(payload, sys.stdout)
        else:
            print(f"cut-drop: n={instance.spec.n} k={instance.spec.k} "
                  f"delta={kio.format_rational(instance.cut_delta)}")
            print(f"  coalition {list(instance.move.coalition)} -> "
                  f"{list(instance.move.new_colors)}")
        if args.out:
            with open(args.out, "w", encoding="utf-8") as fh:
                json.dump(payload, fh, indent=2)
                fh.write("\n")
        if args.figure:
            from .plots import save_deviation_figure

            save_deviation_figure(instance.spec, instance.coloring,
                                  instance.move, args.figure,
                                  title="cut-decreasing minimal improvement")
        return EXIT_TRUE
    print(f"unknown search kind {args.kind!r}", file=sys.stderr)
    return EXIT_USAGE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kcut",
        description="Max k-cut games: equilibrium checking, solving, dynamics, "
        "verification and counterexample search.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="check an equilibrium concept")
    p.add_argument("graph")
    p.add_argument("coloring")
    p.add_argument("--concept", required=True,
                   help="ne | qse:Q | lse:X | se")
    p.add_argument("-k", type=int, default=None, help="override the header k")
    p.add_argument("--classify", action="store_true",
                   help="also report the containment-chain region")
    p.add_argument("--json", action="store_true")
    p.add_argument("--figure", help="render the profile (and witness) to a file")
    p.set_defaults(fn=_cmd_check)

    p = sub.add_parser("solve", help="maximize the cut")
    p.add_argument("graph")
    p.add_argument("-k", type=int, default=None)
    group = p.add_mutually_exclusive_group()
    group.add_argument("--exact", action="store_true", default=True)
    group.add_argument("--heuristic", action="store_true")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--budget", type=int, default=None)
    p.add_argument("--out", help="write the coloring file here")
    p.add_argument("--json", action="store_true")
    p.add_argument("--figure")
    p.set_defaults(fn=_cmd_solve)

    p = sub.add_parser("dynamics", help="run improvement dynamics")
    p.add_argument("graph")
    p.add_argument("-k", type=int, default=None)
    p.add_argument("--policy", default="unilateral",
                   help="unilateral | strong-minimal:Q | strong-any:Q | clique")
    p.add_argument("--max-steps", type=int, default=1000)
    p.add_argument("--start", help="coloring file for the initial profile")
    p.add_argument("--seed", type=int, default=0,
                   help="seed for the random start and/or random selection")
    p.add_argument("--random-selection", action="store_true")
    p.add_argument("--trace-log", help="write the line-oriented trace here")
    p.add_argument("--json", action="store_true")
    p.add_argument("--figure")
    p.set_defaults(fn=_cmd_dynamics)

    p = sub.add_parser("verify", help="run a theorem-verification suite")
    p.add_argument("--suite", required=True,
                   help="one of: all, " + ", ".join(sorted(SUITES)))
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--big", action="store_true",
                   help="include the n=7 spot samples")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser("search", help="find separating/cycling instances")
    p.add_argument("--kind", required=True,
                   help="ne-not-2se | 2se-not-lse | lse-not-kse | 2se-not-se | "
                   "cycle | cut-drop")
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--n-max", type=int, default=10)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--budget", type=int, default=200_000)
    p.add_argument("--out", help="write the witness JSON here")
    p.add_argument("--json", action="store_true")
    p.add_argument("--figure")
    p.set_defaults(fn=_cmd_search)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except argparse.ArgumentTypeError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.fn(args)
    except (kio.ParseError, SearchError, argparse.ArgumentTypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceededError as exc:
        print(f"budget error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
