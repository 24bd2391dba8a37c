"""Command-line front end.

Subcommands: ``commit`` and ``verify`` wrap the scheme directly;
``experiment`` runs a named game against a named adversary in exact or
estimate mode; ``protocol`` runs one commit/open session over TCP as
either role. Every randomized command takes an explicit ``--seed``; there
is no ambient entropy, so reruns reproduce byte for byte.

Exit codes: 0 success or accept; 1 reject or property violated; 2 bad
input; 3 asked for an enumeration the backend cannot do; 4 protocol error.
"""

from __future__ import annotations

import argparse
import sys

from . import adversaries, probability, protocol
from .experiments import (
    Binding,
    Correctness,
    DiscreteLog,
    Hiding,
    InterimHiding,
)
from .groups import (
    BackendTooLargeError,
    Group,
    GroupError,
    builtin_group,
    load_group_file,
)
from .pedersen import Pedersen
from .tape import SeededSource, exhaustive_tapes, seeded_tapes

EXIT_OK = 0
EXIT_FALSE = 1
EXIT_INPUT = 2
EXIT_CAPABILITY = 3
EXIT_PROTOCOL = 4

_EXPERIMENTS = ("corr", "hexp", "hinterm", "bexp", "dlog", "coupling")


class _InputError(Exception):
    pass


def _load_group(name_or_path: str) -> Group:
    if name_or_path in ("toy", "large"):
        return builtin_group(name_or_path)
    try:
        return load_group_file(name_or_path)
    except OSError as exc:
        raise _InputError(f"cannot read group file {name_or_path!r}: {exc}") from exc


def _parse_int(text: str, decimal: bool, what: str) -> int:
    try:
        return int(text, 10 if decimal else 16)
    except ValueError:
        base = "decimal" if decimal else "hex"
        raise _InputError(f"{what} must be a {base} integer, got {text!r}") from None


def _render(value: int, decimal: bool) -> str:
    return str(value) if decimal else hex(value)


def _catalog() -> str:
    zoo = adversaries.adversary_zoo()
    lines = ["experiments: " + " ".join(_EXPERIMENTS)]
    lines.append("unhiders (hexp, hinterm): " + " ".join(sorted(zoo["unhiders"])))
    lines.append("binders (bexp, coupling): " + " ".join(sorted(zoo["binders"])))
    lines.append("dlog adversaries (dlog): " + " ".join(sorted(zoo["dlog"])))
    return "\n".join(lines)


def _pick_adversary(experiment: str, name: str | None):
    zoo = adversaries.adversary_zoo()
    kind = {
        "hexp": "unhiders",
        "hinterm": "unhiders",
        "bexp": "binders",
        "coupling": "binders",
        "dlog": "dlog",
    }[experiment]
    catalog = zoo[kind]
    if name is None:
        raise _InputError(f"experiment {experiment} needs --adversary; options:\n{_catalog()}")
    if name not in catalog:
        raise _InputError(f"unknown adversary {name!r}; options:\n{_catalog()}")
    return catalog[name]


def _cmd_commit(args) -> int:
    group = _load_group(args.group)
    h = group.element(_parse_int(args.key, args.decimal, "--key"))
    m = group.scalar(_parse_int(args.message, args.decimal, "--message"))
    c, d = Pedersen(group).commit(h, m, SeededSource(args.seed))
    print(f"c = {_render(c, args.decimal)}")
    print(f"d = {_render(d, args.decimal)}")
    return EXIT_OK


def _cmd_verify(args) -> int:
    group = _load_group(args.group)
    h = group.element(_parse_int(args.key, args.decimal, "--key"))
    m = group.scalar(_parse_int(args.message, args.decimal, "--message"))
    c = group.element(_parse_int(args.commitment, args.decimal, "--commitment"))
    d = group.scalar(_parse_int(args.opening, args.decimal, "--opening"))
    if Pedersen(group).verify(h, c, m, d):
        print("accept")
        return EXIT_OK
    print("reject")
    return EXIT_FALSE


def _run_coupling(args, group: Group) -> int:
    binder = _pick_adversary("coupling", args.adversary)
    domains = probability.coupling_domains(group, binder)
    if args.mode == "exact":
        if group.backend != "toy":
            raise BackendTooLargeError(
                "exact coupling needs the toy backend; use --mode estimate with --seed/--trials"
            )
        tapes = exhaustive_tapes(domains)
    else:
        if args.seed is None:
            raise _InputError("--mode estimate needs --seed")
        tapes = seeded_tapes(domains, args.trials, args.seed)
    verdict = probability.check_coupling(group, binder, tapes)
    if verdict.coupled:
        print(f"coupled over {verdict.tapes_checked} tapes")
        return EXIT_OK
    print(f"decoupled at tape {list(verdict.witness)} (tape {verdict.tapes_checked})")
    return EXIT_FALSE


def _cmd_experiment(args) -> int:
    group = _load_group(args.group)
    if args.name == "coupling":
        return _run_coupling(args, group)
    if args.name == "corr":
        if args.message is None:
            raise _InputError("experiment corr needs --message")
        experiment = Correctness(group, _parse_int(args.message, args.decimal, "--message"))
        adversary = None
        adversary_name = "-"
    else:
        experiment = {
            "hexp": Hiding,
            "hinterm": InterimHiding,
            "bexp": Binding,
            "dlog": DiscreteLog,
        }[args.name](group)
        adversary = _pick_adversary(args.name, args.adversary)
        adversary_name = args.adversary
    if args.mode == "exact":
        result = probability.enumerate_exact(experiment, adversary)
        row = probability.row_from_exact(args.name, adversary_name, result)
    else:
        if args.seed is None:
            raise _InputError("--mode estimate needs --seed")
        result = probability.estimate(experiment, adversary, args.trials, args.seed)
        row = probability.row_from_estimate(args.name, adversary_name, result)
    if args.format == "table":
        print(probability.format_table([row]))
    else:
        print(probability.format_lines([row]))
    return EXIT_OK


def _parse_endpoint(text: str) -> tuple[str, int]:
    host, sep, port = text.rpartition(":")
    if not sep or not host:
        raise _InputError(f"endpoint must be host:port, got {text!r}")
    try:
        return host, int(port)
    except ValueError:
        raise _InputError(f"endpoint port must be an integer, got {port!r}") from None


def _print_session(outcome: protocol.SessionOutcome, verbose: bool) -> None:
    if verbose:
        for frame in outcome.frames_sent:
            print(f"sent     {frame.hex()}")
        for frame in outcome.frames_received:
            print(f"received {frame.hex()}")
    print("accept" if outcome.accept else "reject")


def _cmd_protocol(args) -> int:
    group = _load_group(args.group)
    source = SeededSource(args.seed)
    if args.role == "receive":
        endpoint = _parse_endpoint(args.listen)
        m = open_m = None
    else:
        if args.message is None:
            raise _InputError("protocol commit needs --message")
        endpoint = _parse_endpoint(args.connect)
        m = group.scalar(_parse_int(args.message, args.decimal, "--message"))
        open_m = (
            None if args.open_message is None
            else group.scalar(_parse_int(args.open_message, args.decimal, "--open-message"))
        )
    # Decode failures on received frames are session errors (exit 4), unlike
    # the same exceptions raised above while parsing our own flags (exit 2).
    try:
        if args.role == "receive":
            host, port = endpoint
            print(f"listening on {host}:{port}", file=sys.stderr)
            outcome = protocol.serve_receiver_once(group, host, port, source)
        else:
            host, port = endpoint
            outcome = protocol.connect_committer(group, host, port, m, source, open_m=open_m)
    except GroupError as exc:
        print(f"protocol error: {exc}", file=sys.stderr)
        return EXIT_PROTOCOL
    _print_session(outcome, args.verbose)
    return EXIT_OK if outcome.accept else EXIT_FALSE


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pedersen-games",
        description="Pedersen commitments, their security games, and a commit/open protocol.",
    )
    parser.add_argument(
        "--group", default="toy",
        help="builtin group name (toy, large) or path to a parameter file",
    )
    parser.add_argument(
        "--decimal", action="store_true",
        help="read and print scalars/elements in decimal instead of hex",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_commit = sub.add_parser("commit", help="commit to a message under a key")
    p_commit.add_argument("--key", required=True, help="public key h")
    p_commit.add_argument("-m", "--message", required=True)
    p_commit.add_argument("--seed", type=int, required=True)
    p_commit.set_defaults(func=_cmd_commit)

    p_verify = sub.add_parser("verify", help="check an opened commitment")
    p_verify.add_argument("--key", required=True, help="public key h")
    p_verify.add_argument("-m", "--message", required=True)
    p_verify.add_argument("-c", "--commitment", required=True)
    p_verify.add_argument("-d", "--opening", required=True)
    p_verify.set_defaults(func=_cmd_verify)

    p_exp = sub.add_parser("experiment", help="run a security game")
    p_exp.add_argument("name", choices=_EXPERIMENTS)
    p_exp.add_argument("--adversary", "--binder", dest="adversary")
    p_exp.add_argument("-m", "--message", help="message for the corr experiment")
    p_exp.add_argument("--mode", choices=("exact", "estimate"), default="exact")
    p_exp.add_argument("--seed", type=int)
    p_exp.add_argument("--trials", type=int, default=10000)
    p_exp.add_argument("--format", choices=("table", "lines"), default="table")
    p_exp.set_defaults(func=_cmd_experiment)

    p_proto = sub.add_parser("protocol", help="run one commit/open session over TCP")
    p_proto.add_argument("role", choices=("receive", "commit"))
    p_proto.add_argument("--listen", help="host:port to serve one session on")
    p_proto.add_argument("--connect", help="host:port of the receiver")
    p_proto.add_argument("-m", "--message")
    p_proto.add_argument(
        "--open-message", dest="open_message",
        help="reveal this message instead of the committed one",
    )
    p_proto.add_argument("--seed", type=int, required=True)
    p_proto.add_argument("--verbose", action="store_true", help="print raw frames")
    p_proto.set_defaults(func=_cmd_protocol)
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if args.command == "protocol":
        endpoint = args.listen if args.role == "receive" else args.connect
        if endpoint is None:
            flag = "--listen" if args.role == "receive" else "--connect"
            print(f"error: protocol {args.role} needs {flag}", file=sys.stderr)
            return EXIT_INPUT
    try:
        return args.func(args)
    except BackendTooLargeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAPABILITY
    except (_InputError, GroupError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except protocol.ProtocolError as exc:
        print(f"protocol error: {exc}", file=sys.stderr)
        return EXIT_PROTOCOL
    except OSError as exc:
        print(f"connection error: {exc}", file=sys.stderr)
        return EXIT_PROTOCOL


def run() -> None:
    raise SystemExit(main())
