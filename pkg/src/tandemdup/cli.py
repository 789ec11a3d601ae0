"""Command line front end.

Exit codes: 0 on success, 1 on domain errors (budget exhausted,
unsupported duplication bound, degenerate inputs), 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

from . import __version__
from .automaton import (
    build_automaton,
    export,
    language_upto,
    verify_duplication_closure,
)
from .capacity import (
    avoidance_capacity,
    empirical_capacity,
    exact_capacity,
    spectral_capacity,
)
from .core import Alphabet, DuplicationSystem, thue_square_free
from .enumeration import (
    DEFAULT_BUDGET,
    count_words,
    dedup_distance,
    dedup_roots,
    derives_from,
    enumerate_words,
)
from .errors import (
    BudgetExceededError,
    EmptyLanguageError,
    InsufficientDataError,
    NonConvergenceError,
    NondeterministicAutomatonError,
    UnsupportedDuplicationLength,
)
from .expressiveness import is_fully_expressive, witness

_DOMAIN_ERRORS = (
    BudgetExceededError,
    EmptyLanguageError,
    InsufficientDataError,
    NonConvergenceError,
    NondeterministicAutomatonError,
    UnsupportedDuplicationLength,
)


class UsageError(Exception):
    pass


def _system(args) -> DuplicationSystem:
    try:
        return DuplicationSystem.parse(args.alphabet, args.seed, args.max_dup)
    except ValueError as exc:
        raise UsageError(str(exc))


def _alphabet(text: str) -> Alphabet:
    try:
        return Alphabet.parse(text)
    except ValueError as exc:
        raise UsageError(str(exc))


def _word(alphabet: Alphabet, text: str):
    try:
        return alphabet.word(text)
    except ValueError as exc:
        raise UsageError(str(exc))


def _add_system_flags(sub, seed_required=True):
    sub.add_argument("--alphabet", required=True, help="symbols in rank order")
    if seed_required:
        sub.add_argument("--seed", required=True, help="start word")
    sub.add_argument(
        "--max-dup", type=int, required=True, help="largest duplicated block"
    )


def _add_output_flags(sub, formats=("json", "text")):
    sub.add_argument("--format", choices=formats, default="json")
    sub.add_argument("--out", help="write the result to this file")


def cmd_generate(args):
    system = _system(args)
    piece = enumerate_words(system, args.max_len, args.budget)
    doc = piece.to_json_dict(include_words=True)
    lines = []
    for n in sorted(piece.by_length):
        for w in sorted(system.alphabet.text(x) for x in piece.by_length[n]):
            lines.append(f"{n}\t{w}")
    return doc, lines


def cmd_count(args):
    system = _system(args)
    table = count_words(system, args.max_len, args.budget)
    doc = table.to_json_dict()
    lines = [f"{n}\t{table.counts[n]}" for n in sorted(table.counts)]
    return doc, lines


def cmd_member(args):
    system = _system(args)
    word = _word(system.alphabet, args.word)
    member = derives_from(system, word, args.budget)
    doc = {
        "system": system.to_json_dict(),
        "word": args.word,
        "member": member,
    }
    return doc, [f"member\t{str(member).lower()}"]


def cmd_automaton(args):
    system = _system(args)
    machine = build_automaton(system, minimize=args.minimize)
    if args.format == "dot":
        text = export(machine, "dot")
        return None, text.splitlines()
    return machine.to_json_dict(), None


def cmd_capacity(args):
    system = _system(args)
    if args.empirical:
        table = count_words(system, args.max_len, args.budget)
        estimate = empirical_capacity(table, system.base, args.window)
        doc = estimate.to_json_dict()
    else:
        report = exact_capacity(system)
        doc = report.to_json_dict()
        if args.numeric:
            doc["numericValue"] = spectral_capacity(system, args.tolerance)
    if args.bits:
        doc["valueBits"] = doc["value"] * math.log2(system.base)
    lines = [f"{key}\t{doc[key]}" for key in doc]
    return doc, lines


def cmd_express(args):
    system = _system(args)
    verdict = is_fully_expressive(system)
    doc = verdict.to_json_dict(system.alphabet)
    lines = [f"{key}\t{doc[key]}" for key in doc]
    return doc, lines


def cmd_witness(args):
    system = _system(args)
    found = witness(system)
    if found is None:
        doc = {"witness": None, "reason": None}
    else:
        doc = {
            "witness": system.alphabet.text(found.word),
            "reason": found.reason,
        }
    lines = [f"{key}\t{doc[key]}" for key in doc]
    return doc, lines


def cmd_dedup(args):
    alphabet = _alphabet(args.alphabet)
    word = _word(alphabet, args.word)
    result = dedup_roots(word, args.max_dup, args.budget)
    doc = {
        "word": args.word,
        "kmax": args.max_dup,
        "roots": sorted(alphabet.text(r) for r in result.roots),
    }
    lines = [f"root\t{r}" for r in doc["roots"]]
    if args.target is not None:
        target = _word(alphabet, args.target)
        distance = dedup_distance(word, target, args.max_dup, args.budget)
        doc["target"] = args.target
        doc["distance"] = distance
        lines.append(f"distance\t{distance}")
    return doc, lines


def cmd_verify(args):
    system = _system(args)
    machine = build_automaton(system)
    certificate = verify_duplication_closure(machine, system.kmax)
    doc = {
        "system": system.to_json_dict(),
        "states": len(machine.states),
        "seedAccepted": machine.accepts(system.seed),
        "closure": certificate.to_json_dict(),
    }
    if args.check_upto is not None:
        piece = enumerate_words(system, args.check_upto, args.budget)
        accepted = language_upto(machine, args.check_upto)
        agrees = all(
            piece.by_length.get(n, frozenset()) == frozenset(accepted.get(n, ()))
            for n in range(len(system.seed), args.check_upto + 1)
        )
        doc["oracleDepth"] = args.check_upto
        doc["oracleAgrees"] = agrees
    lines = [
        f"seed accepted\t{str(doc['seedAccepted']).lower()}",
        f"closure passed\t{str(certificate.passed).lower()}",
        f"superstate fallbacks\t{len(certificate.fallbacks())}",
    ]
    if "oracleAgrees" in doc:
        lines.append(f"oracle agrees\t{str(doc['oracleAgrees']).lower()}")
    return doc, lines


def cmd_squarefree(args):
    alphabet = _alphabet(args.alphabet)
    word = thue_square_free(args.length, alphabet)
    doc = {"length": args.length, "word": alphabet.text(word)}
    return doc, [doc["word"]]


def cmd_avoid(args):
    alphabet = _alphabet(args.alphabet)
    raw = args.forbid or []
    forbidden = [_word(alphabet, w) for w in raw]
    value = avoidance_capacity(alphabet, forbidden, args.tolerance)
    doc = {
        "alphabet": alphabet.to_text(),
        "forbidden": list(raw),
        "value": value,
    }
    return doc, [f"value\t{value}"]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tandemdup",
        description="bounded tandem duplication string systems",
    )
    parser.add_argument("--version", action="version", version=__version__)
    commands = parser.add_subparsers(dest="command", required=True)

    sub = commands.add_parser("generate", help="enumerate all words up to a length")
    _add_system_flags(sub)
    sub.add_argument("--max-len", type=int, required=True)
    sub.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    _add_output_flags(sub)
    sub.set_defaults(func=cmd_generate)

    sub = commands.add_parser("count", help="per-length word counts")
    _add_system_flags(sub)
    sub.add_argument("--max-len", type=int, required=True)
    sub.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    _add_output_flags(sub)
    sub.set_defaults(func=cmd_count)

    sub = commands.add_parser("member", help="membership by reverse deduplication")
    _add_system_flags(sub)
    sub.add_argument("--word", required=True)
    sub.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    _add_output_flags(sub)
    sub.set_defaults(func=cmd_member)

    sub = commands.add_parser("automaton", help="build the kmax <= 3 automaton")
    _add_system_flags(sub)
    sub.add_argument("--minimize", action="store_true")
    _add_output_flags(sub, formats=("json", "dot"))
    sub.set_defaults(func=cmd_automaton)

    sub = commands.add_parser("capacity", help="growth rate of the language")
    _add_system_flags(sub)
    sub.add_argument("--exact", action="store_true", help="closed form (default)")
    sub.add_argument("--numeric", action="store_true", help="add the spectral value")
    sub.add_argument("--empirical", action="store_true", help="estimate from counts")
    sub.add_argument("--max-len", type=int, default=14)
    sub.add_argument("--window", type=int, default=5)
    sub.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    sub.add_argument("--tolerance", type=float, default=1e-10)
    sub.add_argument("--bits", action="store_true", help="also report bits per symbol")
    _add_output_flags(sub)
    sub.set_defaults(func=cmd_capacity)

    sub = commands.add_parser("express", help="is every word a factor of the language")
    _add_system_flags(sub)
    sub.add_argument("--witness", action="store_true", help="include a witness word")
    _add_output_flags(sub)
    sub.set_defaults(func=cmd_express)

    sub = commands.add_parser("witness", help="a word that never occurs as a factor")
    _add_system_flags(sub)
    _add_output_flags(sub)
    sub.set_defaults(func=cmd_witness)

    sub = commands.add_parser("dedup", help="irreducible roots under deduplication")
    sub.add_argument("--alphabet", required=True)
    sub.add_argument("--word", required=True)
    sub.add_argument("--max-dup", type=int, required=True)
    sub.add_argument("--target", help="also report the distance to this word")
    sub.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    _add_output_flags(sub)
    sub.set_defaults(func=cmd_dedup)

    sub = commands.add_parser("verify", help="closure certificate for the automaton")
    _add_system_flags(sub)
    sub.add_argument(
        "--check-upto", type=int, help="also compare against enumeration up to here"
    )
    sub.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    _add_output_flags(sub)
    sub.set_defaults(func=cmd_verify)

    sub = commands.add_parser("squarefree", help="prefix of a square-free word")
    sub.add_argument("--length", type=int, required=True)
    sub.add_argument("--alphabet", default="012")
    _add_output_flags(sub)
    sub.set_defaults(func=cmd_squarefree)

    sub = commands.add_parser("avoid", help="capacity under forbidden factors")
    sub.add_argument("--alphabet", required=True)
    # repeatable and greedy: --forbid 210 021 and --forbid 210 --forbid 021 both work
    sub.add_argument("--forbid", nargs="+", action="extend", default=None)
    sub.add_argument("--tolerance", type=float, default=1e-6)
    _add_output_flags(sub)
    sub.set_defaults(func=cmd_avoid)

    return parser


def _emit(args, doc, lines) -> None:
    if getattr(args, "format", "json") == "json" and doc is not None:
        text = json.dumps(doc, indent=2)
    else:
        text = "\n".join(lines if lines is not None else [json.dumps(doc, indent=2)])
    out = getattr(args, "out", None)
    if out:
        with open(out, "w") as handle:
            handle.write(text + "\n")
    else:
        print(text)


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        doc, lines = args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except _DOMAIN_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    _emit(args, doc, lines)
    return 0


if __name__ == "__main__":
    sys.exit(main())
