"""Command-line front end.

    pinclass decide <basis-file> [--json] [--witness] [--dot PATH] [--oracle-depth N]
    pinclass pinwords "<perm>"
    pinclass phi <word> [--inverse]
    pinclass oracle simples|words <basis-file> --max N

``decide`` exits 0 when the class has finitely many simple permutations and 1
otherwise. Every command exits 2 on invalid input.
"""

import argparse
import logging
import sys
from pathlib import Path

from pydantic import ValidationError
from rich.console import Console
from rich.logging import RichHandler
from rich.markup import escape
from rich.table import Table

from pinclass.constants import LOG_LEVEL, STRICT_ANTICHAIN
from pinclass.decision import ProperPinCriterion, decide_overall, validate_basis
from pinclass.errors import BasisFileError, PermutationError, PinClassError
from pinclass.oracle import oracle_simples_in_class, oracle_words_accepted
from pinclass.perm import Permutation, parse_permutation
from pinclass.pins import phi, phi_inverse, pin_words
from pinclass.schemas import FinitenessReport, RunConfig, Verdict

logger = logging.getLogger(__name__)

EXIT_FINITE = 0
EXIT_INFINITE = 1
EXIT_INVALID = 2

NOT_A_PIN_PERMUTATION = "not a pin-permutation"


def create_parser() -> argparse.ArgumentParser:
    """Create the top-level parser with one subparser per command."""
    parser = argparse.ArgumentParser(
        prog="pinclass",
        description="Decide whether Av(B) contains finitely many simple permutations",
    )
    parser.add_argument(
        "-v",
        "--verbose",
        action="store_true",
        help="Log debug records to standard error",
    )

    subparsers = parser.add_subparsers(dest="command", help="Available commands")

    # decide
    decide_parser = subparsers.add_parser(
        "decide", help="Decide finiteness for the basis listed in a file"
    )
    decide_parser.add_argument("basis_file", type=Path, help="One permutation per line")
    decide_parser.add_argument(
        "--json", action="store_true", help="Print the report as JSON"
    )
    decide_parser.add_argument(
        "--witness",
        action="store_true",
        help="Decode pumped lasso words into witness permutations",
    )
    decide_parser.add_argument(
        "--dot",
        type=Path,
        default=None,
        metavar="PATH",
        help="Write the complement automaton in Graphviz format",
    )
    decide_parser.add_argument(
        "--oracle-depth",
        type=int,
        default=0,
        metavar="N",
        help="Attach brute-force simple counts up to length N (default: 0, off)",
    )

    # pinwords
    pinwords_parser = subparsers.add_parser(
        "pinwords", help="List the pin words of a simple permutation"
    )
    pinwords_parser.add_argument("permutation", help='For example "2 4 1 3"')

    # phi
    phi_parser = subparsers.add_parser(
        "phi", help="Map a strict pin word to its alternating direction word"
    )
    phi_parser.add_argument("word")
    phi_parser.add_argument(
        "--inverse",
        action="store_true",
        help="Map an alternating direction word back to its strict pin word",
    )

    # oracle
    oracle_parser = subparsers.add_parser(
        "oracle", help="Brute-force enumerations printed as CSV"
    )
    oracle_parser.add_argument("kind", choices=["simples", "words"])
    oracle_parser.add_argument("basis_file", type=Path)
    oracle_parser.add_argument(
        "--max",
        dest="max_length",
        type=int,
        required=True,
        metavar="N",
        help="Largest length to enumerate",
    )

    return parser


def configure_logging(verbose: bool = False) -> None:
    level = logging.DEBUG if verbose else LOG_LEVEL
    logging.basicConfig(
        level=level,
        format="%(message)s",
        datefmt="[%X]",
        handlers=[RichHandler(console=Console(stderr=True), show_path=False)],
    )


def read_basis_file(path: Path) -> list[Permutation]:
    """Permutations listed one per line; '#' comments and blank lines are skipped.

    Raises:
        OSError: If the file cannot be read
        BasisFileError: If the file is not UTF-8 text
        PermutationError: If a line is not a permutation
    """
    try:
        content = path.read_text(encoding="utf-8")
    except UnicodeDecodeError as e:
        raise BasisFileError(path, e.start, e.reason) from e

    elements = []
    for number, line in enumerate(content.splitlines(), 1):
        text = line.strip()
        if not text or text.startswith("#"):
            continue
        try:
            elements.append(parse_permutation(text))
        except PermutationError as e:
            raise PermutationError(f"{path}:{number}: {e}") from e
    logger.debug(f"read {len(elements)} basis elements from {path}")
    return elements


def render_report(report: FinitenessReport, console: Console) -> None:
    table = Table(title="Simple permutations in Av(B)")
    table.add_column("Criterion", style="cyan")
    table.add_column("Verdict")
    table.add_column("Failing symmetry", style="magenta")
    table.add_column("Note", style="dim")

    for name, sub in report.sub_verdicts.items():
        colour = "green" if sub.verdict is Verdict.FINITE else "red"
        table.add_row(
            name,
            f"[{colour}]{sub.verdict.value}[/{colour}]",
            sub.failing_symmetry or "",
            escape(sub.note or ""),
        )
    console.print(table)

    colour = "green" if report.overall is Verdict.FINITE else "red"
    console.print(f"[bold]overall:[/bold] [{colour}]{report.overall.value}[/{colour}]")

    witnesses = report.witnesses
    if witnesses.pin_lasso is not None:
        lasso = witnesses.pin_lasso
        console.print(
            f"[bold]pin lasso:[/bold] prefix={lasso.prefix!r} "
            f"cycle={lasso.cycle!r} suffix={lasso.suffix!r}"
        )
    if witnesses.pin_words:
        witness_table = Table(title="Pin witnesses")
        witness_table.add_column("k", justify="right")
        witness_table.add_column("Pin word")
        witness_table.add_column("Permutation")
        witness_table.add_column("Avoids B")
        for witness in witnesses.pin_words:
            witness_table.add_row(
                str(witness.repetitions),
                witness.pin_word,
                witness.permutation,
                "yes" if witness.avoids_basis else "[red]no[/red]",
            )
        console.print(witness_table)
    if witnesses.simple_counts is not None:
        counts = witnesses.simple_counts.counts
        listing = ", ".join(f"{n}: {counts[n]}" for n in sorted(counts))
        console.print(f"[bold]simple counts:[/bold] {listing}")

    total = sum(report.timings.values())
    console.print(f"[dim]{total:.1f} ms[/dim]")


def run_decide(config: RunConfig) -> int:
    """Decide the basis in ``config.input_path``; returns 0 if finite, 1 if not."""
    basis = validate_basis(
        read_basis_file(config.input_path), strict_antichain=STRICT_ANTICHAIN
    )
    report = decide_overall(basis, emit_witness=config.emit_witness)

    if config.dot_path is not None:
        automaton = ProperPinCriterion().automaton(basis)
        config.dot_path.write_text(automaton.to_dot(), encoding="utf-8")
        logger.info(f"wrote {automaton.num_states} states to {config.dot_path}")
    if config.oracle_depth > 0:
        report.witnesses.simple_counts = oracle_simples_in_class(
            basis, config.oracle_depth
        )

    if config.output_format == "json":
        print(report.model_dump_json(indent=2))
    else:
        render_report(report, Console())
    return EXIT_FINITE if report.overall is Verdict.FINITE else EXIT_INFINITE


def run_pinwords(perm_text: str) -> int:
    """Print the sorted pin words of a simple permutation, one per line."""
    words = pin_words(parse_permutation(perm_text))
    if not words:
        Console(stderr=True).print(f"[yellow]{NOT_A_PIN_PERMUTATION}[/yellow]")
    for word in sorted(words):
        print(word)
    return 0


def run_phi(word: str, inverse: bool = False) -> int:
    print(phi_inverse(word) if inverse else phi(word))
    return 0


def run_oracle(kind: str, basis_file: Path, max_length: int) -> int:
    """Print brute-force enumerations as CSV in increasing length order."""
    elements = read_basis_file(basis_file)
    if kind == "simples":
        sys.stdout.write(oracle_simples_in_class(elements, max_length).to_csv())
        return 0
    basis = validate_basis(elements, strict_antichain=STRICT_ANTICHAIN)
    automaton = ProperPinCriterion().automaton(basis)
    print("length,word")
    for word in sorted(oracle_words_accepted(automaton, max_length), key=_by_length):
        print(f"{len(word)},{word}")
    return 0


def _by_length(word: str) -> tuple[int, str]:
    return len(word), word


def _report_error(message: str) -> None:
    Console(stderr=True).print(f"[red]error:[/red] {escape(message)}")


def main(args: list[str] | None = None) -> int:
    """Main entry point; returns the process exit code."""
    parser = create_parser()
    parsed_args = parser.parse_args(args)

    if not parsed_args.command:
        parser.print_help()
        return EXIT_INVALID

    configure_logging(parsed_args.verbose)

    try:
        if parsed_args.command == "decide":
            config = RunConfig(
                input_path=parsed_args.basis_file,
                output_format="json" if parsed_args.json else "text",
                emit_witness=parsed_args.witness,
                dot_path=parsed_args.dot,
                oracle_depth=parsed_args.oracle_depth,
            )
            return run_decide(config)
        if parsed_args.command == "pinwords":
            return run_pinwords(parsed_args.permutation)
        if parsed_args.command == "phi":
            return run_phi(parsed_args.word, parsed_args.inverse)
        if parsed_args.command == "oracle":
            return run_oracle(
                parsed_args.kind, parsed_args.basis_file, parsed_args.max_length
            )
    except ValidationError as e:
        _report_error(f"invalid options: {e.errors()[0]['msg']}")
        return EXIT_INVALID
    except (PinClassError, OSError) as e:
        _report_error(str(e))
        return EXIT_INVALID

    parser.print_help()
    return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
