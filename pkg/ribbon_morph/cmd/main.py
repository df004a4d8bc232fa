import argparse
import sys
from typing import List, Optional

from ribbon_morph.config.config import get_config
from ribbon_morph.internal.app.app import App
from ribbon_morph.internal.presentation.commands import COMMANDS, EXIT_CONFIG


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ribbon-morph",
        description="Shapes of thin ribbons under surface stress and residual strain.",
    )
    parser.add_argument('command', choices=COMMANDS, help='Pipeline to run')
    parser.add_argument('--config', help='Path to a TOML job document')
    parser.add_argument('--out', help="Output directory ('-' streams sweep CSV to stdout)")
    parser.add_argument('--format', choices=('obj', 'ply', 'csv'), help='Output format, overrides the job document')
    parser.add_argument('--tol', type=float, help='Classification band, or residual tolerance for verify')
    parser.add_argument('--samples', help='Mesh resolution as SxT, e.g. 400x40')
    parser.add_argument('--quiet', action='store_true', help='Only warnings and errors; no report echo')
    parser.add_argument('--env', help='Path to .env file')
    parser.add_argument('--cases', type=int, help='Random states in the ODE oracle suite')
    parser.add_argument('--seed', type=int, help='Seed for the verify suites')
    return parser


def cli_main(argv: Optional[List[str]] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as e:
        # usage errors and --help
        return e.code if isinstance(e.code, int) else EXIT_CONFIG

    cfg = get_config(args.env)

    app = App(cfg, quiet=args.quiet)

    return app.run(args)


def main() -> None:
    sys.exit(cli_main())


if __name__ == '__main__':
    main()
