import argparse
import logging
import sys
from dataclasses import replace
from typing import Optional

from rich.console import Console
from rich.logging import RichHandler
from rich.table import Table

from ecom_sdk import __version__
from ecom_sdk.complexes.models import abco_poset, afcom_complex, mabco_poset
from ecom_sdk.complexes.poset import order_complex
from ecom_sdk.complexes.simplicial import load_complex
from ecom_sdk.errors import EcomError
from ecom_sdk.groups.finite_group import FiniteGroup
from ecom_sdk.groups.loader import GroupSpec, load_group, parse_spec_json, read_spec
from ecom_sdk.schema import Report
from ecom_sdk.settings import Settings, SharedSettings, load_settings

commands = ['group_info', 'afcom', 'homology', 'pi1', 'verify']
variants = ['afcom', 'abco', 'mabco']
suites = ['paper', 'properties']

EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


class UsageError(EcomError):
    """Flags that parse but do not make sense together."""


def parse_args(args=None):
    parser = argparse.ArgumentParser(
        prog='ecom',
        description='Homology, fundamental groups and commutator maps of Ecom G for finite groups.',
    )
    parser.add_argument('command', choices=commands, help='Command to execute')
    parser.add_argument('spec', nargs='?', help="Group spec JSON file ('-' reads stdin)")
    parser.add_argument('--spec-json', type=str, help='Group spec as a JSON string, instead of a file')
    parser.add_argument('--config', action='store', help='YAML config file layered over the packaged defaults')
    parser.add_argument('--out', help='Write the report to this file instead of stdout')
    parser.add_argument('--pretty', action='store_true', help='Indented JSON and a summary table on stderr')
    parser.add_argument('--quiet', action='store_true', help='Only warnings and errors on stderr')
    parser.add_argument('--debug', action='store_true', help='Enable debug logging')
    parser.add_argument('--jobs', type=int, default=1, help='Worker processes (default: 1)')
    parser.add_argument('--max-order', type=int, help='Largest group order to build')
    parser.add_argument('--max-simplices', type=int, help='Simplex count cap per dimension')
    parser.add_argument('--max-cosets', type=int, help='Todd-Coxeter coset cap')
    parser.add_argument('--time-limit', type=float, help='Soft wall-clock limit in seconds')
    parser.add_argument('--timing', action='store_true', help='Include wall-clock timing in the report')
    parser.add_argument('--version', action='version', version='%(prog)s v' + __version__)

    # homology / pi1
    parser.add_argument('--variant', choices=variants, default='afcom', help='Model of Ecom G (default: afcom)')
    parser.add_argument('--max-dim', type=int, help='Top homology degree (default: dimension of the complex)')
    parser.add_argument('--reduced', action='store_true', help='Reduced homology')
    parser.add_argument('--complex', help='Complex export JSON to use instead of a group')
    parser.add_argument('--betti-only', action='store_true', help='Betti numbers only, via modular ranks')
    parser.add_argument('--pi2', action='store_true', help='Also compute H_2 of the universal cover (pi_2)')
    parser.add_argument('--simplify', action='store_true', help='Run Tietze simplification')
    parser.add_argument('--tc-limit', type=int, help='Run Todd-Coxeter with this many cosets at most')
    parser.add_argument('--tree', choices=['auto', 'star', 'bfs'], default='auto', help='Spanning tree strategy')
    parser.add_argument('--base', type=int, help='Base vertex (default: 0)')
    parser.add_argument('--certify-torsion', action='store_true', help='Look for a relator certifying torsion in pi_1')

    # verify
    parser.add_argument('--suite', choices=suites, action='append', help='Verification suite (repeatable)')
    parser.add_argument('--seed', type=int, help='Seed for sampled checks')
    parser.add_argument('--stretch', action='store_true', help='Include opt-in stretch checks')
    parser.add_argument('--budget', type=float, help='Seconds allowed for each stretch check')
    return parser.parse_args(args)


stderr_console = Console(stderr=True)


def configure_logging(args):
    level = logging.DEBUG if args.debug else logging.WARNING if args.quiet else logging.INFO
    logging.basicConfig(
        level=level,
        format='%(message)s',
        datefmt='[%X]',
        handlers=[RichHandler(console=stderr_console, show_path=False, rich_tracebacks=args.debug)],
        force=True,
    )


def print_info(args, message):
    if not args.quiet:
        stderr_console.print(f"[yellow][INFO][/yellow] {str(message)}")


def print_debug(args, message):
    if args and isinstance(args, argparse.Namespace) and args.debug and not args.quiet:
        stderr_console.print(f"[blue][DEBUG][/blue] {str(message)}")


def print_error(args, message):
    stderr_console.print(f"[bold red]❌ {message}")


def print_success(args, message):
    if not args.quiet:
        stderr_console.print(f"[bold green]✅ {message}")


def build_settings(args) -> Settings:
    """config.yml < --config < ECOM_BUDGET_MB < flags."""
    settings = load_settings(args.config).with_budget(
        max_group_order=args.max_order,
        max_simplices=args.max_simplices,
        max_cosets=args.max_cosets,
        time_limit_seconds=args.time_limit,
    )
    if args.seed is not None:
        settings = replace(settings, seed=args.seed)
    if args.budget is not None:
        settings = replace(settings, stretch_seconds=args.budget)
    SharedSettings.configure(settings)
    return settings


def get_spec(args, required: bool = True) -> Optional[GroupSpec]:
    if args.spec and args.spec_json:
        raise UsageError("give either a spec file or --spec-json, not both")
    if args.spec_json:
        return parse_spec_json(args.spec_json)
    if args.spec:
        return read_spec(args.spec)
    if required:
        raise UsageError(f"'{args.command}' needs a group spec file or --spec-json")
    return None


def get_group(args, spec: Optional[GroupSpec] = None) -> FiniteGroup:
    spec = spec or get_spec(args)
    print_debug(args, f"Loading {spec.describe()}")
    return load_group(spec)


def new_report(args, result, spec: Optional[GroupSpec] = None) -> Report:
    return Report(
        command=args.command,
        result=result,
        spec=spec.to_dict() if spec else None,
        budget=SharedSettings.get().budget.to_dict(),
    )


def write_report(args, report: Report):
    text = report.to_json(pretty=args.pretty)
    if args.out:
        with open(args.out, 'w', encoding='utf-8') as f:
            f.write(text + '\n')
        print_success(args, f"Report written to {args.out}")
    else:
        sys.stdout.write(text + '\n')
        sys.stdout.flush()


def print_summary(args, title, rows):
    """Two-column table on stderr for --pretty."""
    if args.quiet or not args.pretty:
        return
    table = Table(title=title)
    table.add_column("Item", style="cyan")
    table.add_column("Value", style="green")
    for key, value in rows:
        table.add_row(str(key), str(value))
    stderr_console.print(table)


def get_complex(args):
    """
    The complex a homology / pi1 command works on.

    Returns:
        (complex, group or None, spec or None, description)
    """
    if args.complex:
        if args.spec or args.spec_json:
            raise UsageError("--complex replaces the group spec; give one or the other")
        K = load_complex(args.complex)
        return K, None, None, f"complex {args.complex}"

    spec = get_spec(args)
    G = get_group(args, spec)
    if args.variant == 'afcom':
        K = afcom_complex(G)
    elif args.variant == 'abco':
        K = order_complex(abco_poset(G))
    else:
        K = order_complex(mabco_poset(G))
    print_info(args, f"{args.variant}({G.name}): {K.vertex_count} vertices, {len(K.facets)} facets, dimension {K.dimension}")
    return K, G, spec, f"{args.variant}({G.name})"
