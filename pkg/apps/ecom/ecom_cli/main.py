import importlib
import logging
import sys
import time

from ecom_cli.internals import system
from ecom_sdk.errors import BudgetExceeded, EcomError, GroupSpecError, InvalidInputError, RelatorViolation

logger = logging.getLogger("ecom")


def load_command_module(command):
    return importlib.import_module(f"ecom_cli.commands.{command}")


def execute_command(command, args):
    module = load_command_module(command)
    return module.execute(args)


def run(argv=None):
    """Parse, run one command, write its report; returns the exit code."""
    try:
        args = system.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else system.EXIT_USAGE

    system.configure_logging(args)
    try:
        settings = system.build_settings(args)
    except (FileNotFoundError, ValueError, TypeError) as e:
        system.print_error(args, f"Invalid configuration: {e}")
        return system.EXIT_USAGE

    started = time.perf_counter()
    try:
        with settings.budget.active():
            report = execute_command(args.command, args)
    except BudgetExceeded as e:
        system.print_error(args, str(e))
        report = system.new_report(args, {"error": "budget_exceeded", "budget_exceeded": e.to_dict()})
        report.exit_code = system.EXIT_BUDGET
    except (system.UsageError, GroupSpecError, InvalidInputError) as e:
        system.print_error(args, str(e))
        return system.EXIT_USAGE
    except RelatorViolation as e:
        system.print_error(args, str(e))
        return system.EXIT_VERIFICATION_FAILED
    except EcomError as e:
        system.print_error(args, str(e))
        return system.EXIT_USAGE

    if args.timing:
        report.timing = {"seconds": round(time.perf_counter() - started, 3)}
    system.write_report(args, report)
    return report.exit_code


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
