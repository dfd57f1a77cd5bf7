from ecom_cli.internals import system
from ecom_sdk.settings import SharedSettings
from ecom_sdk.verification import SUITES, Verdict, run_checks, summarize

verdict_style = {Verdict.PASS: "bold green", Verdict.FAIL: "bold red", Verdict.SKIPPED: "yellow"}


def execute(args):
    if not args.suite:
        raise system.UsageError("select at least one suite with --suite paper|properties")

    settings = SharedSettings.get()
    suites = {}
    everything = []
    budget_ran_out = False
    for suite in dict.fromkeys(args.suite):
        checks = SUITES[suite](stretch=args.stretch)
        system.print_info(args, f"Running {len(checks)} {suite} checks")
        results = run_checks(checks, settings, jobs=max(1, args.jobs), progress=not args.quiet, description=suite)
        for check, result in zip(checks, results):
            if not args.quiet:
                style = verdict_style[result.verdict]
                system.stderr_console.print(f"[{style}]{result.verdict.value:<8}[/{style}] {suite}/{result.name}")
            if result.budget_exhausted and not check.stretch:
                budget_ran_out = True
        suites[suite] = [r.to_dict() for r in results]
        everything.extend(results)

    summary = summarize(everything)
    passed = summary[Verdict.FAIL.value] == 0 and not budget_ran_out
    report = system.new_report(args, {"suites": suites, "summary": summary, "passed": passed, "seed": settings.seed})
    if summary[Verdict.FAIL.value]:
        report.exit_code = system.EXIT_VERIFICATION_FAILED
    elif budget_ran_out:
        report.exit_code = system.EXIT_BUDGET
    return report
