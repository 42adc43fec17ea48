"""Prints one verdict line per acceptance criterion after the run."""

import re

CRITERIA = {
    1: "line-bundle cohomology table (exact dims, g in [1,6], d in [-12,12])",
    2: "fast-path inequality matches the full algorithm (q and weight)",
    3: "dimension oracles: tableau counts, Cauchy binomial identities",
    4: "nonvanishing exactly on the predicted index interval; socle case",
    5: "Euler-characteristic balance to order 10, with closed-form spots",
    6: "projective-line closed-form series equals the general sweep",
    7: "cohomology lattice matches the indexed decomposition; root node",
    8: "rank palindromes under the duality twist",
    9: "region diagrams reproduce the six figure captions and the MID node",
    10: "lift obstruction witnesses for negative effective twists",
    11: "projective-dimension witnesses up to the lower bound",
}

_results: dict[int, list] = {}


def pytest_runtest_logreport(report):
    match = re.search(r"test_criterion_(\d+)", report.nodeid)
    if not match or report.when != "call":
        return
    number = int(match.group(1))
    if hasattr(report, "wasxfail"):
        outcome = "xfail"
    else:
        outcome = report.outcome
    _results.setdefault(number, []).append(outcome)


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(CRITERIA):
        outcomes = _results.get(number)
        if not outcomes:
            continue
        if any(o == "failed" for o in outcomes):
            verdict = "FAIL"
        elif any(o == "xfail" for o in outcomes):
            verdict = "pass (one recorded spec contradiction, see decisions ledger)"
        else:
            verdict = "pass"
        terminalreporter.write_line(
            f"criterion {number:>2}: {verdict} -- {CRITERIA[number]}"
        )
