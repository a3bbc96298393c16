from typing import Dict, List, Optional

import pandas as pd
from rich.console import Console
from rich.table import Table

from dsl_algebra.models.report_models import VerificationReport


def print_rich_table(df, title=None, console: Optional[Console] = None):
    console = console or Console()
    table = Table(title=title, show_lines=True, header_style="bold magenta")
    for col in df.columns:
        table.add_column(str(col), overflow="fold")
    for _, row in df.iterrows():
        table.add_row(*[str(x) if x is not None else "" for x in row])
    console.print(table)


def report_to_dataframe(report: VerificationReport) -> pd.DataFrame:
    """One row per check entry."""
    data = []
    for entry in report.entries:
        data.append({
            "Check": entry.name,
            "Degree": entry.degree,
            "Expected": entry.expected,
            "Actual": entry.actual,
            "Pass": "yes" if entry.passed else "NO",
        })
    return pd.DataFrame(data, columns=["Check", "Degree", "Expected", "Actual", "Pass"])


def summary_dataframe(reports: List[VerificationReport]) -> pd.DataFrame:
    """Per-suite totals, as printed after `verify all`."""
    data: List[Dict[str, object]] = []
    for report in reports:
        failed = len(report.failures())
        data.append({
            "Suite": report.suite,
            "Max Degree": report.max_degree,
            "Checks": len(report.entries),
            "Failed": failed,
            "Pass": "yes" if report.passed else "NO",
        })
    return pd.DataFrame(data, columns=["Suite", "Max Degree", "Checks", "Failed", "Pass"])


def print_report(report: VerificationReport, console: Optional[Console] = None):
    console = console or Console()
    print_rich_table(report_to_dataframe(report), title=f"{report.suite} (max degree {report.max_degree})",
                     console=console)
    for note in report.notes:
        console.print(f"[dim]note:[/dim] {note}")
