"""Verification reports for sequences and the comparison-table renderer."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ParameterError
from .gapbound import gap_upper_bound
from .sequence import Fhs, is_uniform, lg_bound, max_auto, min_gap, wg_lg_bound


@dataclass(frozen=True)
class VerificationReport:
    """Every verifiable metric of one sequence; pure function of the input.

    Fields that are undefined at the sequence's shape (for example the wide-gap
    bound below length 4) are None.
    """

    n: int
    l: int
    max_auto: int | None
    lg_bound: int
    wg_lg_bound: int | None
    is_optimal: bool | None
    min_gap: int | None
    gap_upper_bound: dict | None
    is_uniform: bool

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "l": self.l,
            "max_auto": self.max_auto,
            "lg_bound": self.lg_bound,
            "wg_lg_bound": self.wg_lg_bound,
            "is_optimal": self.is_optimal,
            "min_gap": self.min_gap,
            "gap_upper_bound": self.gap_upper_bound,
            "is_uniform": self.is_uniform,
        }


def verify_sequence(s: Fhs) -> VerificationReport:
    """Measure correlation, gap, uniformity, and the applicable bounds."""
    n, l = s.n, s.alphabet_size
    h = max_auto(s) if n >= 2 else None
    lg = lg_bound(n, l)
    bound = None
    if l >= 3 and n >= 2:
        case = gap_upper_bound(n, l)
        bound = {"case": case.case, "bound": case.bound}
    return VerificationReport(
        n=n,
        l=l,
        max_auto=h,
        lg_bound=lg,
        wg_lg_bound=wg_lg_bound(n, l) if n >= 4 else None,
        is_optimal=(h == lg) if h is not None else None,
        min_gap=min_gap(s) if n >= 2 else None,
        gap_upper_bound=bound,
        is_uniform=is_uniform(s),
    )


def render_table2(rows: list[dict]) -> str:
    """Render comparison rows as an aligned text table.

    Each row may carry 'parameters', 'constraints', 'min_gap', and 'label'.
    A missing constraints field renders as a backslash and a missing minimum
    gap as 'uncontrolled', matching the usual presentation for constructions
    that do not control the gap.
    """
    if not rows:
        raise ParameterError("need at least one row")
    headers = ("Parameters", "Constraints", "Minimum gap", "Label")
    cells = []
    for row in rows:
        gap = row.get("min_gap")
        cells.append(
            (
                str(row.get("parameters") or "\\"),
                str(row.get("constraints") or "\\"),
                "uncontrolled" if gap is None else str(gap),
                str(row.get("label") or ""),
            )
        )
    widths = [max(len(h), *(len(c[i]) for c in cells)) for i, h in enumerate(headers)]
    lines = [
        "  ".join(h.ljust(widths[i]) for i, h in enumerate(headers)).rstrip(),
        "  ".join("-" * widths[i] for i in range(len(headers))).rstrip(),
    ]
    for c in cells:
        lines.append("  ".join(c[i].ljust(widths[i]) for i in range(len(headers))).rstrip())
    return "\n".join(lines) + "\n"


def table_row_for(s: Fhs, constraints: str | None = None, label: str | None = None) -> dict:
    """Build a table row from a measured sequence."""
    rep = verify_sequence(s)
    return {
        "parameters": f"({rep.n}, {rep.l}, {rep.max_auto})",
        "constraints": constraints,
        "min_gap": rep.min_gap,
        "label": label,
    }
