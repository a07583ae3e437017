"""
The verification report: a configuration echo, the check records, summary
counts derived from those records, and a metadata block holding the only
run-dependent values.
"""
import csv
import io
from typing import List
from typing import Optional

from pydantic import BaseModel

from jlambda import __version__
from jlambda.verifier import CheckKind
from jlambda.verifier import CheckResult

FORMATS = ("json", "csv")
CSV_FIELDS = ("subject", "check", "kind", "passed", "witness")


class RunConfig(BaseModel):
    max_n: int
    strict: bool
    threads: int


class ReportSummary(BaseModel):
    polynomials_checked: int
    checks_run: int
    theorem_failures: int
    conjecture_failures: int
    findings: int
    max_degree: Optional[int] = None

    @classmethod
    def from_records(
        cls, records: List[CheckResult], max_degree: Optional[int] = None
    ) -> "ReportSummary":
        def failures(kind: CheckKind) -> int:
            return sum(1 for r in records if r.kind is kind and not r.passed)

        return cls(
            polynomials_checked=sum(1 for r in records if r.check == "order"),
            checks_run=len(records),
            theorem_failures=failures(CheckKind.THEOREM),
            conjecture_failures=failures(CheckKind.CONJECTURE),
            findings=sum(1 for r in records if r.kind is CheckKind.FINDING),
            max_degree=max_degree,
        )


class ReportMetadata(BaseModel):
    version: str = __version__
    started_at: str
    wall_time_seconds: float


class ReportDoc(BaseModel):
    config: RunConfig
    summary: ReportSummary
    records: List[CheckResult]
    metadata: ReportMetadata

    @classmethod
    def build(
        cls,
        config: RunConfig,
        records: List[CheckResult],
        metadata: ReportMetadata,
        max_degree: Optional[int] = None,
    ) -> "ReportDoc":
        return cls(
            config=config,
            summary=ReportSummary.from_records(records, max_degree),
            records=records,
            metadata=metadata,
        )

    def render(self, format: str = "json") -> str:
        if format == "json":
            return self.model_dump_json(indent=2) + "\n"
        if format == "csv":
            return self.render_csv()
        raise ValueError(f"unknown report format {format!r}, expected one of {FORMATS}")

    def render_csv(self) -> str:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(CSV_FIELDS)
        for record in self.records:
            writer.writerow(
                (
                    record.subject,
                    record.check,
                    record.kind.value,
                    "pass" if record.passed else "fail",
                    ";".join(f"{k}={v}" for k, v in sorted(record.witness.items())),
                )
            )
        return buffer.getvalue()
