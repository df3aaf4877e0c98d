"""
Serialisation of sweep and table results.

CSV is the primary format with a fixed header; JSON carries the same
fields value for value.
"""

import csv
import io
import json
from typing import Iterable, List

from .models import AGENT_ORDER, CellSummary, OutputRecord
from .tables import Table

CSV_HEADER = OutputRecord.columns()


def to_output_records(summary: CellSummary) -> List[OutputRecord]:

    config = summary.config
    records = []

    for kind in AGENT_ORDER:
        agent = summary.agent(kind)
        record = OutputRecord(
            p=config.p,
            n=config.n,
            m=config.m,
            alpha=config.alpha,
            prior_a=config.prior_a,
            prior_b=config.prior_b,
            agent=kind,
            mean_profit_per_allowed_bet=agent.mean_profit_per_allowed_bet,
            std_error=agent.std_error,
            mean_bets_placed=agent.mean_bets_placed,
            runs=summary.runs,
            seed=summary.seed,
        )
        records.append(record)

    return records


def _record_row(record: OutputRecord) -> dict:
    row = record.dict()
    row["agent"] = record.agent.value
    return row


class RecordWriter:

    """Streams OutputRecords as CSV or as a JSON array"""

    def __init__(self, stream, fmt: str = "csv") -> None:
        self._stream = stream
        self._fmt = fmt
        self._count = 0

        if fmt == "csv":
            self._csv = csv.DictWriter(stream, fieldnames=CSV_HEADER, lineterminator="\n")
            self._csv.writeheader()
        else:
            self._stream.write("[")

    def write(self, records: Iterable[OutputRecord]):
        for record in records:
            row = _record_row(record)
            if self._fmt == "csv":
                self._csv.writerow(row)
            else:
                prefix = ",\n" if self._count else "\n"
                self._stream.write(prefix + json.dumps(row))
            self._count += 1

    def close(self):
        if self._fmt != "csv":
            self._stream.write("\n]\n" if self._count else "]\n")

    @property
    def count(self) -> int:
        return self._count


def records_to_text(summaries: Iterable[CellSummary], fmt: str = "csv") -> str:
    stream = io.StringIO()
    writer = RecordWriter(stream, fmt)
    for summary in summaries:
        writer.write(to_output_records(summary))
    writer.close()
    return stream.getvalue()


def parse_csv_records(text: str) -> List[OutputRecord]:
    reader = csv.DictReader(io.StringIO(text))
    return [OutputRecord.parse_obj(row) for row in reader]


########################################
# Tables
########################################


def table_to_csv(table: Table) -> str:
    stream = io.StringIO()
    writer = csv.DictWriter(stream, fieldnames=Table.columns(), lineterminator="\n")
    writer.writeheader()
    for row in table.flat_rows():
        writer.writerow(row)
    return stream.getvalue()


def table_to_json(table: Table) -> str:
    data = table.dict()
    data["rows"] = table.flat_rows()
    return json.dumps(data, indent=2) + "\n"
