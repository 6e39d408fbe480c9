from typing import Any, Dict, List, Sequence, Tuple
from dataclasses import dataclass, field

from pyqudec.engine.ResultRow import ResultRow
from pyqudec.engine.AggregateRow import AggregateRow

Table = Tuple[List[str], List[Sequence[Any]]]


@dataclass
class RunRecord:
    rows: List[ResultRow] = field(default_factory=list)
    aggregates: List[AggregateRow] = field(default_factory=list)
    metadata: Dict[str, Any] = field(default_factory=dict)
    tables: Dict[str, Table] = field(default_factory=dict)

    @staticmethod
    def aggregate(rows: Sequence[ResultRow], data_bits: int) -> List[AggregateRow]:
        groups: Dict[Tuple[float, str, str], List[ResultRow]] = {}
        for row in rows:
            groups.setdefault(row.group, []).append(row)
        return [AggregateRow.of(rows=members, data_bits=data_bits) for members in groups.values()]
