"""
Row reduction of sparse vectors over Q(zeta_N)
"""

from typing import Any, Dict, Hashable, List, Mapping, Optional

from .cyclotomic import CycNum

SparseRow = Dict[Hashable, CycNum]


class RowReducer:
    """Incremental echelon basis; each stored row owns a distinct leading (smallest) column.

    Stored rows are monic: the entry in their leading column is 1. A new row is reduced by
    ``r <- r - r[c]*P`` against the pivot of each leading column it meets.
    """

    def __init__(self, conductor: int, track: bool = False):
        self.conductor = conductor
        self.track = track
        self._pivots: Dict[Hashable, tuple] = {}

    @property
    def rank(self) -> int:
        return len(self._pivots)

    def add(self, row: Mapping[Hashable, CycNum], label: Any = None) -> Optional[SparseRow]:
        """Insert a row; returns None if it was independent, else the kernel combination.

        The combination maps labels to coefficients (only meaningful with ``track=True``).
        """
        work: SparseRow = {k: v for k, v in row.items() if not v.is_zero()}
        comb: Optional[SparseRow] = {label: CycNum.one(self.conductor)} if self.track else None
        while work:
            col = min(work)
            pivot = self._pivots.get(col)
            if pivot is None:
                lead = work[col]
                if lead != 1:
                    scale = lead.inverse()
                    work = {k: v * scale for k, v in work.items()}
                    if comb is not None:
                        comb = {k: v * scale for k, v in comb.items()}
                self._pivots[col] = (work, comb)
                return None
            prow, pcomb = pivot
            factor = work[col]
            work = _axpy(work, -factor, prow)
            if comb is not None:
                comb = _axpy(comb, -factor, pcomb)
        return comb if comb is not None else {}

    def reduced_rows(self) -> List[SparseRow]:
        """The stored rows in reduced echelon form, ordered by leading column."""
        columns = sorted(self._pivots)
        rows = {col: dict(self._pivots[col][0]) for col in columns}
        for col in reversed(columns):
            pivot = rows[col]
            for other in columns:
                if other == col:
                    break
                entry = rows[other].get(col)
                if entry is not None:
                    rows[other] = _axpy(rows[other], -entry, pivot)
        return [rows[col] for col in columns]


def _axpy(x: SparseRow, a: CycNum, y: SparseRow) -> SparseRow:
    """x + a*y with zero entries dropped."""
    out: SparseRow = dict(x)
    for k, v in y.items():
        s = out.get(k)
        s = v * a if s is None else s + v * a
        if s.is_zero():
            out.pop(k, None)
        else:
            out[k] = s
    return out
