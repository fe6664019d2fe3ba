"""Exact coverage counting over base-``a`` codes.

Every verifier in the package reduces to the same computation: slide a
``w x l`` window over a 2-D array of symbols (a word is a ``1 x n`` window
over a one-row array), expand each window's diamonds into every letter
assignment, and count how often each total pattern appears.  Patterns are
keyed by their base-``a`` value read row-major, most significant cell first.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

import numpy as np

from .errors import BadWindowLength, ShapeTooLarge

DIAMOND = -1

DENSE_LIMIT = 1 << 26
SATURATION = (1 << 16) - 1
REPORT_CAP = 32

# Codes are buffered and flushed into the ledger in batches of this size.
_FLUSH = 1 << 24


class Triviality(enum.Enum):
    NONTRIVIAL_PARTIAL = "NontrivialPartial"
    NO_DIAMONDS = "NoDiamonds"
    ALL_DIAMONDS = "AllDiamonds"
    DEGENERATE_SHAPE = "DegenerateShape"


class CoverageLedger:
    """Multiset of covered total patterns, keyed by integer code.

    Counts are stored densely (``uint16``, saturating at 65535) while the
    code space has at most ``2**26`` entries, and in a dict otherwise.
    ``mass`` is the exact, unsaturated number of (window, assignment) pairs.
    """

    def __init__(self, alphabet: int, cells: int, dense: bool | None = None):
        self.alphabet = alphabet
        self.cells = cells
        self.size = alphabet**cells
        if dense is None:
            dense = self.size <= DENSE_LIMIT
        self.counts: np.ndarray | None = (
            np.zeros(self.size, dtype=np.uint16) if dense else None
        )
        self.table: dict[int, int] | None = None if dense else {}
        self.mass = 0

    @property
    def word_length(self) -> int:
        return self.cells

    @property
    def dense(self) -> bool:
        return self.counts is not None

    def add_codes(self, codes: np.ndarray) -> None:
        """Increment the count of every code in ``codes`` (repeats allowed)."""
        if len(codes) == 0:
            return
        self.mass += len(codes)
        if self.counts is not None:
            if len(codes) * 8 >= self.size:
                inc = np.bincount(codes, minlength=self.size)
                total = self.counts + inc
                np.minimum(total, SATURATION, out=total)
                self.counts[:] = total
            else:
                uniq, inc = np.unique(codes, return_counts=True)
                total = self.counts[uniq].astype(np.int64) + inc
                self.counts[uniq] = np.minimum(total, SATURATION)
        else:
            uniq, inc = np.unique(codes, return_counts=True)
            table = self.table
            for code, k in zip(uniq.tolist(), inc.tolist()):
                table[code] = min(table.get(code, 0) + k, SATURATION)

    def __getitem__(self, code: int) -> int:
        if self.counts is not None:
            return int(self.counts[code])
        return self.table.get(code, 0)

    def total(self) -> int:
        """Sum of stored (saturated) counts."""
        if self.counts is not None:
            return int(self.counts.sum(dtype=np.int64))
        return sum(self.table.values())

    def covered(self) -> int:
        """Number of distinct codes with a nonzero count."""
        if self.counts is not None:
            return int(np.count_nonzero(self.counts))
        return len(self.table)

    def nonzero_codes(self) -> np.ndarray:
        if self.counts is not None:
            return np.flatnonzero(self.counts)
        return np.array(sorted(self.table), dtype=np.int64)

    def is_exact(self) -> bool:
        """True iff every code of the space has count exactly one."""
        if self.counts is not None:
            return bool(np.all(self.counts == 1))
        return len(self.table) == self.size and all(
            v == 1 for v in self.table.values()
        )

    def missing(self, limit: int = REPORT_CAP) -> tuple[list[int], int]:
        """Up to ``limit`` uncovered codes, and the total number uncovered."""
        if self.counts is not None:
            idx = np.flatnonzero(self.counts == 0)
            return idx[:limit].tolist(), len(idx)
        total = self.size - len(self.table)
        found = []
        code = 0
        while len(found) < min(limit, total):
            if code not in self.table:
                found.append(code)
            code += 1
        return found, total

    def duplicated(self, limit: int = REPORT_CAP) -> tuple[list[tuple[int, int]], int]:
        """Up to ``limit`` ``(code, count)`` pairs with count > 1, and their total."""
        if self.counts is not None:
            idx = np.flatnonzero(self.counts > 1)
            pairs = [(int(c), int(self.counts[c])) for c in idx[:limit]]
            return pairs, len(idx)
        dups = sorted((c, k) for c, k in self.table.items() if k > 1)
        return dups[:limit], len(dups)

    def __add__(self, other: CoverageLedger) -> CoverageLedger:
        if (self.alphabet, self.cells) != (other.alphabet, other.cells):
            raise ValueError("ledgers over different code spaces")
        out = CoverageLedger(self.alphabet, self.cells, dense=self.dense)
        out.mass = self.mass + other.mass
        if out.counts is not None:
            total = self.counts.astype(np.int64) + _as_dense(other)
            out.counts[:] = np.minimum(total, SATURATION)
        else:
            out.table = dict(self.table)
            for code in other.nonzero_codes().tolist():
                out.table[code] = min(out.table.get(code, 0) + other[code], SATURATION)
        return out

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CoverageLedger):
            return NotImplemented
        if (self.alphabet, self.cells) != (other.alphabet, other.cells):
            return False
        if self.dense and other.dense:
            return bool(np.array_equal(self.counts, other.counts))
        return _as_table(self) == _as_table(other)

    __hash__ = None

    def __repr__(self) -> str:
        kind = "dense" if self.dense else "sparse"
        return (
            f"CoverageLedger(a={self.alphabet}, cells={self.cells}, {kind}, "
            f"covered={self.covered()}/{self.size}, mass={self.mass})"
        )


def _as_dense(ledger: CoverageLedger) -> np.ndarray:
    if ledger.counts is not None:
        return ledger.counts.astype(np.int64)
    out = np.zeros(ledger.size, dtype=np.int64)
    for code, k in ledger.table.items():
        out[code] = k
    return out


def _as_table(ledger: CoverageLedger) -> dict[int, int]:
    if ledger.table is not None:
        return dict(ledger.table)
    idx = np.flatnonzero(ledger.counts)
    return dict(zip(idx.tolist(), ledger.counts[idx].tolist()))


@dataclass
class VerificationReport:
    """Outcome of a coverage check.

    ``missing`` and ``duplicated`` are truncated to 32 entries; the
    ``*_total`` fields keep the full counts.
    """

    valid: bool
    missing: list[int] = field(default_factory=list)
    duplicated: list[tuple[int, int]] = field(default_factory=list)
    diamondicity: int | None = None
    triviality: Triviality = Triviality.NONTRIVIAL_PARTIAL
    missing_total: int = 0
    duplicated_total: int = 0
    windows: int = 0
    mass: int = 0

    def to_dict(self) -> dict:
        out = dict(self.__dict__)
        out["triviality"] = self.triviality.value
        out["duplicated"] = [list(p) for p in self.duplicated]
        return out


def check_cell_budget(alphabet: int, cells: int) -> None:
    if cells < 1:
        raise BadWindowLength(f"window must have at least one cell, got {cells}")
    if alphabet**cells > 1 << 62:
        raise ShapeTooLarge(f"{alphabet}^{cells} codes do not fit in int64")


def place_weights(alphabet: int, cells: int) -> np.ndarray:
    """Base-``a`` place value of each window cell, most significant first."""
    return np.array([alphabet ** (cells - 1 - j) for j in range(cells)], dtype=np.int64)


def scan_windows(
    cells: np.ndarray,
    alphabet: int,
    w: int,
    l: int,
    wrap_rows: bool,
    wrap_cols: bool,
) -> tuple[np.ndarray, np.ndarray]:
    """Base code (diamonds read as 0) and diamond bitmask of every window.

    Anchors run over all rows/columns on a wrapped axis and over the
    ``R - w + 1`` / ``C - l + 1`` positions of an unwrapped one.  Both
    results have shape ``(anchor_rows, anchor_cols)``; bit ``dy*l + dx`` of
    the mask is set when that window cell holds a diamond.
    """
    R, C = cells.shape
    check_cell_budget(alphabet, w * l)
    nr = R if wrap_rows else R - w + 1
    nc = C if wrap_cols else C - l + 1
    if nr < 1 or nc < 1:
        raise ShapeTooLarge(f"{w}x{l} window does not fit a {R}x{C} grid")
    rows = np.arange(nr)
    cols = np.arange(nc)
    weights = place_weights(alphabet, w * l)
    base = np.zeros((nr, nc), dtype=np.int64)
    mask = np.zeros((nr, nc), dtype=np.int64)
    is_diamond = cells < 0
    letters = np.where(is_diamond, 0, cells).astype(np.int64)
    for dy in range(w):
        rr = (rows + dy) % R
        for dx in range(l):
            cc = (cols + dx) % C
            j = dy * l + dx
            base += letters[np.ix_(rr, cc)] * weights[j]
            mask |= is_diamond[np.ix_(rr, cc)].astype(np.int64) << j
    return base, mask


def expand_into(
    ledger: CoverageLedger,
    base: np.ndarray,
    mask: np.ndarray,
) -> None:
    """Add every diamond assignment of every window to ``ledger``."""
    a = ledger.alphabet
    weights = place_weights(a, ledger.cells)
    base = base.ravel()
    mask = mask.ravel()
    buffer: list[np.ndarray] = []
    buffered = 0
    masks, inverse = np.unique(mask, return_inverse=True)
    order = np.argsort(inverse, kind="stable")
    bounds = np.searchsorted(inverse[order], np.arange(len(masks) + 1))
    for g, m in enumerate(masks.tolist()):
        members = base[order[bounds[g] : bounds[g + 1]]]
        offsets = np.zeros(1, dtype=np.int64)
        bit = 0
        while m >> bit:
            if (m >> bit) & 1:
                offsets = (offsets[:, None] + np.arange(a, dtype=np.int64) * weights[bit]).ravel()
            bit += 1
        step = max(1, _FLUSH // len(offsets))
        for start in range(0, len(members), step):
            chunk = (members[start : start + step, None] + offsets[None, :]).ravel()
            buffer.append(chunk)
            buffered += len(chunk)
            if buffered >= _FLUSH:
                ledger.add_codes(np.concatenate(buffer))
                buffer, buffered = [], 0
    if buffer:
        ledger.add_codes(np.concatenate(buffer))


def diamond_counts(mask: np.ndarray) -> np.ndarray:
    return np.bitwise_count(mask.astype(np.uint64)).astype(np.int64)


def common_value(counts: np.ndarray) -> int | None:
    """The shared value of ``counts`` if they are all equal, else ``None``."""
    if counts.size == 0:
        return None
    first = int(counts.flat[0])
    return first if bool(np.all(counts == first)) else None


def report_from(
    ledger: CoverageLedger,
    mask: np.ndarray,
    triviality: Triviality,
) -> VerificationReport:
    missing, missing_total = ledger.missing()
    duplicated, duplicated_total = ledger.duplicated()
    return VerificationReport(
        valid=missing_total == 0 and duplicated_total == 0,
        missing=missing,
        duplicated=duplicated,
        diamondicity=common_value(diamond_counts(mask)),
        triviality=triviality,
        missing_total=missing_total,
        duplicated_total=duplicated_total,
        windows=int(mask.size),
        mass=ledger.mass,
    )


def decode(code: int, alphabet: int, cells: int) -> list[int]:
    """Digits of ``code`` in base ``alphabet``, most significant first."""
    digits = []
    for _ in range(cells):
        code, d = divmod(code, alphabet)
        digits.append(d)
    return digits[::-1]


def encode(digits, alphabet: int) -> int:
    code = 0
    for d in digits:
        code = code * alphabet + int(d)
    return code
