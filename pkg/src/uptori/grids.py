"""Partial matrices and partial tori.

A :class:`PartialGrid` is one rectangular array of symbols with a mode flag:
``"matrix"`` windows stay inside the array, ``"torus"`` windows wrap in both
directions.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .errors import BadSymbol, OutOfBounds, ShapeTooLarge
from .ledger import (
    DIAMOND,
    CoverageLedger,
    Triviality,
    VerificationReport,
    diamond_counts,
    expand_into,
    report_from,
    scan_windows,
)
from .words import format_symbols, parse_symbols

MATRIX = "matrix"
TORUS = "torus"
MAX_PERMUTED_ALPHABET = 6


@dataclass(frozen=True)
class WindowShape:
    w: int
    l: int

    def __post_init__(self):
        if self.w < 1 or self.l < 1:
            raise ShapeTooLarge(f"window {self.w}x{self.l} must be at least 1x1")

    @classmethod
    def parse(cls, text: str) -> WindowShape:
        w, l = text.lower().split("x")
        return cls(int(w), int(l))

    @property
    def cells(self) -> int:
        return self.w * self.l

    def __str__(self) -> str:
        return f"{self.w}x{self.l}"


def _shape(shape) -> WindowShape:
    if isinstance(shape, WindowShape):
        return shape
    if isinstance(shape, str):
        return WindowShape.parse(shape)
    return WindowShape(*shape)


class PartialGrid:
    """Immutable ``R x C`` array over ``0..a-1`` plus :data:`DIAMOND`."""

    __slots__ = ("cells", "alphabet", "mode")

    def __init__(self, cells, alphabet: int | None = None, mode: str = MATRIX):
        if isinstance(cells, str):
            cells = [parse_symbols(line) for line in cells.strip().splitlines()]
        elif len(cells) and isinstance(cells[0], str):
            cells = [parse_symbols(line) for line in cells]
        arr = np.array(cells, dtype=np.int32)
        if arr.ndim != 2 or arr.size == 0:
            raise ShapeTooLarge("a grid needs at least one row and one column")
        if np.any(arr < DIAMOND):
            raise BadSymbol("negative letter")
        if alphabet is None:
            alphabet = max(2, int(arr.max()) + 1)
        if int(arr.max()) >= alphabet:
            raise BadSymbol(f"letter {int(arr.max())} outside alphabet of size {alphabet}")
        if mode not in (MATRIX, TORUS):
            raise ValueError(f"mode must be {MATRIX!r} or {TORUS!r}")
        arr.flags.writeable = False
        object.__setattr__(self, "cells", arr)
        object.__setattr__(self, "alphabet", alphabet)
        object.__setattr__(self, "mode", mode)

    def __setattr__(self, name, value):
        raise AttributeError("PartialGrid is immutable")

    @property
    def rows(self) -> int:
        return self.cells.shape[0]

    @property
    def cols(self) -> int:
        return self.cells.shape[1]

    @property
    def is_torus(self) -> bool:
        return self.mode == TORUS

    @property
    def diamonds(self) -> int:
        return int(np.count_nonzero(self.cells == DIAMOND))

    def with_mode(self, mode: str) -> PartialGrid:
        return PartialGrid(self.cells, self.alphabet, mode)

    def transpose(self) -> PartialGrid:
        return PartialGrid(self.cells.T, self.alphabet, self.mode)

    def key(self) -> tuple:
        return (self.rows, self.cols, tuple(self.cells.ravel().tolist()))

    def __getitem__(self, rc):
        r, c = rc
        if self.is_torus:
            r, c = r % self.rows, c % self.cols
        return int(self.cells[r, c])

    def __eq__(self, other):
        if not isinstance(other, PartialGrid):
            return NotImplemented
        return (
            self.mode == other.mode
            and self.alphabet == other.alphabet
            and self.cells.shape == other.cells.shape
            and bool(np.array_equal(self.cells, other.cells))
        )

    def __hash__(self):
        return hash((self.mode, self.alphabet, self.key()))

    def __str__(self) -> str:
        return "\n".join(format_symbols(row) for row in self.cells)

    def __repr__(self) -> str:
        return f"PartialGrid({self.rows}x{self.cols}, a={self.alphabet}, {self.mode})"

    def __lt__(self, other: PartialGrid) -> bool:
        return self.key() < other.key()


def subarray(g: PartialGrid, r: int, c: int, shape) -> PartialGrid:
    """The ``w x l`` window anchored at ``(r, c)``, as a matrix."""
    shape = _shape(shape)
    R, C = g.cells.shape
    if g.is_torus:
        rr = (r + np.arange(shape.w)) % R
        cc = (c + np.arange(shape.l)) % C
    else:
        if not (0 <= r <= R - shape.w and 0 <= c <= C - shape.l):
            raise OutOfBounds(f"{shape} window at ({r}, {c}) leaves a {R}x{C} matrix")
        rr = r + np.arange(shape.w)
        cc = c + np.arange(shape.l)
    return PartialGrid(g.cells[np.ix_(rr, cc)], g.alphabet, MATRIX)


def _scan(g: PartialGrid, shape: WindowShape):
    if not g.is_torus and (g.rows < shape.w or g.cols < shape.l):
        raise ShapeTooLarge(f"{shape} window does not fit a {g.rows}x{g.cols} matrix")
    return scan_windows(g.cells, g.alphabet, shape.w, shape.l, g.is_torus, g.is_torus)


def grid_coverage(g: PartialGrid, shape, dense: bool | None = None) -> CoverageLedger:
    """Multiset of total ``w x l`` matrices covered by ``g`` (row-major codes)."""
    shape = _shape(shape)
    base, mask = _scan(g, shape)
    ledger = CoverageLedger(g.alphabet, shape.cells, dense=dense)
    expand_into(ledger, base, mask)
    return ledger


def triviality(g: PartialGrid, shape) -> Triviality:
    shape = _shape(shape)
    d = g.diamonds
    if d == 0:
        return Triviality.NO_DIAMONDS
    if d == g.cells.size:
        return Triviality.ALL_DIAMONDS
    if shape.w == 1 or shape.l == 1:
        return Triviality.DEGENERATE_SHAPE
    return Triviality.NONTRIVIAL_PARTIAL


def _verify(g: PartialGrid, shape, dense) -> VerificationReport:
    shape = _shape(shape)
    base, mask = _scan(g, shape)
    ledger = CoverageLedger(g.alphabet, shape.cells, dense=dense)
    expand_into(ledger, base, mask)
    return report_from(ledger, mask, triviality(g, shape))


def verify_upmatrix(g: PartialGrid, shape, dense: bool | None = None) -> VerificationReport:
    if g.is_torus:
        raise ValueError("verify_upmatrix needs a grid in matrix mode")
    return _verify(g, shape, dense)


def verify_uptorus(g: PartialGrid, shape, dense: bool | None = None) -> VerificationReport:
    if not g.is_torus:
        raise ValueError("verify_uptorus needs a grid in torus mode")
    return _verify(g, shape, dense)


def window_diamond_counts(g: PartialGrid, shape) -> np.ndarray:
    """Diamond count of the window at every anchor."""
    _, mask = _scan(g, _shape(shape))
    return diamond_counts(mask)


def unroll_torus(t: PartialGrid, shape) -> PartialGrid:
    """Append the top ``w-1`` rows and left ``l-1`` columns; returns a matrix."""
    shape = _shape(shape)
    R, C = t.cells.shape
    rr = np.arange(R + shape.w - 1) % R
    cc = np.arange(C + shape.l - 1) % C
    return PartialGrid(t.cells[np.ix_(rr, cc)], t.alphabet, MATRIX)


def gluability(m: PartialGrid, shape) -> tuple[bool, bool]:
    """``(rows_glue, cols_glue)``: whether the matrix repeats its border rows/columns.

    ``rows_glue`` means the top ``w-1`` rows equal the bottom ``w-1`` rows, so
    the matrix closes up vertically into a cylinder.
    """
    shape = _shape(shape)
    R, C = m.cells.shape
    kr, kc = shape.w - 1, shape.l - 1
    rows_ok = R > kr and bool(np.array_equal(m.cells[:kr], m.cells[R - kr :]))
    cols_ok = C > kc and bool(np.array_equal(m.cells[:, :kc], m.cells[:, C - kc :]))
    return rows_ok, cols_ok


def glue_matrix(m: PartialGrid, shape) -> PartialGrid | None:
    """Inverse of :func:`unroll_torus`, or ``None`` when the borders differ."""
    shape = _shape(shape)
    rows_ok, cols_ok = gluability(m, shape)
    if not (rows_ok and cols_ok):
        return None
    R, C = m.cells.shape
    return PartialGrid(m.cells[: R - shape.w + 1, : C - shape.l + 1], m.alphabet, TORUS)


# -- symmetries -------------------------------------------------------------


@dataclass(frozen=True)
class GridSymmetry:
    """One generator of the equivalence group.

    ``op`` is one of ``"hreflect"`` (mirror columns), ``"vreflect"`` (mirror
    rows), ``"transpose"``, ``"rowrot"`` / ``"colrot"`` (cyclic shift by
    ``k``) or ``"permute"`` (relabel letters by ``perm``).
    """

    op: str
    k: int = 0
    perm: tuple[int, ...] = ()

    def apply(self, g: PartialGrid) -> PartialGrid:
        c = g.cells
        if self.op == "hreflect":
            out = c[:, ::-1]
        elif self.op == "vreflect":
            out = c[::-1, :]
        elif self.op == "transpose":
            out = c.T
        elif self.op == "rowrot":
            out = np.roll(c, -self.k, axis=0)
        elif self.op == "colrot":
            out = np.roll(c, -self.k, axis=1)
        elif self.op == "permute":
            if sorted(self.perm) != list(range(g.alphabet)):
                raise ValueError(f"{self.perm} is not a permutation of 0..{g.alphabet - 1}")
            table = np.array(self.perm + (DIAMOND,), dtype=np.int32)
            out = table[c]
        else:
            raise ValueError(f"unknown symmetry {self.op!r}")
        return PartialGrid(out, g.alphabet, g.mode)


def apply_symmetries(g: PartialGrid, ops: Iterable[GridSymmetry]) -> PartialGrid:
    for op in ops:
        g = op.apply(g)
    return g


def _orbit_min(cells: np.ndarray, alphabet: int, rotations: bool) -> np.ndarray:
    perms = _permutation_tables(alphabet)
    best, best_key = None, None
    for flipped in (cells, cells[::-1], cells[:, ::-1], cells[::-1, ::-1]):
        R, C = flipped.shape
        shifts = itertools.product(range(R), range(C)) if rotations else [(0, 0)]
        for dr, dc in shifts:
            rolled = np.roll(flipped, (-dr, -dc), axis=(0, 1))
            for table in perms:
                cand = table[rolled]
                key = cand.ravel().tolist()
                if best_key is None or key < best_key:
                    best, best_key = cand, key
    return best


def _permutation_tables(alphabet: int) -> list[np.ndarray]:
    if alphabet > MAX_PERMUTED_ALPHABET:
        raise ShapeTooLarge(
            f"alphabet permutations are enumerated only for a <= {MAX_PERMUTED_ALPHABET}"
        )
    # index -1 (the diamond) reads the last entry
    return [
        np.array(p + (DIAMOND,), dtype=np.int32)
        for p in itertools.permutations(range(alphabet))
    ]


def canonical_form(g: PartialGrid, shape=None, transpose: bool | None = None) -> PartialGrid:
    """Least representative of ``g`` under the equivalence group.

    The group holds both reflections and alphabet permutations, plus row and
    column rotations for tori.  Transposition joins when ``transpose`` is
    true, or by default when both the grid and the window are square.  With
    transposition of a non-square grid the comparison key is
    ``(rows, cols, cells)``, so the wider orientation wins.
    """
    if transpose is None:
        square_window = shape is None or _shape(shape).w == _shape(shape).l
        transpose = g.rows == g.cols and square_window
    rotations = g.is_torus
    cands = [_orbit_min(g.cells, g.alphabet, rotations)]
    if transpose:
        cands.append(_orbit_min(g.cells.T, g.alphabet, rotations))
    best = min(cands, key=lambda c: (c.shape, c.ravel().tolist()))
    return PartialGrid(best, g.alphabet, g.mode)
