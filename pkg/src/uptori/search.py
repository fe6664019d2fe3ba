"""Exhaustive backtracking search for upmatrices and uptori of fixed size.

Cells are assigned in row-major order from ``{◊, 0, .., a-1}``.  Each
window is committed to a running ledger as soon as its last cell (in
assignment order) is set; a branch dies the moment any pattern would be
covered twice.  Survivors are re-verified through :mod:`uptori.grids`
before they enter the catalog.
"""

from __future__ import annotations

import json
import sys
import time
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .errors import SpecTooLarge
from .grids import (
    MATRIX,
    TORUS,
    PartialGrid,
    canonical_form,
    triviality,
    verify_upmatrix,
    verify_uptorus,
)
from .ledger import DENSE_LIMIT, DIAMOND, Triviality
from .words import format_symbols


@dataclass(frozen=True)
class SearchSpec:
    alphabet: int
    window: tuple[int, int]
    dims: tuple[int, int]
    mode: str = MATRIX
    dedup: bool = True
    limit: int | None = None

    def __post_init__(self):
        R, C = self.dims
        w, l = self.window
        if R < 1 or C < 1 or w < 1 or l < 1:
            raise SpecTooLarge("dimensions and window must be positive")
        if self.mode not in (MATRIX, TORUS):
            raise ValueError(f"mode must be {MATRIX!r} or {TORUS!r}")
        if self.mode == MATRIX and (R < w or C < l):
            raise SpecTooLarge(f"a {w}x{l} window does not fit a {R}x{C} matrix")
        if self.alphabet ** (w * l) > DENSE_LIMIT:
            raise SpecTooLarge(f"{self.alphabet}^{w * l} patterns exceed the ledger bound")


@dataclass
class Catalog:
    spec: SearchSpec
    solutions: list[PartialGrid] = field(default_factory=list)
    raw_count: int = 0
    canonical_count: int = 0
    nodes_explored: int = 0
    seconds: float = 0.0
    complete: bool = True

    def to_dict(self) -> dict:
        s = self.spec
        return {
            "alphabet": s.alphabet,
            "window": list(s.window),
            "dims": list(s.dims),
            "mode": s.mode,
            "dedup": s.dedup,
            "raw_count": self.raw_count,
            "canonical_count": self.canonical_count,
            "nodes_explored": self.nodes_explored,
            "complete": self.complete,
            "solutions": [[format_symbols(row) for row in g.cells] for g in self.solutions],
        }

    def to_json(self, **kwargs) -> str:
        return json.dumps(self.to_dict(), **kwargs)


def _window_cells(spec: SearchSpec) -> list[list[int]]:
    R, C = spec.dims
    w, l = spec.window
    torus = spec.mode == TORUS
    nr = R if torus else R - w + 1
    nc = C if torus else C - l + 1
    out = []
    for r in range(nr):
        for c in range(nc):
            out.append([((r + dy) % R) * C + (c + dx) % C for dy in range(w) for dx in range(l)])
    return out


class _Searcher:
    def __init__(self, spec: SearchSpec, prune: bool, capacity: bool, progress):
        self.spec = spec
        self.a = spec.alphabet
        R, C = spec.dims
        self.n = R * C
        w, l = spec.window
        self.target = self.a ** (w * l)
        self.weights = [self.a ** (w * l - 1 - j) for j in range(w * l)]
        self.windows = _window_cells(spec)
        # windows whose last cell in assignment order is k
        self.completing = [[] for _ in range(self.n)]
        for i, cells in enumerate(self.windows):
            self.completing[max(cells)].append(i)
        self.containing = [[] for _ in range(self.n)]
        for i, cells in enumerate(self.windows):
            for k in set(cells):
                self.containing[k].append(i)
        # windows still uncommitted once cell k is set
        self.pending = [[i for i, cells in enumerate(self.windows) if max(cells) > k]
                        for k in range(self.n)]
        self.prune = prune
        self.capacity = capacity
        self.progress = progress
        self.vals = [0] * self.n
        self.counts = bytearray(self.target) if prune else [0] * self.target
        self.mass = 0
        self.win_diamonds = [0] * len(self.windows)
        self.win_unset = [len(set(c)) for c in self.windows]
        self.nodes = 0
        self.found: list[list[int]] = []
        self.limit = spec.limit
        self._last_report = time.monotonic()

    def codes(self, win: int) -> list[int]:
        codes = [0]
        a = self.a
        vals = self.vals
        for cell, wt in zip(self.windows[win], self.weights):
            v = vals[cell]
            if v == DIAMOND:
                codes = [c + d * wt for c in codes for d in range(a)]
            else:
                vw = v * wt
                codes = [c + vw for c in codes]
        return codes

    def commit(self, k: int) -> list[int] | None:
        """Add the windows completed at cell ``k``; ``None`` on a double cover."""
        added: list[int] = []
        counts = self.counts
        for win in self.completing[k]:
            for code in self.codes(win):
                if self.prune and counts[code]:
                    for c in added:
                        counts[c] -= 1
                    return None
                counts[code] += 1
                added.append(code)
        self.mass += len(added)
        return added

    def rollback(self, added: list[int]) -> None:
        counts = self.counts
        for c in added:
            counts[c] -= 1
        self.mass -= len(added)

    def capacity_ok(self, k: int) -> bool:
        """Bound the coverage still reachable by windows not yet committed."""
        a = self.a
        low = high = self.mass
        for i in self.pending[k]:
            d = self.win_diamonds[i]
            low += a**d
            high += a ** (d + self.win_unset[i])
        return low <= self.target <= high

    def run(self, prefix: list[int] = ()) -> None:
        for k, v in enumerate(prefix):
            if not self.assign(k, v):
                return
        self.descend(len(prefix))

    def assign(self, k: int, v: int) -> list[int] | None:
        self.vals[k] = v
        for i in self.containing[k]:
            self.win_unset[i] -= 1
            if v == DIAMOND:
                self.win_diamonds[i] += 1
        added = self.commit(k)
        if added is None or (self.capacity and not self.capacity_ok(k)):
            if added is not None:
                self.rollback(added)
            self.unassign(k, v)
            return None
        return added

    def unassign(self, k: int, v: int) -> None:
        for i in self.containing[k]:
            self.win_unset[i] += 1
            if v == DIAMOND:
                self.win_diamonds[i] -= 1

    def descend(self, k: int) -> bool:
        """Returns ``False`` once the solution limit is hit."""
        self.nodes += 1
        if self.progress and self.nodes % 65536 == 0:
            self.report()
        if k == self.n:
            if self.mass == self.target and all(c == 1 for c in self.counts):
                self.found.append(list(self.vals))
                if self.limit is not None and len(self.found) >= self.limit:
                    return False
            return True
        for v in (DIAMOND, *range(self.a)):
            added = self.assign(k, v)
            if added is None:
                continue
            go_on = self.descend(k + 1)
            self.rollback(added)
            self.unassign(k, v)
            if not go_on:
                return False
        return True

    def report(self) -> None:
        now = time.monotonic()
        if now - self._last_report >= 1.0:
            self._last_report = now
            self.progress(self.nodes, len(self.found))


def _stderr_progress(start: float):
    def report(nodes: int, found: int) -> None:
        rate = nodes / max(time.monotonic() - start, 1e-9)
        print(f"\r{nodes} nodes  {rate:,.0f}/s  {found} solutions", end="", file=sys.stderr)

    return report


def search(
    spec: SearchSpec,
    *,
    prune: bool = True,
    capacity: bool = False,
    progress: bool | Callable[[int, int], None] = False,
    nontrivial: bool = False,
) -> Catalog:
    """Depth-first search over every assignment of the grid's cells.

    ``prune=False`` is a debugging mode that only checks full assignments.
    ``capacity=True`` adds the coverage-bound prune.
    """
    start = time.monotonic()
    bar = progress is True
    if bar:
        progress = _stderr_progress(start)
    # Wide grids are searched transposed so windows start completing early.
    flip = spec.dims[0] < spec.dims[1]
    work = _transposed(spec) if flip else spec
    s = _Searcher(work, prune, capacity, progress or None)
    s.descend(0)
    if progress:
        progress(s.nodes, len(s.found))
    if bar:
        print(file=sys.stderr)
    found = s.found
    if flip:
        R, C = spec.dims
        found = [np.array(v).reshape(C, R).T.ravel().tolist() for v in found]
    return _catalog(spec, found, s.nodes, time.monotonic() - start, nontrivial,
                    complete=spec.limit is None or len(s.found) < spec.limit)


def _transposed(spec: SearchSpec) -> SearchSpec:
    return SearchSpec(spec.alphabet, spec.window[::-1], spec.dims[::-1], spec.mode,
                      spec.dedup, spec.limit)


def _catalog(spec, found, nodes, seconds, nontrivial, complete=True) -> Catalog:
    R, C = spec.dims
    verify = verify_uptorus if spec.mode == TORUS else verify_upmatrix
    grids = []
    for vals in found:
        g = PartialGrid(np.array(vals).reshape(R, C), spec.alphabet, spec.mode)
        if not verify(g, spec.window).valid:
            raise AssertionError(f"search produced an invalid grid:\n{g}")
        if nontrivial and triviality(g, spec.window) != Triviality.NONTRIVIAL_PARTIAL:
            continue
        grids.append(g)
    cat = Catalog(spec, raw_count=len(grids), nodes_explored=nodes, seconds=seconds,
                  complete=complete)
    if spec.dedup and spec.alphabet <= 6:
        canon = {canonical_form(g, spec.window): None for g in grids}
        cat.solutions = sorted(canon)
        cat.canonical_count = len(canon)
    else:
        cat.solutions = sorted(grids)
        cat.canonical_count = len(
            {canonical_form(g, spec.window) for g in grids}
        ) if spec.alphabet <= 6 else len(grids)
    return cat


def search_nontrivial(spec: SearchSpec, **kwargs) -> Catalog:
    """:func:`search`, keeping only nontrivial solutions."""
    return search(spec, nontrivial=True, **kwargs)


def brute_force_count(spec: SearchSpec) -> int:
    """Count solutions by verifying every one of the ``(a+1)^(R*C)`` grids."""
    import itertools

    R, C = spec.dims
    verify = verify_uptorus if spec.mode == TORUS else verify_upmatrix
    count = 0
    for cells in itertools.product(range(-1, spec.alphabet), repeat=R * C):
        g = PartialGrid(np.array(cells).reshape(R, C), spec.alphabet, spec.mode)
        if verify(g, spec.window).valid:
            count += 1
    return count
