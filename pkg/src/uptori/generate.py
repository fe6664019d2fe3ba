"""Deterministic generators: De Bruijn cycles, alternating De Bruijn cycles,
and the ``(a, 1, k)``-perfect necklaces used for lifting."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import TooLarge
from .words import CyclicPartialWord, least_rotation


def _euler_circuit(start: int, degree: int, succ: Callable[[int, int], int], n_vertices: int) -> list[int]:
    """Edge labels of an Eulerian circuit, by Hierholzer's algorithm.

    Every vertex has out-degree ``degree``; edge ``e`` of ``v`` leads to
    ``succ(v, e)``.  Edges are taken smallest label first.
    """
    nxt = [0] * n_vertices
    stack = [(start, -1)]
    circuit = []
    while stack:
        v, label = stack[-1]
        e = nxt[v]
        if e < degree:
            nxt[v] = e + 1
            stack.append((succ(v, e), e))
        else:
            stack.pop()
            if label >= 0:
                circuit.append(label)
    circuit.reverse()
    return circuit


def debruijn_cycle(a: int, n: int) -> CyclicPartialWord:
    """A De Bruijn cycle for ``{0..a-1}^n``, rotated to its least representation."""
    if a < 1 or n < 1:
        raise ValueError("need a >= 1 and n >= 1")
    if a == 1:
        return CyclicPartialWord([0], 1)
    nv = a ** (n - 1)
    labels = _euler_circuit(0, a, lambda v, d: (v * a + d) % nv, nv)
    k = least_rotation(labels)
    return CyclicPartialWord(labels[k:] + labels[:k], a)


def count_debruijn_bruteforce(a: int, n: int) -> int:
    """Number of De Bruijn cycles for ``{0..a-1}^n``, by exhaustive backtracking.

    Each cycle class has exactly one rotation that starts with ``0^n``; the
    search extends that prefix one letter at a time, never repeating a
    window, and closes the cycle through the wrap-around windows.
    """
    total = a**n
    if total > 16:
        raise TooLarge(f"{a}^{n} = {total} exceeds the desk-scale limit of 16")
    if a == 1:
        return 1
    seq = [0] * n
    seen = {tuple(seq)}

    def closes() -> bool:
        wrap = seq[-(n - 1):] + seq[: n - 1] if n > 1 else []
        extra = {tuple(wrap[i : i + n]) for i in range(len(wrap) - n + 1)}
        return len(extra) == n - 1 and not (extra & seen)

    def extend() -> int:
        if len(seq) == total:
            return int(closes())
        count = 0
        for d in range(a):
            window = tuple(seq[len(seq) - n + 1 :] + [d]) if n > 1 else (d,)
            if window in seen:
                continue
            seen.add(window)
            seq.append(d)
            count += extend()
            seq.pop()
            seen.discard(window)
        return count

    return extend()


@dataclass(frozen=True)
class AlternatingCycle:
    """Cyclic sequence ``A0 B0 A1 B1 ...`` with A-items at even positions.

    Contains every alternating word of length ``order = 2n + 1`` exactly once,
    starting at an A-position.
    """

    a_items: np.ndarray
    b_items: np.ndarray
    size_a: int
    size_b: int
    n: int

    @property
    def order(self) -> int:
        return 2 * self.n + 1

    def __len__(self) -> int:
        return 2 * len(self.a_items)

    def items(self) -> np.ndarray:
        out = np.empty(len(self), dtype=np.int64)
        out[0::2] = self.a_items
        out[1::2] = self.b_items
        return out


@dataclass(frozen=True)
class AlternatingWord:
    """Linear sequence ``f_0 r_0 f_1 ... r_{v-1} f_v``."""

    a_items: np.ndarray
    b_items: np.ndarray

    @property
    def v(self) -> int:
        return len(self.b_items)

    def __len__(self) -> int:
        return len(self.a_items) + len(self.b_items)

    def items(self) -> np.ndarray:
        out = np.empty(len(self), dtype=np.int64)
        out[0::2] = self.a_items
        out[1::2] = self.b_items
        return out


def alternating_debruijn(size_a: int, size_b: int, n: int) -> AlternatingCycle:
    """Alternating De Bruijn cycle of order ``2n + 1`` as an Eulerian circuit.

    Vertices are the alternating words of length ``2n - 1``; the edge
    labelled ``(b, a)`` appends ``b`` then ``a`` and drops the first two
    items.  The circuit starts at the all-zero vertex.
    """
    if size_a < 1 or size_b < 1 or n < 1:
        raise ValueError("need positive alphabet sizes and n >= 1")
    nv = size_a**n * size_b ** (n - 1)
    # number of values the vertex takes once its leading (a, b) pair is dropped
    tail = nv // (size_a * size_b) if n > 1 else 1
    degree = size_a * size_b

    def succ(v: int, e: int) -> int:
        b, a = divmod(e, size_a)
        if n == 1:
            return a
        return ((v % tail) * size_b + b) * size_a + a

    labels = np.array(_euler_circuit(0, degree, succ, nv), dtype=np.int64)
    b_items, a_next = np.divmod(labels, size_a)
    a_items = np.concatenate(([0], a_next[:-1]))
    return AlternatingCycle(a_items, b_items, size_a, size_b, n)


def unroll_alternating(c: AlternatingCycle) -> AlternatingWord:
    """Append a copy of the first A-item, giving ``f_0 r_0 ... r_{v-1} f_v``."""
    return AlternatingWord(np.append(c.a_items, c.a_items[0]), c.b_items.copy())


def alternating_word_codes(c: AlternatingCycle) -> np.ndarray:
    """Mixed-radix code of the order-``2n+1`` word at every A-position."""
    codes = np.zeros(len(c.a_items), dtype=np.int64)
    for j in range(c.n + 1):
        codes = codes * c.size_a + np.roll(c.a_items, -j)
        if j < c.n:
            codes = codes * c.size_b + np.roll(c.b_items, -j)
    return codes


def is_alternating_debruijn(c: AlternatingCycle) -> bool:
    """Whether every alternating word of the cycle's order occurs exactly once."""
    expected = c.size_a ** (c.n + 1) * c.size_b**c.n
    if len(c.a_items) != expected or len(c.b_items) != expected:
        return False
    counts = np.bincount(alternating_word_codes(c), minlength=expected)
    return bool(np.all(counts == 1))


def perfect_necklace(a: int, k: int) -> CyclicPartialWord:
    """The ``(a, 1, k)``-perfect necklace ``0^k 1^k ... (a-1)^k``."""
    if a < 1 or k < 1:
        raise ValueError("need a >= 1 and k >= 1")
    return CyclicPartialWord(np.repeat(np.arange(a), k), a)
