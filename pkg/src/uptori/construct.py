"""Constructions of upmatrices and uptori from one-dimensional objects.

* :func:`mu` stacks diamond rows under an upword.
* :func:`build_m_us` stacks rotations of an upcycle ``u`` whose relative
  rotations follow a De Bruijn cycle ``s``; :func:`locate` finds where a
  total matrix is covered without scanning.
* :func:`build_m_W` does the same with rows drawn from an upfamily, driven by
  an unrolled alternating De Bruijn cycle.
* :func:`lift` resolves the diamonds of a diamondicity-1 cyclic word, and
  :func:`build_no_diamondicity` uses lifts to build an uptorus whose windows
  hold different numbers of diamonds.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import generate
from .errors import (
    BadP,
    CertificationError,
    ConditionsNotMet,
    DiamondicityNotOne,
    DoubleCoverage,
    LemmaViolation,
    NotAnUpword,
    NotTotal,
    RotationOutOfRange,
    ShapeMismatch,
    UnequalFamilyLengths,
)
from .families import Family, verify_family
from .generate import AlternatingWord
from .grids import MATRIX, TORUS, PartialGrid, verify_uptorus
from .ledger import DIAMOND, VerificationReport
from .words import (
    CyclicPartialWord,
    PartialWord,
    coverage_ledger,
    diamondicity_of,
    verify_upcycle,
    verify_upword,
)


@dataclass(frozen=True)
class RotationSequence:
    """Relative row rotations ``s`` over ``0..L-1``."""

    values: tuple[int, ...]
    length: int
    cyclic: bool = True

    def __post_init__(self):
        bad = [v for v in self.values if not 0 <= v < self.length]
        if bad:
            raise RotationOutOfRange(f"rotation {bad[0]} outside 0..{self.length - 1}")

    @property
    def total(self) -> int:
        """Sum of all rotations, reduced modulo ``length``."""
        return sum(self.values) % self.length

    def prefix_sums(self) -> np.ndarray:
        """Absolute rotation of each row: ``sum(s[:n+1]) mod L``."""
        return np.cumsum(np.asarray(self.values, dtype=np.int64)) % self.length


def _rotations(s, L: int) -> RotationSequence:
    if isinstance(s, RotationSequence):
        if s.length != L:
            raise RotationOutOfRange(f"sequence rotates length {s.length}, word has {L}")
        return s
    if isinstance(s, CyclicPartialWord):
        s = s.symbols.tolist()
    return RotationSequence(tuple(int(v) for v in s), L)


def _rows_from(word: np.ndarray, shifts: np.ndarray) -> np.ndarray:
    L = len(word)
    return word[(shifts[:, None] + np.arange(L)[None, :]) % L]


# -- upmatrices from upwords ------------------------------------------------


def mu(w: PartialWord, p: int, n: int) -> PartialGrid:
    """``p x |w|`` matrix: ``w`` on top, diamonds below.  ``w`` must be an upword for ``A^n``."""
    if p < 2:
        raise BadP(f"p must be at least 2, got {p}")
    if not isinstance(w, PartialWord):
        w = PartialWord(w.symbols, w.alphabet)
    if not verify_upword(w, n).valid:
        raise NotAnUpword(f"{w} is not an upword for words of length {n}")
    cells = np.full((p, len(w)), DIAMOND, dtype=np.int32)
    cells[0] = w.symbols
    return PartialGrid(cells, w.alphabet, MATRIX)


# -- uptori from upcycles ---------------------------------------------------


def build_m_us(u: CyclicPartialWord, s) -> PartialGrid:
    """Torus whose row ``n`` is ``u`` rotated by ``s_0 + ... + s_n``."""
    s = _rotations(s, len(u))
    return PartialGrid(_rows_from(u.symbols, s.prefix_sums()), u.alphabet, TORUS)


def certify_m_us(u: CyclicPartialWord, s, x: int, y: int) -> VerificationReport:
    """Re-verify the inputs, build ``m(u, s)`` and verify it for ``(y+1) x x`` windows."""
    L = len(u)
    s = _rotations(s, L)
    urep = verify_upcycle(u, x)
    if not urep.valid:
        raise CertificationError(f"{u} is not an upcycle for words of length {x}")
    if y < 2:
        raise CertificationError(f"y must be at least 2, got {y}")
    s_word = CyclicPartialWord(list(s.values), L)
    if len(s_word) != L**y or not verify_upcycle(s_word, y).valid:
        raise CertificationError(f"s is not a De Bruijn cycle for {{0..{L - 1}}}^{y}")
    grid = build_m_us(u, s)
    report = verify_uptorus(grid, (y + 1, x))
    if not report.valid:
        raise CertificationError("m(u, s) failed torus verification")
    if urep.diamondicity is not None and report.diamondicity != urep.diamondicity * (y + 1):
        raise CertificationError(
            f"torus diamondicity {report.diamondicity}, expected {urep.diamondicity * (y + 1)}"
        )
    return report


@dataclass(frozen=True)
class Placement:
    """Top-left anchor of the window covering a matrix, plus locator internals."""

    row: int
    col: int
    rotations: tuple[int, ...] = field(default=(), compare=False)
    differences: tuple[int, ...] = field(default=(), compare=False)
    s_index: int = field(default=-1, compare=False)


def covering_rotation(u: CyclicPartialWord, word) -> int:
    """The unique ``j`` such that ``sigma**j(u)`` covers ``word`` in its first symbols."""
    target = np.asarray(word)
    x = len(target)
    L = len(u)
    idx = (np.arange(L)[:, None] + np.arange(x)[None, :]) % L
    win = u.symbols[idx]
    hits = np.flatnonzero(np.all((win == DIAMOND) | (win == target[None, :]), axis=1))
    if len(hits) != 1:
        raise CertificationError(f"{target.tolist()} covered {len(hits)} times in {u}")
    return int(hits[0])


def locate(P, u: CyclicPartialWord, s) -> Placement:
    """Where ``m(u, s)`` covers the total matrix ``P``, without scanning the torus.

    Each row ``P_n`` fixes the rotation ``a_n`` of ``u`` that covers it at
    the start; the differences ``b_n = a_{n+1} - a_n`` occur exactly once in
    ``s``, at index ``i``, and the window sits at row ``i - 1`` and column
    ``a_0 - (s_0 + ... + s_{i-1})``.
    """
    cells = P.cells if isinstance(P, PartialGrid) else np.asarray(P)
    if np.any(cells == DIAMOND):
        raise NotTotal("the located matrix must not contain diamonds")
    L = len(u)
    s = _rotations(s, L)
    y = cells.shape[0] - 1
    if y < 1 or len(s.values) != L**y:
        raise ShapeMismatch(f"{cells.shape[0]} rows do not match s of length {len(s.values)}")
    a = [covering_rotation(u, row) for row in cells]
    b = [(a[n + 1] - a[n]) % L for n in range(y)]
    sv = np.asarray(s.values, dtype=np.int64)
    N = len(sv)
    idx = (np.arange(N)[:, None] + np.arange(y)[None, :]) % N
    hits = np.flatnonzero(np.all(sv[idx] == np.asarray(b)[None, :], axis=1))
    if len(hits) != 1:
        raise CertificationError(f"difference word {b} occurs {len(hits)} times in s")
    i = int(hits[0])
    col = (a[0] - int(sv[:i].sum())) % L
    return Placement((i - 1) % N, col, tuple(a), tuple(b), i)


# -- uptori from upfamilies -------------------------------------------------


def build_m_W(family: Family, W: AlternatingWord, members=None) -> PartialGrid:
    """``m(W)``: row ``n`` is member ``f_n`` rotated by ``r_0 + ... + r_{n-1}``.

    A-items of ``W`` index ``members`` (default: ``family.indexed()``).  The
    extra row ``phi_v`` of ``m'(W)`` must equal ``phi_0``; it is then dropped.
    """
    members = family.indexed() if members is None else list(members)
    lengths = {len(m) for m in members}
    if len(lengths) != 1:
        raise UnequalFamilyLengths(f"member lengths {sorted(lengths)} differ")
    L = lengths.pop()
    table = np.stack([m.symbols for m in members])
    f = np.asarray(W.a_items, dtype=np.int64)
    r = np.asarray(W.b_items, dtype=np.int64)
    if np.any(r < 0) or np.any(r >= L):
        raise RotationOutOfRange(f"rotations must lie in 0..{L - 1}")
    shifts = np.concatenate(([0], np.cumsum(r) % L))
    v = len(r)
    last = np.roll(table[f[v]], -int(shifts[v]))
    if not np.array_equal(last, table[f[0]]):
        raise LemmaViolation("the last row of m'(W) differs from its first row")
    cols = (shifts[:v, None] + np.arange(L)[None, :]) % L
    return PartialGrid(table[f[:v, None], cols], family.alphabet, TORUS)


def torus_from_family(family: Family, x: int, y: int, verify: bool = True) -> PartialGrid:
    """Build ``m(W)`` from a generated alternating De Bruijn cycle of order ``2y+1``."""
    if verify and not verify_family(family, x).is_upfamily:
        raise CertificationError("input is not an upfamily")
    L = len(family.members[0])
    W = generate.unroll_alternating(generate.alternating_debruijn(len(family), L, y))
    return build_m_W(family, W)


# -- lifting ------------------------------------------------------------------


def lift(u: CyclicPartialWord, n: int) -> CyclicPartialWord:
    """Fill the diamonds of ``u^a`` with ``0^k 1^k ... (a-1)^k`` in order."""
    if diamondicity_of(u, n) != 1:
        raise DiamondicityNotOne(f"{u} does not have one diamond in every {n}-window")
    if coverage_ledger(u, n).duplicated(limit=1)[1]:
        raise DoubleCoverage(f"{u} covers some word of length {n} twice")
    a = u.alphabet
    k = u.diamonds
    out = np.tile(u.symbols, a)
    out[out == DIAMOND] = generate.perfect_necklace(a, k).symbols
    return CyclicPartialWord(out, a)


def _one_diamond(word: CyclicPartialWord, x: int) -> bool:
    return diamondicity_of(word, x) == 1


def check_lift_conditions(quasi: Family, x: int) -> tuple[list[int], list[int]]:
    """Indices of the short and long members; raises :class:`ConditionsNotMet`."""
    a = quasi.alphabet
    lengths = quasi.lengths
    c = min(lengths)
    for i, n in enumerate(lengths):
        if n not in (c, c * a):
            raise ConditionsNotMet("a", f"member {i} has length {n}, not {c} or {c * a}", i)
    short = [i for i, n in enumerate(lengths) if n == c]
    long = [i for i, n in enumerate(lengths) if n == c * a]
    if not long or a == 1:
        raise ConditionsNotMet("b", "needs members of both lengths c and c*a")
    if c < x:
        raise ConditionsNotMet("b", f"short length {c} is below the window length {x}")
    for i in short:
        if not _one_diamond(quasi.members[i], x):
            raise ConditionsNotMet("c", f"member {i} lacks one diamond per {x}-window", i)
    if not any(_one_diamond(quasi.members[i], x) for i in long):
        raise ConditionsNotMet("c", f"no long member has one diamond per {x}-window")
    rep = verify_family(quasi, x)
    if not rep.valid:
        raise ConditionsNotMet("upqf", "the input is not a universal partial quasi-family")
    return short, long


def lift_family(quasi: Family, x: int) -> Family:
    """Lift every short member of a quasi-family meeting the lifting conditions."""
    short, _ = check_lift_conditions(quasi, x)
    members = [lift(m, x) if i in short else m for i, m in enumerate(quasi.members)]
    return Family(members, quasi.alphabet)


def build_no_diamondicity(quasi: Family, x: int, y: int) -> PartialGrid:
    """Uptorus for ``A^{(y+1) x x}`` whose windows hold different diamond counts."""
    if y < 2:
        raise ConditionsNotMet("y", f"y must be at least 2, got {y}")
    lifted = lift_family(quasi, x)
    if not verify_family(lifted, x).is_upfamily:
        raise CertificationError("the lifted family is not an upfamily")
    return torus_from_family(lifted, x, y, verify=False)
