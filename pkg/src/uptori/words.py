"""Partial words, cyclic partial words, and their coverage checks.

Symbols are small integers: letters are ``0 .. a-1`` and the wildcard is
:data:`DIAMOND` (``-1``).  In text, letters are written ``0-9`` then ``a-z``
and the diamond as ``*`` (``◊`` is also accepted on input).
"""

from __future__ import annotations

from typing import Iterable, Union

import numpy as np

from .errors import BadSymbol, BadWindowLength, LengthMismatch, TargetNotTotal
from .ledger import (
    DIAMOND,
    CoverageLedger,
    Triviality,
    VerificationReport,
    common_value,
    diamond_counts,
    expand_into,
    report_from,
    scan_windows,
)

__all__ = [
    "DIAMOND",
    "PartialWord",
    "CyclicPartialWord",
    "parse_symbols",
    "format_symbols",
    "covers_word",
    "rotate",
    "windows",
    "coverage_ledger",
    "verify_upword",
    "verify_upcycle",
    "diamondicity_of",
    "least_rotation",
]

_DIGITS = "0123456789abcdefghijklmnopqrstuvwxyz"
MAX_TEXT_ALPHABET = len(_DIGITS)


def parse_symbols(text: str) -> list[int]:
    out = []
    for ch in text.strip():
        if ch in "*◊":
            out.append(DIAMOND)
        elif ch.lower() in _DIGITS:
            out.append(_DIGITS.index(ch.lower()))
        elif ch in " \t,":
            continue
        else:
            raise BadSymbol(f"cannot parse symbol {ch!r}")
    return out


def format_symbols(symbols: Iterable[int]) -> str:
    chars = []
    for s in symbols:
        s = int(s)
        if s == DIAMOND:
            chars.append("*")
        elif 0 <= s < MAX_TEXT_ALPHABET:
            chars.append(_DIGITS[s])
        else:
            raise BadSymbol(f"letter {s} has no single-character form")
    return "".join(chars)


def _as_array(symbols, alphabet: int | None) -> tuple[np.ndarray, int]:
    if isinstance(symbols, str):
        symbols = parse_symbols(symbols)
    arr = np.array(symbols, dtype=np.int32).ravel()
    if np.any(arr < DIAMOND):
        raise BadSymbol("negative letter")
    if alphabet is None:
        alphabet = max(2, int(arr.max()) + 1) if arr.size else 2
    if alphabet < 1:
        raise BadSymbol("alphabet size must be at least 1")
    if arr.size and int(arr.max()) >= alphabet:
        raise BadSymbol(f"letter {int(arr.max())} outside alphabet of size {alphabet}")
    arr.flags.writeable = False
    return arr, alphabet


class _Symbols:
    __slots__ = ("symbols", "alphabet")

    def __init__(self, symbols, alphabet: int | None = None):
        arr, a = _as_array(symbols, alphabet)
        object.__setattr__(self, "symbols", arr)
        object.__setattr__(self, "alphabet", a)

    def __setattr__(self, name, value):
        raise AttributeError(f"{type(self).__name__} is immutable")

    def __len__(self) -> int:
        return len(self.symbols)

    def __iter__(self):
        return iter(self.symbols.tolist())

    def __getitem__(self, i):
        return int(self.symbols[i])

    def __str__(self) -> str:
        return format_symbols(self.symbols)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({str(self)!r}, alphabet={self.alphabet})"

    @property
    def diamonds(self) -> int:
        return int(np.count_nonzero(self.symbols == DIAMOND))

    def is_total(self) -> bool:
        return self.diamonds == 0

    def key(self) -> tuple[int, ...]:
        return tuple(self.symbols.tolist())


class PartialWord(_Symbols):
    """A linear sequence of letters and diamonds."""

    __slots__ = ()

    def __eq__(self, other):
        if not isinstance(other, PartialWord):
            return NotImplemented
        return self.alphabet == other.alphabet and self.key() == other.key()

    def __hash__(self):
        return hash(("PartialWord", self.alphabet, self.key()))


class CyclicPartialWord(_Symbols):
    """A partial word read cyclically.

    The stored representation starts at index 0 and is never canonicalized
    implicitly.  ``==`` compares representations; use :meth:`is_rotation_of`
    or :meth:`canonical` for cyclic equality.
    """

    __slots__ = ()

    def __init__(self, symbols, alphabet: int | None = None):
        super().__init__(symbols, alphabet)
        if len(self.symbols) == 0:
            raise BadWindowLength("a cyclic word needs at least one symbol")

    def __eq__(self, other):
        if not isinstance(other, CyclicPartialWord):
            return NotImplemented
        return self.alphabet == other.alphabet and self.key() == other.key()

    def __hash__(self):
        return hash(("CyclicPartialWord", self.alphabet, self.key()))

    def rotate(self, i: int) -> CyclicPartialWord:
        return rotate(self, i)

    def canonical(self) -> CyclicPartialWord:
        """The lexicographically least rotation (the diamond sorts first)."""
        return rotate(self, least_rotation(self.symbols))

    def is_rotation_of(self, other: CyclicPartialWord) -> bool:
        return (
            len(self) == len(other)
            and self.alphabet == other.alphabet
            and self.canonical() == other.canonical()
        )

    def power(self, k: int) -> CyclicPartialWord:
        return CyclicPartialWord(np.tile(self.symbols, k), self.alphabet)


Word = Union[PartialWord, CyclicPartialWord]


def least_rotation(seq) -> int:
    """Start index of the lexicographically least rotation (Booth's algorithm)."""
    s = list(seq)
    n = len(s)
    if n == 0:
        return 0
    s = s + s
    fail = [-1] * len(s)
    k = 0
    for j in range(1, len(s)):
        sj = s[j]
        i = fail[j - k - 1]
        while i != -1 and sj != s[k + i + 1]:
            if sj < s[k + i + 1]:
                k = j - i - 1
            i = fail[i]
        if sj != s[k + i + 1]:
            if sj < s[k]:
                k = j
            fail[j - k] = -1
        else:
            fail[j - k] = i + 1
    return k % n


def covers_word(cover: PartialWord, target: PartialWord) -> bool:
    """Whether ``cover`` matches the total word ``target`` position by position."""
    cs = cover.symbols if isinstance(cover, _Symbols) else _as_array(cover, None)[0]
    ts = target.symbols if isinstance(target, _Symbols) else _as_array(target, None)[0]
    if len(cs) != len(ts):
        raise LengthMismatch(f"lengths {len(cs)} and {len(ts)} differ")
    if np.any(ts == DIAMOND):
        raise TargetNotTotal("target contains a diamond")
    return bool(np.all((cs == DIAMOND) | (cs == ts)))


def rotate(c: CyclicPartialWord, i: int) -> CyclicPartialWord:
    """``sigma**i(c)``: the representation starting at index ``i mod |c|``."""
    return CyclicPartialWord(np.roll(c.symbols, -(i % len(c))), c.alphabet)


def windows(c: Word, n: int) -> list[PartialWord]:
    """Length-``n`` windows in index order (cyclic for a cyclic word)."""
    if n < 1:
        raise BadWindowLength(f"window length must be at least 1, got {n}")
    L = len(c)
    if isinstance(c, CyclicPartialWord):
        idx = (np.arange(L)[:, None] + np.arange(n)[None, :]) % L
    else:
        if L < n:
            raise BadWindowLength(f"word of length {L} has no windows of length {n}")
        idx = np.arange(L - n + 1)[:, None] + np.arange(n)[None, :]
    return [PartialWord(row, c.alphabet) for row in c.symbols[idx]]


def _scan(obj: Word, n: int):
    if n < 1:
        raise BadWindowLength(f"window length must be at least 1, got {n}")
    cyclic = isinstance(obj, CyclicPartialWord)
    if not cyclic and len(obj) < n:
        raise BadWindowLength(f"word of length {len(obj)} has no windows of length {n}")
    return scan_windows(obj.symbols[None, :], obj.alphabet, 1, n, False, cyclic)


def coverage_ledger(obj: Word, n: int, dense: bool | None = None) -> CoverageLedger:
    """Count, for every total word of length ``n``, how often ``obj`` covers it."""
    base, mask = _scan(obj, n)
    ledger = CoverageLedger(obj.alphabet, n, dense=dense)
    expand_into(ledger, base, mask)
    return ledger


def _word_triviality(obj: Word) -> Triviality:
    d = obj.diamonds
    if d == 0:
        return Triviality.NO_DIAMONDS
    if d == len(obj):
        return Triviality.ALL_DIAMONDS
    return Triviality.NONTRIVIAL_PARTIAL


def _verify(obj: Word, n: int, dense: bool | None) -> VerificationReport:
    base, mask = _scan(obj, n)
    ledger = CoverageLedger(obj.alphabet, n, dense=dense)
    expand_into(ledger, base, mask)
    return report_from(ledger, mask, _word_triviality(obj))


def verify_upword(w: PartialWord, n: int, dense: bool | None = None) -> VerificationReport:
    if isinstance(w, CyclicPartialWord):
        w = PartialWord(w.symbols, w.alphabet)
    return _verify(w, n, dense)


def verify_upcycle(u: CyclicPartialWord, n: int, dense: bool | None = None) -> VerificationReport:
    if not isinstance(u, CyclicPartialWord):
        u = CyclicPartialWord(u.symbols, u.alphabet)
    return _verify(u, n, dense)


def diamondicity_of(u: Word, n: int) -> int | None:
    """Common diamond count of all length-``n`` windows, or ``None``."""
    _, mask = _scan(u, n)
    return common_value(diamond_counts(mask))
