"""Universal partial families and quasi-families, and slicing upcycles into them."""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from typing import Iterable

import numpy as np

from .errors import BadBlock, BadCut, BadWindowLength, DuplicateMember
from .ledger import CoverageLedger, VerificationReport, Triviality
from .words import CyclicPartialWord, coverage_ledger, diamondicity_of


class Family:
    """A set of pairwise cyclically distinct cyclic partial words.

    Members keep the representation and order they were given in;
    :meth:`indexed` returns them sorted by canonical rotation, which is the
    order used to number them in constructions.
    """

    def __init__(self, members: Iterable, alphabet: int | None = None):
        words = []
        for m in members:
            if not isinstance(m, CyclicPartialWord):
                m = CyclicPartialWord(m, alphabet)
            words.append(m)
        if not words:
            raise ValueError("a family needs at least one member")
        if alphabet is None:
            alphabet = max(m.alphabet for m in words)
        words = [
            m if m.alphabet == alphabet else CyclicPartialWord(m.symbols, alphabet)
            for m in words
        ]
        canon = [m.canonical() for m in words]
        if len(set(canon)) != len(canon):
            raise DuplicateMember("family members must be pairwise cyclically distinct")
        self.members: tuple[CyclicPartialWord, ...] = tuple(words)
        self.alphabet = alphabet
        self._canon = canon

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, word: CyclicPartialWord) -> bool:
        return word.canonical() in self._canon

    def __eq__(self, other):
        if not isinstance(other, Family):
            return NotImplemented
        return self.alphabet == other.alphabet and set(self._canon) == set(other._canon)

    def __hash__(self):
        return hash((self.alphabet, frozenset(self._canon)))

    def __repr__(self) -> str:
        return f"Family({[str(m) for m in self.members]}, alphabet={self.alphabet})"

    @property
    def lengths(self) -> list[int]:
        return [len(m) for m in self.members]

    @property
    def equal_lengths(self) -> bool:
        return len(set(self.lengths)) == 1

    def indexed(self) -> list[CyclicPartialWord]:
        """Members sorted by their canonical rotation (representations kept)."""
        order = sorted(range(len(self)), key=lambda i: self._canon[i].key())
        return [self.members[i] for i in order]


@dataclass
class FamilyReport(VerificationReport):
    """Family verification with cross-member bookkeeping.

    ``cross_duplicated`` lists codes covered by two or more members;
    ``within_duplicated`` lists codes covered twice inside one member.
    """

    is_upfamily: bool = False
    cross_duplicated: list[int] = field(default_factory=list)
    cross_duplicated_total: int = 0
    within_duplicated: list[tuple[int, int]] = field(default_factory=list)
    within_duplicated_total: int = 0
    member_diamondicity: list[int | None] = field(default_factory=list)

    def to_dict(self) -> dict:
        out = super().to_dict()
        out["within_duplicated"] = [list(p) for p in self.within_duplicated]
        return out


def member_ledgers(f: Family, x: int) -> list[CoverageLedger]:
    return [coverage_ledger(m, x) for m in f.members]


def verify_family(f: Family, x: int, cap: int = 32) -> FamilyReport:
    """Check that every word of ``A^x`` is covered by exactly one member, once."""
    if x < 1:
        raise BadWindowLength(f"window length must be at least 1, got {x}")
    ledgers = member_ledgers(f, x)
    total = ledgers[0]
    for led in ledgers[1:]:
        total = total + led
    if total.dense:
        owners = np.zeros(total.size, dtype=np.int32)
        for led in ledgers:
            owners += led.counts > 0
        cross = np.flatnonzero(owners > 1)
        cross_list, cross_total = cross[:cap].tolist(), len(cross)
    else:
        owner_count: dict[int, int] = {}
        for led in ledgers:
            for code in led.nonzero_codes().tolist():
                owner_count[code] = owner_count.get(code, 0) + 1
        cross_all = sorted(c for c, k in owner_count.items() if k > 1)
        cross_list, cross_total = cross_all[:cap], len(cross_all)
    within = []
    for led in ledgers:
        within.extend(led.duplicated(limit=cap)[0])
    within_total = sum(led.duplicated()[1] for led in ledgers)
    missing, missing_total = total.missing(cap)
    duplicated, duplicated_total = total.duplicated(cap)
    valid = missing_total == 0 and duplicated_total == 0 and cross_total == 0
    member_d = [diamondicity_of(m, x) if len(m) > x else None for m in f.members]
    family_d = member_d[0] if len(set(member_d)) == 1 else None
    diamonds = sum(m.diamonds for m in f.members)
    size = sum(len(m) for m in f.members)
    if diamonds == 0:
        triv = Triviality.NO_DIAMONDS
    elif diamonds == size:
        triv = Triviality.ALL_DIAMONDS
    else:
        triv = Triviality.NONTRIVIAL_PARTIAL
    return FamilyReport(
        valid=valid,
        missing=missing,
        duplicated=duplicated,
        diamondicity=family_d,
        triviality=triv,
        missing_total=missing_total,
        duplicated_total=duplicated_total,
        windows=size,
        mass=total.mass,
        is_upfamily=valid and f.equal_lengths,
        cross_duplicated=cross_list,
        cross_duplicated_total=cross_total,
        within_duplicated=sorted(within)[:cap],
        within_duplicated_total=within_total,
        member_diamondicity=member_d,
    )


@dataclass(frozen=True)
class CutSet:
    indices: tuple[int, ...]
    length: int

    def __post_init__(self):
        idx = self.indices
        if not idx:
            raise BadCut("a cut set needs at least one index")
        if any(b <= a for a, b in zip(idx, idx[1:])):
            raise BadCut("cut indices must be strictly increasing")
        if idx[0] < 0 or idx[-1] >= self.length:
            raise BadCut(f"cut indices must lie in 0..{self.length - 1}")


def slice_word(u: CyclicPartialWord, cuts) -> Family:
    """Cut ``u`` at the given indices; member ``j`` runs from cut ``j`` to cut ``j+1``."""
    if not isinstance(cuts, CutSet):
        cuts = CutSet(tuple(cuts), len(u))
    if cuts.length != len(u):
        raise BadCut(f"cut set is for length {cuts.length}, word has length {len(u)}")
    idx = cuts.indices
    ends = idx[1:] + (idx[0] + len(u),)
    doubled = np.concatenate((u.symbols, u.symbols))
    return Family([doubled[s:e] for s, e in zip(idx, ends)], u.alphabet)


# ``slice`` shadows a builtin, so it is exported under both names.
slice = slice_word  # noqa: A001


@dataclass
class SlicingReport:
    word: str
    block: int
    x: int
    scanned: int = 0
    valid_cutsets: list[list[int]] = field(default_factory=list)
    single_member_valid: bool = False
    upfamily_count: int = 0
    equal_length_count: int = 0
    equal_length_all_upfamilies: bool = True

    @property
    def valid_including_single(self) -> int:
        return len(self.valid_cutsets)

    @property
    def valid_with_two_or_more(self) -> int:
        return sum(1 for c in self.valid_cutsets if len(c) >= 2)

    def to_dict(self) -> dict:
        return {
            "word": self.word,
            "block": self.block,
            "x": self.x,
            "scanned": self.scanned,
            "valid_including_single": self.valid_including_single,
            "valid_with_two_or_more": self.valid_with_two_or_more,
            "single_member_valid": self.single_member_valid,
            "upfamily_count": self.upfamily_count,
            "equal_length_count": self.equal_length_count,
            "equal_length_all_upfamilies": self.equal_length_all_upfamilies,
            "valid_cutsets": self.valid_cutsets,
        }

    def to_json(self, **kwargs) -> str:
        return json.dumps(self.to_dict(), **kwargs)


def enumerate_slicings(u: CyclicPartialWord, block: int, x: int) -> SlicingReport:
    """Try every cut set containing 0 whose other cuts are multiples of ``block``.

    The single-member cut set ``{0}`` is scanned too and its verdict is
    reported separately, so both tallies (with and without it) are available.
    """
    L = len(u)
    if block < 1 or L % block:
        raise BadBlock(f"block {block} does not divide length {L}")
    boundaries = list(range(block, L, block))
    report = SlicingReport(str(u), block, x)
    for r in range(len(boundaries) + 1):
        for extra in itertools.combinations(boundaries, r):
            cuts = (0,) + extra
            report.scanned += 1
            try:
                fam = slice_word(u, cuts)
            except DuplicateMember:
                continue
            rep = verify_family(fam, x)
            equal = fam.equal_lengths and len(fam) > 1
            if equal:
                report.equal_length_count += 1
            if rep.valid:
                report.valid_cutsets.append(list(cuts))
                if len(cuts) == 1:
                    report.single_member_valid = True
                if equal:
                    report.upfamily_count += 1
            elif equal:
                report.equal_length_all_upfamilies = False
    return report


def probe_equal_slicings(
    u: CyclicPartialWord, piece_len: int, x: int, full: bool = False
) -> list[tuple[int, bool]]:
    """Slice ``u`` into pieces of ``piece_len`` from each start offset and verify."""
    L = len(u)
    if piece_len < 1 or L % piece_len:
        raise BadBlock(f"piece length {piece_len} does not divide length {L}")
    offsets = range(L) if full else range(piece_len)
    out = []
    for off in offsets:
        cuts = sorted((off + k * piece_len) % L for k in range(L // piece_len))
        try:
            fam = slice_word(u, cuts)
        except DuplicateMember:
            out.append((off, False))
            continue
        out.append((off, verify_family(fam, x).valid))
    return out
