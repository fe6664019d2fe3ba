import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from uptori import fixtures
from uptori.construct import (
    RotationSequence,
    build_m_us,
    build_m_W,
    build_no_diamondicity,
    certify_m_us,
    check_lift_conditions,
    lift,
    lift_family,
    locate,
    mu,
    torus_from_family,
)
from uptori.errors import (
    BadP,
    CertificationError,
    ConditionsNotMet,
    DiamondicityNotOne,
    LemmaViolation,
    NotAnUpword,
    NotTotal,
    RotationOutOfRange,
    UnequalFamilyLengths,
)
from uptori.families import Family, verify_family
from uptori.generate import alternating_debruijn, debruijn_cycle, unroll_alternating
from uptori.grids import subarray, verify_upmatrix, verify_uptorus
from uptori.words import CyclicPartialWord, PartialWord, coverage_ledger

U4 = fixtures.get("u4")
S64 = fixtures.get("s64")


def test_mu_examples():
    m = mu(PartialWord("00110"), 2, 2)
    assert str(m) == "00110\n*****"
    assert verify_upmatrix(m, (2, 2)).valid
    assert mu(PartialWord("0120221100", 3), 2, 2) == fixtures.get("mu_universal_word")
    with pytest.raises(BadP):
        mu(PartialWord("00110"), 1, 2)
    with pytest.raises(NotAnUpword):
        mu(PartialWord("0011"), 2, 2)


def _universal_words(a, n):
    """All universal (non-cyclic) words of minimal length for A^n, by brute force."""
    L = a**n + n - 1
    return [w for w in itertools.product(range(a), repeat=L)
            if oracles.is_universal_word(list(w), n, a, cyclic=False)]


@pytest.mark.parametrize("a", [2, 3])
@pytest.mark.parametrize("p", [2, 3])
def test_mu_theorem_on_all_small_universal_words(a, p):
    words = _universal_words(a, 2)
    assert words
    for w in words:
        m = mu(PartialWord(list(w), a), p, 2)
        rep = verify_upmatrix(m, (p, 2))
        assert rep.valid and rep.diamondicity == 2 * (p - 1)
        assert oracles.is_universal_grid(m.cells.tolist(), p, 2, a, torus=False)


def test_m_us_small():
    t = build_m_us(U4, S64)
    assert (t.rows, t.cols) == (64, 8) and t.is_torus
    assert np.array_equal(t.cells[-1], U4.symbols)  # rotations of s sum to 0 mod 8
    rep = certify_m_us(U4, S64, 4, 2)
    assert rep.valid and rep.diamondicity == 3
    assert oracles.is_universal_grid(t.cells.tolist(), 3, 4, 2, torus=True)


def test_rows_recover_s():
    t = build_m_us(U4, S64)
    u = U4.symbols.tolist()
    shifts = []
    for row in t.cells.tolist():
        hits = [k for k in range(8) if u[k:] + u[:k] == row]
        assert len(hits) == 1
        shifts.append(hits[0])
    diffs = [(shifts[i] - shifts[i - 1]) % 8 for i in range(1, 64)]
    assert [shifts[0]] + diffs == list(S64.symbols)


def test_distinct_s_gives_distinct_tori():
    other = debruijn_cycle(8, 2)
    assert other != S64
    assert build_m_us(U4, other) != build_m_us(U4, S64)
    assert certify_m_us(U4, other, 4, 2).valid


def test_certify_rejects_bad_inputs():
    with pytest.raises(CertificationError):
        certify_m_us(U4, [0] * 64, 4, 2)
    with pytest.raises(CertificationError):
        certify_m_us(CyclicPartialWord("0011"), debruijn_cycle(4, 2), 4, 2)
    with pytest.raises(RotationOutOfRange):
        RotationSequence((8,), 8)


def test_certify_quaternary_upcycle_with_generated_s():
    u = fixtures.get("quaternary_upcycle")
    s = debruijn_cycle(64, 2)
    rep = certify_m_us(u, s, 4, 2)
    assert rep.valid and rep.diamondicity == 3 and rep.windows == 4096 * 64


def test_locate_paper_matrix():
    p = locate(fixtures.get("locate_P"), U4, S64)
    assert (p.row, p.col) == (37, 6)
    assert p.rotations == (0, 5, 7) and p.differences == (5, 2)


def _random_total(t, rows, rng):
    r, c = rng.integers(t.rows), rng.integers(t.cols)
    win = subarray(t, int(r), int(c), (rows, 4)).cells
    fill = rng.integers(0, 2, size=win.shape)
    return np.where(win < 0, fill, win)


@settings(max_examples=60)
@given(st.integers(0, 2**32 - 1))
def test_locate_matches_scan(seed):
    rng = np.random.default_rng(seed)
    t = build_m_us(U4, S64)
    P = _random_total(t, 3, rng)
    anchors = oracles.scan_locate(t.cells.tolist(), P.tolist())
    assert len(anchors) == 1
    p = locate(P, U4, S64)
    assert (p.row, p.col) == anchors[0]


def test_locate_top_left_window():
    t = build_m_us(U4, S64)
    P = subarray(t, 0, 0, (3, 4)).cells.copy()
    P[P < 0] = 0
    hits = oracles.scan_locate(t.cells.tolist(), P.tolist())
    assert (locate(P, U4, S64).row, locate(P, U4, S64).col) == hits[0]
    with pytest.raises(NotTotal):
        locate(subarray(t, 0, 0, (3, 4)), U4, S64)


def test_m_W_small():
    f = fixtures.get("F")
    for y in (1, 2):
        t = torus_from_family(f, 4, y)
        assert t.rows == len(f) ** (y + 1) * 8**y and t.cols == 8
        rep = verify_uptorus(t, (y + 1, 4))
        assert rep.valid and rep.diamondicity == y + 1
    assert oracles.is_universal_grid(torus_from_family(f, 4, 1).cells.tolist(), 2, 4, 4, torus=True)


def test_m_W_rejects_bad_W():
    f = fixtures.get("F")
    W = unroll_alternating(alternating_debruijn(8, 8, 1))
    b = np.array(W.b_items)
    b[0] = (b[0] + 1) % 8
    bad = type(W)(W.a_items, b)
    with pytest.raises(LemmaViolation):
        build_m_W(f, bad)
    with pytest.raises(UnequalFamilyLengths):
        build_m_W(fixtures.get("upqf_five"), W)


def test_lift_examples():
    assert lift(fixtures.get("lift_input"), 4) == fixtures.get("lift_output")
    u = fixtures.get("lift_input")
    assert coverage_ledger(lift(u, 4), 4) == coverage_ledger(u, 4)
    assert lift(U4, 4) == CyclicPartialWord("0010110000111101")
    with pytest.raises(DiamondicityNotOne):
        lift(fixtures.get("debruijn_2_4"), 4)


def test_lift_family_matches_fixture():
    quasi = fixtures.get("upqf_five")
    short, long = check_lift_conditions(quasi, 4)
    assert short == [1, 2, 3, 4] and long == [0]
    lifted = lift_family(quasi, 4)
    assert lifted == fixtures.get("F2")
    assert verify_family(lifted, 4).is_upfamily


def test_lift_conditions_failures():
    with pytest.raises(ConditionsNotMet) as e:
        check_lift_conditions(fixtures.get("F"), 4)
    assert e.value.condition == "b"
    with pytest.raises(ConditionsNotMet) as e:
        check_lift_conditions(Family(["001*110*", "0" * 12], 2), 4)
    assert e.value.condition == "a" and e.value.member == 1
    with pytest.raises(ConditionsNotMet):
        build_no_diamondicity(fixtures.get("upqf_five"), 4, 1)


def test_no_diamondicity_torus():
    t = build_no_diamondicity(fixtures.get("upqf_five"), 4, 2)
    assert (t.rows, t.cols) == (128000, 32)
    rep = verify_uptorus(t, (3, 4))
    assert rep.valid and rep.diamondicity is None
    assert rep.triviality.name == "NONTRIVIAL_PARTIAL"
