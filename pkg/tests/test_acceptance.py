"""The ten acceptance criteria, each timed against its limit.

Every criterion prints one PASS/FAIL line; the lines are repeated in the
pytest terminal summary under "acceptance criteria".
"""

import itertools
import json
import subprocess
import sys

import numpy as np

import oracles
from criteria import criterion
from uptori import fixtures
from uptori.construct import build_m_us, lift, lift_family, locate, mu, torus_from_family
from uptori.families import enumerate_slicings, slice_word, verify_family
from uptori.generate import (
    alternating_debruijn,
    count_debruijn_bruteforce,
    debruijn_cycle,
    is_alternating_debruijn,
)
from uptori.grids import (
    MATRIX,
    TORUS,
    PartialGrid,
    canonical_form,
    grid_coverage,
    verify_upmatrix,
    verify_uptorus,
)
from uptori.ledger import Triviality
from uptori.search import SearchSpec, search
from uptori.words import CyclicPartialWord, PartialWord, coverage_ledger, verify_upcycle

U4 = fixtures.get("u4")
S64 = fixtures.get("s64")


def test_criterion_01_fixture_sweep():
    with criterion(1, "fixture verification sweep", 1.0):
        for name, size in (("u4", 16), ("quaternary_upcycle", 256)):
            rep = verify_upcycle(fixtures.get(name), 4)
            assert rep.valid and rep.mass == size and rep.diamondicity == 1
        for name in ("mu_3x5", "upmatrix_3x6", "upmatrix_4x5", "upmatrix_2x11"):
            rep = verify_upmatrix(fixtures.get(name), (2, 2))
            assert rep.valid and rep.triviality == Triviality.NONTRIVIAL_PARTIAL, name
        assert verify_uptorus(fixtures.get("minimal"), (2, 2)).valid
        rep = verify_uptorus(fixtures.get("trivial_torus_8x8"), (1, 4))
        assert rep.valid and rep.triviality != Triviality.NONTRIVIAL_PARTIAL
        for name in ("F", "F_prime", "F_double_prime", "F_four"):
            assert verify_family(fixtures.get(name), 4).is_upfamily, name
        rep = verify_family(fixtures.get("upqf_two"), 4)
        assert rep.valid and not rep.is_upfamily
        rep = verify_family(fixtures.get("S_invalid"), 4)
        assert not rep.valid and rep.cross_duplicated_total > 0


def test_criterion_02_m_us():
    with criterion(2, "m(u, s) reproduction", 1.0):
        t = build_m_us(U4, S64)
        assert (t.rows, t.cols) == (64, 8)
        led = grid_coverage(t, (3, 4))
        assert led.size == 4096 and np.all(led.counts == 1)
        assert np.array_equal(t.cells[-1], U4.symbols)
        assert verify_uptorus(t, (3, 4)).diamondicity == 3


def test_criterion_03_locator():
    t = build_m_us(U4, S64)
    rows = t.cells.tolist()
    rng = np.random.default_rng(2024)
    with criterion(3, "locator agreement", 5.0):
        P = fixtures.get("locate_P")
        p = locate(P, U4, S64)
        assert p.rotations == (0, 5, 7) and p.differences == (5, 2)
        assert [(p.row, p.col)] == oracles.scan_locate(rows, P.cells.tolist())
        for _ in range(1000):
            M = rng.integers(0, 2, size=(3, 4))
            hits = oracles.scan_locate(rows, M.tolist())
            q = locate(M, U4, S64)
            assert [(q.row, q.col)] == hits


def test_criterion_04_m_W():
    with criterion(4, "m(W) construction", 60.0):
        f = fixtures.get("F")
        t = torus_from_family(f, 4, 2)
        assert (t.rows, t.cols) == (32768, 8)
        led = grid_coverage(t, (3, 4))
        assert led.size == 4**12 and np.all(led.counts == 1)
        t = torus_from_family(f, 4, 1)
        assert (t.rows, t.cols) == (512, 8)
        led = grid_coverage(t, (2, 4))
        assert led.size == 4**8 and np.all(led.counts == 1)


def test_criterion_05_slicings():
    with criterion(5, "slicing enumeration", 10.0):
        word = fixtures.get("quaternary_upcycle")
        rep = enumerate_slicings(word, 8, 4)
        print(f"  valid including the uncut word: {rep.valid_including_single}; "
              f"with two or more members: {rep.valid_with_two_or_more}")
        assert rep.scanned == 128
        assert 42 in (rep.valid_including_single, rep.valid_with_two_or_more)
        for cuts in rep.valid_cutsets:
            fam = slice_word(word, cuts)
            if fam.equal_lengths:
                assert verify_family(fam, 4).is_upfamily


def test_criterion_06_lifting():
    with criterion(6, "lifting", 1.0):
        u = fixtures.get("lift_input")
        out = lift(u, 4)
        assert str(out) == "00301120003111210032112200331123"
        assert coverage_ledger(out, 4) == coverage_ledger(u, 4)
        lifted = lift_family(fixtures.get("upqf_five"), 4)
        expected = fixtures.FIXTURES["F2"].text
        assert [str(m) for m in lifted.members[1:]] == expected[1:]


_PIPELINE = """
import json, resource, time
import numpy as np
from uptori import fixtures
from uptori.construct import build_no_diamondicity
from uptori.grids import grid_coverage, window_diamond_counts
t0 = time.perf_counter()
t = build_no_diamondicity(fixtures.get("upqf_five"), 4, 2)
led = grid_coverage(t, (3, 4))
d = np.unique(window_diamond_counts(t, (3, 4)))
print(json.dumps({
    "shape": [t.rows, t.cols],
    "size": led.size,
    "exact": bool(np.all(led.counts == 1)),
    "diamond_counts": d.tolist(),
    "seconds": time.perf_counter() - t0,
    "peak_kib": resource.getrusage(resource.RUSAGE_SELF).ru_maxrss,
}))
"""


def test_criterion_07_no_diamondicity():
    with criterion(7, "no-diamondicity pipeline", 600.0):
        r = subprocess.run([sys.executable, "-c", _PIPELINE], capture_output=True, text=True,
                           check=True)
        d = json.loads(r.stdout)
        print(f"  peak memory {d['peak_kib'] / 1024:.0f} MiB, window diamond counts {d['diamond_counts']}")
        assert d["shape"] == [128000, 32]
        assert d["size"] == 4**12 and d["exact"]
        assert 3 in d["diamond_counts"] and 0 in d["diamond_counts"]
        assert d["peak_kib"] < 1024 * 1024


def _timed_search(spec, limit, **kw):
    cat = search(spec, **kw)
    assert cat.complete and cat.seconds < limit, f"{spec.dims} took {cat.seconds:.1f}s"
    return cat


def test_criterion_08_search():
    with criterion(8, "search reproduction", 30 * 60.0):
        cat = _timed_search(SearchSpec(2, (2, 2), (3, 4), TORUS), 60)
        assert canonical_form(fixtures.get("minimal"), (2, 2)) in cat.solutions
        assert _timed_search(SearchSpec(2, (2, 2), (3, 3), TORUS), 60).raw_count == 0
        masses = set()
        for cells in itertools.product((-1, 0, 1), repeat=9):
            g = PartialGrid(np.array(cells).reshape(3, 3), 2, TORUS)
            masses.add(grid_coverage(g, (2, 2)).mass)
        assert 16 not in masses
        for dims, name in (((3, 5), "mu_3x5"), ((4, 4), None)):
            cat = _timed_search(SearchSpec(2, (2, 2), dims, MATRIX), 60)
            assert cat.solutions
            if name:
                assert canonical_form(fixtures.get(name), (2, 2)) in cat.solutions
        cat = _timed_search(SearchSpec(2, (2, 2), (3, 6), MATRIX), 30 * 60, capacity=True)
        assert canonical_form(fixtures.get("upmatrix_3x6"), (2, 2)) in cat.solutions
        cat = _timed_search(SearchSpec(2, (2, 2), (4, 5), MATRIX), 30 * 60)
        assert canonical_form(fixtures.get("upmatrix_4x5"), (2, 2)) in cat.solutions


def _alternating_once(c):
    items = c.items().tolist()
    N = len(items)
    seen = {}
    for p in range(0, N, 2):
        w = tuple(items[(p + j) % N] for j in range(c.order))
        seen[w] = seen.get(w, 0) + 1
    return len(seen) == c.size_a ** (c.order // 2 + 1) * c.size_b ** (c.order // 2) and \
        set(seen.values()) == {1}


def test_criterion_09_generators():
    with criterion(9, "generator properties", 30.0):
        for a, n in ((2, 2), (2, 3), (2, 4), (8, 2)):
            c = debruijn_cycle(a, n)
            assert len(c) == a**n and verify_upcycle(c, n).valid
        c = debruijn_cycle(64, 2)
        led = coverage_ledger(c, 2, dense=False)
        assert not led.dense and led.is_exact()
        assert count_debruijn_bruteforce(2, 3) == 2
        for A, B, n in ((2, 2, 1), (8, 8, 2)):
            c = alternating_debruijn(A, B, n)
            assert is_alternating_debruijn(c) and _alternating_once(c)
            freq = np.bincount(c.b_items, minlength=B)
            assert np.all(freq == freq[0])


def test_criterion_10_properties():
    rng = np.random.default_rng(10)
    with criterion(10, "oracle equivalence", 120.0):
        for _ in range(10_000):
            L = int(rng.integers(1, 11))
            s = rng.integers(-1, 2, size=L).tolist()
            ref = oracles.word_counts(s, 4, 2, cyclic=True)
            led = coverage_ledger(CyclicPartialWord(s, 2), 4)
            assert all(led[code] == v for code, v in ref.items())
        for name, fx in fixtures.FIXTURES.items():
            if fx.kind in (fixtures.CYCLE, fixtures.WORD):
                w = fx.build()
                cyclic = fx.kind == fixtures.CYCLE
                ref = oracles.word_counts(w.symbols.tolist(), fx.param, w.alphabet, cyclic)
                led = coverage_ledger(w, fx.param)
                assert all(led[code] == v for code, v in ref.items()), name
        for a in (2, 3):
            words = [w for w in itertools.product(range(a), repeat=a * a + 1)
                     if oracles.is_universal_word(list(w), 2, a, cyclic=False)]
            assert words
            for w in words:
                for p in (2, 3):
                    m = mu(PartialWord(list(w), a), p, 2)
                    assert verify_upmatrix(m, (p, 2)).valid
                    assert oracles.is_universal_grid(m.cells.tolist(), p, 2, a, torus=False)
