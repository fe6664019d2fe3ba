import json
import subprocess
import sys

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from uptori import fixtures
from uptori.cli import EXIT_INVALID, EXIT_OK, EXIT_USAGE, main
from uptori.construct import build_m_us
from uptori.errors import ParseError
from uptori.formats import (
    RED,
    read_family,
    read_grid,
    read_ppm,
    read_word,
    render_ppm,
    write_family,
    write_grid,
    write_word,
)
from uptori.grids import TORUS, PartialGrid
from uptori.words import CyclicPartialWord


@given(st.lists(st.integers(-1, 40), min_size=1, max_size=20))
def test_word_round_trip(symbols):
    w = CyclicPartialWord(symbols, 41)
    assert read_word(write_word(w), 41) == w


def test_word_text_examples():
    assert str(read_word("# upcycle\n001◊110*\n")) == "001*110*"
    assert write_word(read_word("0 12 * 3", 13)) == "0c*3\n"
    assert write_word(read_word("10", 41)) == "10\n"
    with pytest.raises(ParseError):
        read_word("01\n10")


@given(st.integers(1, 5), st.integers(1, 5), st.integers(1, 4), st.booleans(), st.data())
def test_grid_round_trip(R, C, a, torus, data):
    cells = data.draw(st.lists(st.integers(-1, a - 1), min_size=R * C, max_size=R * C))
    g = PartialGrid(np.array(cells).reshape(R, C), a, TORUS if torus else "matrix")
    assert read_grid(write_grid(g)) == g


def test_grid_text_examples(tmp_path):
    assert read_grid("*001\n1100\n1100", mode=TORUS) == fixtures.get("minimal")
    with pytest.raises(ParseError):
        read_grid("3 4 2 torus\n*001\n1100")
    path = tmp_path / "g.txt"
    with open(path, "w") as fh:
        assert write_grid(fixtures.get("minimal"), fh) is None
    assert read_grid(path.read_text()) == fixtures.get("minimal")


def test_family_round_trip():
    f = fixtures.get("F2")
    g, x = read_family(write_family(f, 4))
    assert g == f and x == 4 and g.members[1] == f.members[1]


def test_ppm_of_minimal_uptorus():
    img = read_ppm(render_ppm(fixtures.get("minimal"), scale=16))
    assert img.shape == (48, 64, 3)
    assert np.all(img[:16, :16] == RED)
    assert np.all(img[16:, 16:32] == 200)  # the symbol 1 at (1, 1)
    assert np.all(img[:16, 16:48] == 0)


def test_ppm_edge_cases():
    black = read_ppm(render_ppm(PartialGrid([[0]], 2), scale=1))
    assert black.shape == (1, 1, 3) and not black.any()
    t = build_m_us(fixtures.get("u4"), fixtures.get("s64"))
    tall = read_ppm(render_ppm(t, transpose=True))
    assert tall.shape == (8, 64, 3)
    with pytest.raises(ValueError):
        render_ppm(t, scale=0)


def run(argv, capsys):
    code = main(argv)
    return code, capsys.readouterr()


def test_cli_verify(capsys):
    assert run(["verify", "upcycle", "fixture:u4"], capsys)[0] == EXIT_OK
    code, out = run(["verify", "upword", "0011", "--n", "2", "--json"], capsys)
    assert code == EXIT_INVALID and json.loads(out.out)["missing"] == [2]
    code, out = run(["verify", "family", "fixture:S_invalid", "--json"], capsys)
    assert code == EXIT_INVALID and 226 in json.loads(out.out)["cross_duplicated"]
    assert run(["verify", "uptorus", "fixture:minimal"], capsys)[0] == EXIT_OK
    assert run(["verify", "upmatrix", "00110/0*1*0/10011"], capsys)[0] == EXIT_OK


def test_cli_usage_errors(capsys):
    assert run(["verify", "upmatrix", "012/01"], capsys)[0] == EXIT_USAGE
    assert run(["verify", "upcycle", "fixture:nope"], capsys)[0] == EXIT_USAGE
    assert run(["verify", "upcycle", "/no/such/file.txt"], capsys)[0] == EXIT_USAGE
    with pytest.raises(SystemExit) as e:
        main(["frobnicate"])
    assert e.value.code == EXIT_USAGE


def test_cli_construct_and_locate(capsys, tmp_path):
    out = tmp_path / "t.txt"
    code, _ = run(["construct", "torus-from-upcycle", "fixture:u4", "--s", "fixture:s64",
                   "--x", "4", "--certify", "--out", str(out)], capsys)
    assert code == EXIT_OK
    assert read_grid(out.read_text()) == build_m_us(fixtures.get("u4"), fixtures.get("s64"))
    code, res = run(["locate", "fixture:locate_P", "--u", "fixture:u4", "--s", "fixture:s64",
                     "--json"], capsys)
    d = json.loads(res.out)
    assert code == EXIT_OK and (d["row"], d["col"]) == (37, 6)


def test_cli_generate_and_slicings(capsys):
    code, res = run(["generate", "necklace", "--a", "4", "--k", "2"], capsys)
    assert code == EXIT_OK and res.out.strip() == "00112233"
    code, res = run(["enumerate-slicings", "fixture:quaternary_upcycle", "--block", "8", "--json"], capsys)
    d = json.loads(res.out)
    assert (d["valid_including_single"], d["valid_with_two_or_more"]) == (42, 41)


def test_cli_search_json(capsys):
    code, res = run(["search", "--dims", "3x4", "--mode", "torus", "--json", "--quiet"], capsys)
    d = json.loads(res.out)
    assert code == EXIT_OK and d["raw_count"] == 48 and d["canonical_count"] == 1


def test_cli_render(tmp_path, capsys):
    out = tmp_path / "m.ppm"
    assert run(["render", "fixture:minimal", "--out", str(out), "--scale", "16"], capsys)[0] == EXIT_OK
    assert read_ppm(out.read_bytes()).shape == (48, 64, 3)


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "uptori", "verify", "upcycle", "fixture:u4"],
                       capture_output=True, text=True)
    assert r.returncode == EXIT_OK
