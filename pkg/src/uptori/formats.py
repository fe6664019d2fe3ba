"""Plain-text file formats and a PPM renderer.

Words are one line of symbols (``*`` or ``◊`` for diamonds; letters
``0-9a-z``, or whitespace/comma separated integers for larger alphabets).
Grids carry a header ``R C a mode``; families a header ``count x a``.
Lines starting with ``#`` are comments.
"""

from __future__ import annotations

from pathlib import Path
from typing import IO, Iterable

import numpy as np

from .errors import ParseError
from .families import Family
from .grids import MATRIX, TORUS, PartialGrid
from .ledger import DIAMOND
from .words import MAX_TEXT_ALPHABET, CyclicPartialWord, PartialWord, format_symbols, parse_symbols


def _lines(text: str) -> list[str]:
    return [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]


def _row(line: str, alphabet: int | None = None) -> list[int]:
    wide = alphabet is not None and alphabet > MAX_TEXT_ALPHABET
    if wide or "," in line or " " in line.strip():
        parts = line.replace(",", " ").split()
        if wide or any(len(p) > 1 for p in parts):
            try:
                return [DIAMOND if p in ("*", "◊") else int(p) for p in parts]
            except ValueError as exc:
                raise ParseError(f"bad symbol list: {line!r}") from exc
    try:
        return parse_symbols(line)
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def _format_row(symbols: Iterable[int], alphabet: int) -> str:
    if alphabet <= MAX_TEXT_ALPHABET:
        return format_symbols(symbols)
    return " ".join("*" if s == DIAMOND else str(int(s)) for s in symbols)


def _ints(header: str, n: int, what: str) -> list[str]:
    parts = header.split()
    if len(parts) != n:
        raise ParseError(f"{what} header needs {n} fields, got {header!r}")
    return parts


# -- words ---------------------------------------------------------------------


def read_word(text: str, alphabet: int | None = None, cyclic: bool = True):
    lines = _lines(text)
    if len(lines) != 1:
        raise ParseError(f"expected one word line, got {len(lines)}")
    cls = CyclicPartialWord if cyclic else PartialWord
    return cls(_row(lines[0], alphabet), alphabet)


def write_word(word) -> str:
    return _format_row(word.symbols, word.alphabet) + "\n"


# -- grids -----------------------------------------------------------------------


def read_grid(text: str, mode: str | None = None) -> PartialGrid:
    """Read a grid; the header is optional for bare rows of symbols."""
    lines = _lines(text)
    if not lines:
        raise ParseError("empty grid")
    head = lines[0].split()
    if len(head) == 4 and head[3] in (MATRIX, TORUS):
        try:
            R, C, a = (int(v) for v in head[:3])
        except ValueError as exc:
            raise ParseError(f"bad grid header {lines[0]!r}") from exc
        rows = [_row(ln, a) for ln in lines[1:]]
        if len(rows) != R or any(len(r) != C for r in rows):
            raise ParseError(f"grid body does not match header {R}x{C}")
        return PartialGrid(rows, a, mode or head[3])
    rows = [_row(ln) for ln in lines]
    if len({len(r) for r in rows}) != 1:
        raise ParseError("grid rows differ in length")
    return PartialGrid(rows, None, mode or MATRIX)


def write_grid(g: PartialGrid, out: IO[str] | None = None) -> str | None:
    """Format ``g``; with ``out`` given, stream it row by row instead."""
    header = f"{g.rows} {g.cols} {g.alphabet} {g.mode}\n"
    if out is None:
        return header + "".join(_format_row(r, g.alphabet) + "\n" for r in g.cells)
    out.write(header)
    for r in g.cells:
        out.write(_format_row(r, g.alphabet) + "\n")
    return None


# -- families --------------------------------------------------------------------


def read_family(text: str) -> tuple[Family, int]:
    """Returns the family and its word length ``x``."""
    lines = _lines(text)
    if not lines:
        raise ParseError("empty family")
    try:
        count, x, a = (int(v) for v in _ints(lines[0], 3, "family"))
    except ValueError as exc:
        raise ParseError(f"bad family header {lines[0]!r}") from exc
    body = lines[1:]
    if len(body) != count:
        raise ParseError(f"header says {count} members, found {len(body)}")
    return Family([CyclicPartialWord(_row(ln, a), a) for ln in body], a), x


def write_family(f: Family, x: int) -> str:
    out = [f"{len(f)} {x} {f.alphabet}"]
    out.extend(_format_row(m.symbols, f.alphabet) for m in f.members)
    return "\n".join(out) + "\n"


# -- images ----------------------------------------------------------------------

RED = (255, 0, 0)


def palette(alphabet: int) -> np.ndarray:
    """RGB rows for ``0..a-1`` (black up to grey 200) and a last row for the diamond."""
    levels = np.linspace(0, 200, alphabet) if alphabet > 1 else np.zeros(1)
    pal = np.repeat(levels.round().astype(np.uint8)[:, None], 3, axis=1)
    return np.vstack([pal, np.array(RED, dtype=np.uint8)])


def render_ppm(g: PartialGrid, scale: int = 1, transpose: bool = False) -> bytes:
    """Binary P6 image with ``scale x scale`` pixels per cell."""
    if scale < 1:
        raise ValueError("scale must be at least 1")
    cells = g.cells.T if transpose else g.cells
    idx = np.where(cells == DIAMOND, g.alphabet, cells)
    img = palette(g.alphabet)[idx]
    img = np.repeat(np.repeat(img, scale, axis=0), scale, axis=1)
    h, w = img.shape[:2]
    return f"P6\n{w} {h}\n255\n".encode() + img.tobytes()


def read_ppm(data: bytes) -> np.ndarray:
    """Decode a P6 image written by :func:`render_ppm` into an ``(h, w, 3)`` array."""
    parts = data.split(b"\n", 3)
    if parts[0] != b"P6" or len(parts) < 4:
        raise ParseError("not a binary PPM")
    w, h = (int(v) for v in parts[1].split())
    return np.frombuffer(parts[3], dtype=np.uint8)[: w * h * 3].reshape(h, w, 3)


def load_text(source: str | Path) -> str:
    return Path(source).read_text(encoding="utf-8")
