"""Named example words, grids and families with their expected properties.

Each fixture records what it is claimed to be (``valid``, ``diamondicity``,
trivial or not) so the claims can be re-verified; see ``tests/test_fixtures.py``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from .families import Family
from .grids import MATRIX, TORUS, PartialGrid
from .words import CyclicPartialWord, PartialWord

WORD = "word"
CYCLE = "cycle"
GRID = "grid"
FAMILY = "family"

QUATERNARY = (
    "001*110*003*112*021*130*023*132*"
    "201*310*203*312*221*330*223*332*"
)
S64 = "0017020304050607112722313733414247445152535755616263646776654321"


@dataclass(frozen=True)
class Fixture:
    name: str
    kind: str
    text: Any
    alphabet: int
    param: Any
    valid: bool = True
    diamondicity: int | None = None
    trivial: bool = False
    mode: str = MATRIX
    note: str = ""

    def build(self):
        if self.kind == WORD:
            return PartialWord(self.text, self.alphabet)
        if self.kind == CYCLE:
            return CyclicPartialWord(self.text, self.alphabet)
        if self.kind == GRID:
            return PartialGrid(self.text, self.alphabet, self.mode)
        return Family(self.text, self.alphabet)


_FIXTURES = [
    Fixture("u4", CYCLE, "001*110*", 2, 4, diamondicity=1,
            note="the smallest binary upcycle, half the length of a De Bruijn cycle"),
    Fixture("debruijn_2_4", CYCLE, "0000100110101111", 2, 4, diamondicity=0, trivial=True,
            note="binary De Bruijn cycle for words of length 4"),
    Fixture("quaternary_upcycle", CYCLE, QUATERNARY, 4, 4, diamondicity=1,
            note="alphabet-multiplier upcycle for {0,1,2,3}^4"),
    Fixture("s64", CYCLE, S64, 8, 2, diamondicity=0, trivial=True,
            note="De Bruijn cycle for {0..7}^2 driving the rotations of m(u, s)"),
    Fixture("universal_word_3_2", WORD, "0120221100", 3, 2, diamondicity=0, trivial=True,
            note="universal word for {0,1,2}^2"),
    Fixture("mu_3x5", GRID, "00110\n0*1*0\n10011", 2, (2, 2),
            note="upmatrix for {0,1}^(2x2); cyclic in one direction"),
    Fixture("subarray_2x3", GRID, "011\n*1*", 2, None, valid=False,
            note="2x3 subarray of mu_3x5 anchored at (0, 1)"),
    Fixture("upmatrix_3x6", GRID, "000111\n011001\n*1**00", 2, (2, 2),
            note="upmatrix cyclic in neither direction"),
    Fixture("upmatrix_4x5", GRID, "*001*\n11001\n11001\n*001*", 2, (2, 2),
            note="upmatrix cyclic in both directions; glues to the minimal uptorus"),
    Fixture("debruijn_matrix_2x17", GRID,
            "00000101010111110\n00110001101100110", 2, (2, 2), diamondicity=0, trivial=True,
            note="trivial upmatrix without diamonds"),
    Fixture("upmatrix_2x11", GRID, "00000101*1*\n0011001*011", 2, (2, 2),
            note="two-row upmatrix: the row bound for uptori fails for upmatrices"),
    Fixture("mu_universal_word", GRID, "0120221100\n**********", 3, (2, 2), diamondicity=2,
            note="mu(0120221100, 2), an upmatrix for {0,1,2}^(2x2)"),
    Fixture("trivial_torus_8x8", GRID,
            "001*110*\n003*112*\n021*130*\n023*132*\n201*310*\n203*312*\n221*330*\n223*332*",
            4, (1, 4), diamondicity=1, trivial=True, mode=TORUS,
            note="trivial uptorus for {0,1,2,3}^(1x4) whose rows form an upfamily"),
    Fixture("minimal", GRID, "*001\n1100\n1100", 2, (2, 2), mode=TORUS,
            note="minimal nontrivial uptorus for {0,1}^(2x2)"),
    Fixture("minimal_alt1", GRID, "*110\n0011\n0011", 2, (2, 2), mode=TORUS,
            note="equivalent to the minimal uptorus"),
    Fixture("minimal_alt2", GRID, "100*\n0011\n0011", 2, (2, 2), mode=TORUS,
            note="equivalent to the minimal uptorus"),
    Fixture("minimal_alt3", GRID, "1100\n1100\n*001", 2, (2, 2), mode=TORUS,
            note="equivalent to the minimal uptorus"),
    Fixture("minimal_alt4", GRID, "*11\n011\n000\n100", 2, (2, 2), mode=TORUS,
            note="transposed form of the minimal uptorus"),
    Fixture("locate_P", GRID, "0011\n1010\n1001", 2, None, valid=False,
            note="total 3x4 matrix located in m(u4, s64) at rotations (0, 5, 7)"),
    Fixture("F", FAMILY,
            ["001*110*", "003*112*", "021*130*", "023*132*",
             "201*310*", "203*312*", "221*330*", "223*332*"], 4, 4, diamondicity=1,
            note="eight-member upfamily sliced from quaternary_upcycle at multiples of 8"),
    Fixture("F_prime", FAMILY,
            ["01*110*0", "03*112*0", "21*130*0", "23*132*2",
             "01*310*2", "03*312*2", "21*330*2", "23*332*0"], 4, 4, diamondicity=1,
            note="upfamily sliced from quaternary_upcycle starting at index 1"),
    Fixture("F_double_prime", FAMILY,
            ["1*110*00", "3*112*02", "1*130*02", "3*132*20",
             "1*310*20", "3*312*22", "1*330*22", "3*332*00"], 4, 4, diamondicity=1,
            note="upfamily sliced from quaternary_upcycle starting at index 2"),
    Fixture("F_four", FAMILY,
            ["001*110*003*112*", "021*130*023*132*",
             "201*310*203*312*", "221*330*223*332*"], 4, 4, diamondicity=1,
            note="four-member upfamily sliced from quaternary_upcycle at multiples of 16"),
    Fixture("upqf_two", FAMILY, ["001*110*", QUATERNARY[8:]], 4, 4, diamondicity=1,
            note="two-member quasi-family from cuts at 0 and 8"),
    Fixture("S_invalid", FAMILY, ["223*332*", QUATERNARY[:56]], 4, 4, valid=False,
            note="not a quasi-family: 32*2 is covered by both members"),
    Fixture("db_quasi_1", FAMILY, ["00001", "01011", "001111"], 2, 4, diamondicity=0, trivial=True,
            note="De Bruijn quasi-family for {0,1}^4"),
    Fixture("db_quasi_2", FAMILY, ["001", "000011", "0101111"], 2, 4, trivial=True,
            note="De Bruijn quasi-family with a member shorter than the word length"),
    Fixture("lift_input", CYCLE, "003*112*", 4, 4, valid=False, diamondicity=1,
            note="cyclic partial word with one diamond per 4-window"),
    Fixture("lift_output", CYCLE, "00301120003111210032112200331123", 4, 4, valid=False,
            diamondicity=0, note="lift of lift_input"),
    Fixture("upqf_five", FAMILY,
            [QUATERNARY[:32], "201*310*", "203*312*", "221*330*", "223*332*"], 4, 4, diamondicity=1,
            note="five-member quasi-family meeting the lifting conditions"),
    Fixture("F2", FAMILY,
            [QUATERNARY[:32],
             "20103100201131012012310220133103",
             "20303120203131212032312220333123",
             "22103300221133012212330222133303",
             "22303320223133212232332222333323"], 4, 4,
            note="upfamily obtained by lifting the short members of upqf_five"),
]

FIXTURES: dict[str, Fixture] = {f.name: f for f in _FIXTURES}


def get(name: str):
    """Build the named fixture object."""
    try:
        return FIXTURES[name].build()
    except KeyError:
        raise KeyError(f"unknown fixture {name!r}; try one of {sorted(FIXTURES)}") from None


def names() -> list[str]:
    return list(FIXTURES)
