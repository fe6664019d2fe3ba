"""Cutting a 64-symbol upcycle into families.

The upcycle for {0,1,2,3}^4 can be cut at any multiple of 8 (and at 0) and
the pieces, read as cyclic words, still cover every word exactly once.
"""

from uptori import fixtures
from uptori.construct import torus_from_family
from uptori.families import enumerate_slicings, slice_word, verify_family
from uptori.grids import verify_uptorus

word = fixtures.get("quaternary_upcycle")
rep = enumerate_slicings(word, 8, 4)
print(f"{rep.scanned} cut sets tried; {rep.valid_including_single} valid counting the uncut word, "
      f"{rep.valid_with_two_or_more} with at least two pieces")

F = slice_word(word, range(0, 64, 8))
print("\neight equal pieces:")
for m in F:
    print(" ", m)
print("upfamily:", verify_family(F, 4).is_upfamily)

t = torus_from_family(F, 4, 2)
r = verify_uptorus(t, (3, 4))
print(f"\nm(W) from the family: {t.rows}x{t.cols}, valid for 3x4 windows: {r.valid}, "
      f"diamondicity {r.diamondicity}")
