"""An uptorus whose windows do not all hold the same number of diamonds.

Lifting replaces a short cyclic word by a copies of itself with its diamonds
filled in, covering the same words.  Lifting the short members of a
quasi-family evens out the lengths, and the resulting upfamily builds a
128000x32 torus with 0 to 3 diamonds per 3x4 window.
"""

import numpy as np

from uptori import fixtures
from uptori.construct import build_no_diamondicity, lift, lift_family
from uptori.grids import verify_uptorus, window_diamond_counts

w = fixtures.get("lift_input")
print(f"lift({w}) = {lift(w, 4)}")

quasi = fixtures.get("upqf_five")
print("\nquasi-family lengths:", quasi.lengths)
lifted = lift_family(quasi, 4)
print("lifted lengths:      ", lifted.lengths)

t = build_no_diamondicity(quasi, 4, 2)
rep = verify_uptorus(t, (3, 4))
counts = np.bincount(window_diamond_counts(t, (3, 4)).ravel())
print(f"\ntorus {t.rows}x{t.cols}, valid: {rep.valid}, diamondicity: {rep.diamondicity}")
for k, n in enumerate(counts):
    print(f"  windows with {k} diamonds: {n}")
