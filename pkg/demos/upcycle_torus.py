"""Stacking rotations of an upcycle into an uptorus, then finding a window in it.

Row n of m(u, s) is u rotated by s_0 + ... + s_n.  With u = 001*110* and a
De Bruijn cycle s over {0..7}^2, every binary 3x4 matrix appears exactly once.
The locator finds any of them from u and s alone.
"""

import sys
from pathlib import Path

from uptori import fixtures
from uptori.construct import build_m_us, certify_m_us, locate
from uptori.formats import render_ppm
from uptori.grids import subarray

u, s = fixtures.get("u4"), fixtures.get("s64")
t = build_m_us(u, s)
rep = certify_m_us(u, s, 4, 2)
print(f"m(u, s) is {t.rows}x{t.cols}; uptorus for 3x4 windows: {rep.valid}, "
      f"diamondicity {rep.diamondicity}")

P = fixtures.get("locate_P")
print(f"\nlocating\n{P}")
p = locate(P, u, s)
print(f"row rotations {p.rotations}, differences {p.differences}")
print(f"window at row {p.row}, column {p.col}:")
print(subarray(t, p.row, p.col, (3, 4)))

out = Path(sys.argv[1] if len(sys.argv) > 1 else "m_u4_s64.ppm")
out.write_bytes(render_ppm(t, scale=4, transpose=True))
print(f"\nwrote {out} (diamonds in red)")
