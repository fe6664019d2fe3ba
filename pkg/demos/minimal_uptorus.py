"""The smallest binary uptorus for 2x2 windows, found by search.

A 3x3 torus cannot work: with no diamonds it has 9 windows for 16 patterns,
and any two diamonds already share a window.  At 3x4 exactly one class
survives, and unrolling it gives a 4x5 upmatrix.
"""

from uptori import fixtures
from uptori.grids import MATRIX, TORUS, canonical_form, unroll_torus, verify_upmatrix
from uptori.search import SearchSpec, search

none = search(SearchSpec(2, (2, 2), (3, 3), TORUS))
print(f"3x3 tori: {none.raw_count} solutions ({none.nodes_explored} nodes)")

cat = search(SearchSpec(2, (2, 2), (3, 4), TORUS))
print(f"3x4 tori: {cat.raw_count} solutions in {cat.canonical_count} class")
(rep,) = cat.solutions
print(rep, end="\n\n")

minimal = fixtures.get("minimal")
print("matches the known minimal torus:", canonical_form(minimal, (2, 2)) == rep)

flat = unroll_torus(minimal, (2, 2))
print(f"unrolled to {flat.rows}x{flat.cols}, valid upmatrix: {verify_upmatrix(flat, (2, 2)).valid}")
print(flat)

cat = search(SearchSpec(2, (2, 2), (3, 5), MATRIX))
print(f"\n3x5 upmatrices: {cat.raw_count} raw, {cat.canonical_count} up to symmetry")
