"""
Closed forms for checkerboard tableaux
======================================

A checkerboard tableau alternates two entries along its diagonals.  For
the (1,3) alternation the library evaluates the whole tableau in closed
form: a determinant whose entries are stair values — rational multiples
of powers of pi^4 and single odd zetas.
"""

from fractions import Fraction

from schurmzv.checkerboard import evaluate_checkerboard_13
from schurmzv.mzv import expand_tableau, richardson_extrapolate, truncated_mzv_float
from schurmzv.shapes import content_set, diagonal_tableau, make_skew
from schurmzv.symbolic import numeric_value, render

# The 3x3 square with 3 on even diagonals and 1 on odd ones:
#
#     3 1 3
#     1 3 1
#     3 1 3
#
shape = make_skew((3, 3, 3))
square = diagonal_tableau(
    shape, {c: 3 if c % 2 == 0 else 1 for c in content_set(shape)}
)

report = evaluate_checkerboard_13(square)

# The value comes out of a 3x3 determinant of complete-stair closed forms.
print("prefactor:", report.prefactor)
print("display matrix:")
for row in report.display_matrix:
    print("   ", " | ".join(f"{render(entry):>18}" for entry in row))

# P stands for pi^4, Z(k) for the single zeta value at k.
print("\nclosed form:", render(report.value))
print("weight:", report.weight)

value = numeric_value(report.value)
print("numeric value:", value)

# Cross-check against direct truncation: expand the tableau into chains,
# truncate each at a ladder of levels, and extrapolate.
flat = square.to_tableau()
combo = expand_tableau(flat)
print("\nchain expansion:", len(combo), "terms")
pts = []
for M in (256, 512, 1024):
    zm = sum(mult * truncated_mzv_float(idx, M) for idx, mult in combo.items())
    pts.append((M, zm))
    print(f"  truncation at M = {M:4d}: {zm:.9e}")
est = richardson_extrapolate(pts)
print(f"extrapolated: {est:.9e}")
print(f"difference from closed form: {abs(est - value):.2e}")

# Fraction sanity: the prefactor really is 1/32.
assert report.prefactor == Fraction(1, 32)
