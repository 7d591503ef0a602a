"""
The half/half gadget
====================

build(ell) returns 2^ell strings of length 2^ell in which every pair of
positions agrees on exactly half of the strings.
"""

import numpy as np

from mirkin.gadget import build, check_half_half

for ell in (1, 2, 3):
    fam = build(ell)
    print(f"ell = {ell}")
    for s in fam.strings:
        print("   ", s)

# Rows as a 0/1 matrix: the agreement count for columns i, j is a dot product.
fam = build(4)
a = np.array([list(s) for s in fam.strings])
signs = 1 - 2 * a
agree = (len(a) + signs.T @ signs) // 2
off = agree[~np.eye(a.shape[1], dtype=bool)]
print("ell = 4 agreement counts:", sorted(set(off.tolist())), "of", len(a))

print(check_half_half(fam))
