"""
Solving a tiny consensus instance three ways
============================================

Three strings of length four, each standing for a bipartition of four items.
We look for the string closest to all of them in total Mirkin distance.
"""

from itertools import product

from mirkin import (BitString, MirkinInstance, build_ilp, column_types,
                    mirkin_total, solve_brute, solve_ilp, solve_types)

inst = MirkinInstance.from_strings(["0000", "0001", "1110"])

# The Mirkin distance only depends on the Hamming distance d: d * (n - d).
for s, _ in inst.strings:
    print(s, [mirkin_total(s, MirkinInstance(((t, 1),))) for t, _ in inst.strings])

# Exhaustive search over half the cube; complements cost the same.
print("brute ", solve_brute(inst))

# Columns 1-3 agree on every input string, so there are only two column types.
summary = column_types(inst)
print("types ", summary.types, "sizes", summary.e)
for x in product((0, 1), repeat=summary.n_types):
    print("  x =", x, "->", summary.decode(x), mirkin_total(summary.decode(x), inst))
print("types ", solve_types(inst))

# The same search phrased as a 0/1 program with one product variable.
model = build_ilp(inst)
print("ilp   ", model.constant, model.linear, model.quadratic)
print("ilp   ", solve_ilp(model))
