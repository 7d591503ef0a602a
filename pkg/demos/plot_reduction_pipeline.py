"""
From a 3-CNF formula to a weighted Mirkin instance
==================================================

Each stage is checked against a truth table so the equivalences are visible.
"""

from mirkin import BitString, CnfFormula, mirkin_total
from mirkin.reduction import (decode_assignment, reduce_3sat_to_nae,
                              reduce_nae_to_mirkin)
from mirkin.solver import solve_brute
from mirkin.verifier import truth_table_satisfiable

phi = CnfFormula.from_ints(3, [[1, -2, 3], [-1, 2, 3]])
print(phi.to_dimacs())

# One fresh variable per clause and one shared variable z.
psi = reduce_3sat_to_nae(phi)
print(psi.to_dimacs())
print("SAT:", truth_table_satisfiable(phi), " NAE:", truth_table_satisfiable(psi))

# Variables are padded to 2^ell + 1 and every string is doubled in length.
inst, cert = reduce_nae_to_mirkin(psi)
print(cert.to_text())
print(len(inst.strings), "distinct strings,", inst.m, "with multiplicity")

result = solve_brute(inst)
print("optimum", result.value, "budget", cert.k, "->",
      "YES" if result.value <= cert.k else "NO")

# The optimum is doubled, so it decodes back to an NAE assignment.
values, doubled = decode_assignment(result.argmin)
print("decoded", values[:psi.num_vars], "doubled:", doubled,
      "satisfies:", psi.satisfied_by(values[:psi.num_vars]))

# Breaking one pair costs the gadget gap many times over.
broken = BitString(inst.n, result.argmin.value ^ (1 << (inst.n - 1)))
print("one broken pair costs", mirkin_total(broken, inst) - result.value, "more")
