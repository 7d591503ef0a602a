"""
Handing the linearized program to an external solver
====================================================

export_lp writes CPLEX LP text. If highspy is installed we solve it and add
back the objective constant, which the file only records as a comment.
"""

import tempfile
from pathlib import Path

from mirkin import MirkinInstance, build_ilp, export_lp, solve_types

inst = MirkinInstance.from_strings(["0110011", "0101010", "1100110", "0001111"])
model = build_ilp(inst)
text = export_lp(model)
print(text)

try:
    import highspy
except ImportError:
    highspy = None

if highspy is not None:
    with tempfile.TemporaryDirectory() as tmp:
        path = Path(tmp) / "model.lp"
        path.write_text(text)
        h = highspy.Highs()
        h.setOptionValue("output_flag", False)
        h.readModel(str(path))
        h.run()
        value = round(h.getInfo().objective_function_value) + model.constant
    print("HiGHS optimum  ", value)
print("types optimum  ", solve_types(inst).value)
