"""Gate-count models next to the published tables.

The area model counts XOR2 chains for the check-bit and syndrome rows plus
AND2 match trees; delay follows the longest chain. Rows marked with an
asterisk are the ones where the printed figure and the matrix disagree.
"""

from secdaec import area, builtin, delay
from secdaec.complexity import render_table
from secdaec.registry import all_builtin

print(render_table(all_builtin(), "area"))
print()
print(render_table(all_builtin(), "delay"))

spec = builtin("24-16")
a = area(spec, "secded")
print(f"\n(24, 16) data-row weights {spec.data_row_weights}: "
      f"2*sum(w-1) + r + k = {a.xor2} XOR2, the published table prints 120")
print("daec adds r-1 XOR2 for the parity chain:", area(spec, "daec").xor2 - a.xor2)
print("critical path (14, 8) daec:", delay(builtin("14-8"), "daec").as_dict())
