"""Solutions of the set-theoretic Yang–Baxter equation from braces, their rack
form, and the correspondence between racks and solutions (y, x*y)."""

from brace_forge import braces as br
from brace_forge import symmetric
from brace_forge import ybe

S3 = symmetric(3)
for name, A in [("trivial", br.trivial_brace(S3)), ("opposite", br.opposite_brace(S3))]:
    S = ybe.solution_from_brace(A)
    rep = ybe.verify_solution(S)
    rf = ybe.rack_form(S)
    print(f"{name} brace on S3: solution={rep.ok} involutive={bool(rep.involutive)} "
          f"rack={rf.rack_report.is_rack if rf.rack_report else None} "
          f"quandle={bool(rf.rack_report.quandle) if rf.rack_report else None}")

for n in (3, 5):
    rep = ybe.verify_solution(ybe.shift_flip(n))
    print(f"(y+1, x) on Z/{n}: solution={rep.ok} involutive={bool(rep.involutive)}")
    rr = ybe.rack_quandle_check(ybe.shift_rack(n).table)
    print(f"  y*x = y+1: rack={rr.is_rack} quandle={bool(rr.quandle)}")

print("rack <=> braid on all tables of order 3:", bool(ybe.rack_iff_sweep(3)))
