"""Closed-form energies of standard families against computed values."""

from romanenergy.families import reports_to_csv, verify_family
from romanenergy.graph import FamilySpec

specs = (
    [FamilySpec("complete", n) for n in (3, 6, 9)]
    + [FamilySpec("star", n) for n in (3, 6, 9)]
    + [FamilySpec("bipartite", r) for r in (2, 3, 6)]
    + [FamilySpec("crown", k) for k in (3, 5, 8)]
    + [FamilySpec("spider", n) for n in (2, 4, 8)]
)

reports = [verify_family(s) for s in specs]
print(reports_to_csv(reports))

# K_{2,2} is the 4-cycle: its Roman domination number is 3, so the
# two-vertex construction with weight 4 is not a minimum function.
# For K_{3,3} several minimum functions exist with different energies.
for r in (2, 3):
    rep = verify_family(FamilySpec("bipartite", r), spread=True)
    print(f"K_{r},{r}: gamma_R = {rep.gamma_r}, energies over all minimum RDFs:", rep.energy_range)
