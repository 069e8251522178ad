"""Moment identities and energy bounds, printed formula vs forced value."""

from pathlib import Path

from romanenergy import read_edge_list
from romanenergy.graph import FamilySpec, cycle, generate
from romanenergy.verify import audit_graph, compute_invariants, spider_remark_row

graphs = {
    "example": read_edge_list(Path(__file__).parent / "data" / "example_graph.txt"),
    "C5": cycle(5),
    "crown(4)": generate(FamilySpec("crown", 4)),
}

for label, g in graphs.items():
    print(f"== {label}")
    for row in audit_graph(g, label):
        mark = "holds " if row.holds else "FAILS "
        print(f"  {mark}{row.formula_id:<22} computed={row.computed:<14.6f} printed={row.printed}")

# The second moment picks up 4 per 2-labelled vertex on the diagonal,
# not 2, so the printed identity is short by exactly 2 * |V2|.
inv = compute_invariants(graphs["example"])
print("\nexample: |V2| =", inv.n2, " forced - printed =", 2 * inv.n2)

for n in (4, 6, 8):
    g = generate(FamilySpec("spider", n))
    row = spider_remark_row(f"spider({n})", n, compute_invariants(g))
    print(f"spider({n}): M computed {row.computed:.0f}, remark {row.printed:.0f}; {row.note}")
