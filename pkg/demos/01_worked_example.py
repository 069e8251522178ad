"""Nine-vertex worked example: RDF, matrix, exact polynomial, spectrum.

Run with ``python demos/01_worked_example.py``.
"""

from pathlib import Path

import romanenergy as rde
from romanenergy.roman import enumerate_min_rdfs
from romanenergy.spectral import poly_roots_check

g = rde.read_edge_list(Path(__file__).parent / "data" / "example_graph.txt")
print(f"n = {g.n}, m = {g.m}")

# The minimum Roman dominating function is unique here.
gamma_r, f = rde.min_roman_domination(g)
print("gamma_R =", gamma_r, " V2 =", f.v2, " V1 =", f.v1)
print("number of minimum RDFs:", len(enumerate_min_rdfs(g).rdfs))

a = rde.mrdd_for(g, f)
print("\nA_RDd =")
for row in a.to_list():
    print("  " + " ".join(f"{x:2d}" for x in row))

# Exact route: Faddeev-LeVerrier over the integers.
p = rde.char_poly(a)
print("\ncharacteristic polynomial:", p)

# Floating route: cyclic Jacobi.
s = rde.eigenvalues(a)
print("eigenvalues:", ", ".join(f"{x:.4f}" for x in s.eigenvalues))
print(f"energy = {s.energy:.10f}  ({s.sweeps} sweeps)")

check = poly_roots_check(p, s)
print(f"max normalised residual of the eigenvalues in p: {check.worst:.2e}")
