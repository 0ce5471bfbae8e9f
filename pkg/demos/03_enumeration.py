"""Sweep every (pi1 | pi2) pair of a chosen type and tabulate the results:
split Dynkin diagrams, dimensions, centers, and which mechanism (rigidity or
the center formula) accounts for the cohomology.

Run from the repository root:  python demos/03_enumeration.py [TYPE] [RANK]
"""

import sys

from seaweedcoh.cli import _all_specs, _ambient, verify_report
from seaweedcoh.seaweed import build_seaweed, render_split_dynkin

type_label = sys.argv[1] if len(sys.argv) > 1 else "A"
rank = int(sys.argv[2]) if len(sys.argv) > 2 else 2

g = _ambient(type_label, rank)
rows = []
for spec in _all_specs(type_label, rank):
    if spec.rank != rank:
        continue
    sw = build_seaweed(g, spec)
    rep = verify_report(sw, spec, max_degree=3)
    rows.append((spec, sw, rep))

indec = sum(1 for _, _, r in rows if r["indecomposable"])
print(f"type {type_label}{rank}: {len(rows)} seaweeds, "
      f"{indec} indecomposable, {len(rows) - indec} decomposable\n")

for spec, sw, rep in rows:
    p1, p2 = sorted(spec.pi1), sorted(spec.pi2)
    h = [r["cohomology"] for r in rep["cohomology"]]
    tag = "rigid" if rep["indecomposable"] else \
        f"center dim {rep['dims']['center']}"
    status = "ok" if rep["ok"] else "DISCREPANCY"
    print(f"pi1={p1} pi2={p2}: dim {sw.dim}, {tag}, "
          f"H^0..3 = {h}, {status}")

print("\nexample split Dynkin diagram for the last pair:")
print(render_split_dynkin(rows[-1][0]))
