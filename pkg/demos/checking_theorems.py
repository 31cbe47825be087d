"""
Checking extremal results on concrete graphs
============================================

Each verifier returns a report with a verdict, the work done and, on failure,
a counterexample that can be replayed.
"""

import json

from contagious import FamilySpec, gen_dc, gen_speed8
from contagious import verify as V

reports = [
    V.verify_mkk(6, 2),
    V.verify_mnn(5),
    V.verify_mk2(30, 3),
    V.verify_star_counterexample(10, 8),
    V.verify_star_counterexample(10, 7),
    V.verify_stop_lemma(gen_dc(8), 2),
    V.verify_speed(gen_speed8(), 2),
    V.verify_ore(FamilySpec("ore_groups", {"n": 12, "c": 4, "sizes": [2, 2, 2, 2]})),
]
for r in reports:
    print(f"{r.theorem_id:22s} {r.verdict:10s} {r.elapsed_ms:8.1f} ms  {r.scope}")

# refused reports explain themselves
print(reports[4].notes[0])

print(json.dumps(reports[5].work, indent=1))
