"""Re-verify every bundled vertex certificate and the three excluded graphs.

    python3 demos/reproduce_tables.py
"""
import time

from tperfect.certificates import bundled_corpus, load_excluded, verify_checksums, verify_corpus
from tperfect.graph6 import decode_graph6
from tperfect.polytope import format_vector, tight_constraints

ok = verify_checksums()
print("checksums:", ", ".join(f"{k} {'ok' if v else 'MISMATCH'}" for k, v in ok.items()))

t = time.perf_counter()
report = verify_corpus(bundled_corpus(), criticality=True, p6=True, excluded=load_excluded())
print(report.to_text())
print(f"\n{time.perf_counter() - t:.2f}s")

# one row in detail
c = bundled_corpus()[0]
print(f"\n{c.graph6} ({c.label}) at {format_vector(c.point)}:")
for con in tight_constraints(decode_graph6(c.graph6), c.point):
    print("  tight:", con.describe())
