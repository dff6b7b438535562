"""
Tabulating 2-bridge links
=========================

Every 2-bridge link is the closure of a rational tangle. Listing tangles by
crossing count and folding them into Schubert classes gives the table.
"""
from collections import Counter

from twobridge import canonicalize, compositions, enumerate_raw, eval_cf, tabulate, tabulate_range

# Continued fractions are read top-down: [2,1,4] = 2 + 1/(1 + 1/4)
print(eval_cf((2, 1, 4)))

# Seven crossings have 64 compositions; 20 of them close up into 2-component links
print(len(compositions(7)), len(enumerate_raw(7)))

# The 20 candidates collapse onto three classes
for cand in enumerate_raw(7):
    cls = canonicalize(*cand.pq)
    print(cand.form, cand.fraction, "->", (cls.p, cls.canonical_q))

# A class keeps all four equivalent q values and one chosen diagram
c = canonicalize(14, 5)
print(c.members, c.chosen_form, c.crossing_number)

for row in tabulate(8):
    print(row.p, row.q, row.form, row.raw_count)

counts = Counter(r.crossing_number for r in tabulate_range(11))
print(dict(sorted(counts.items())), sum(counts.values()))
