"""
Bracket and identification
==========================

The Kauffman bracket comes from a vectorised sum over all 2^n smoothings.
Normalising by writhe, for both relative orientations, plus a Tait-graph
profile gives a key that picks out each link in the table.
"""
import numpy as np

from twobridge import build_diagram, canonicalize, identification_key, identify_class, kauffman_bracket, shipped_table
from twobridge.invariants import smoothing_profile, state_counts

hopf = build_diagram((2,))
print(kauffman_bracket(hopf))

# At A = exp(i pi/4) the bracket has modulus equal to the determinant p
d = build_diagram((2, 1, 4))
val = kauffman_bracket(d)(np.exp(1j * np.pi / 4))
print(abs(val))

# Raw state counts: how many states have k A-smoothings and l loops
print(state_counts(d).shape)

# The bracket alone cannot tell these two apart; the profile can
a, b = build_diagram(canonicalize(98, 27).chosen_form), build_diagram(canonicalize(98, 41).chosen_form)
print(identification_key(a).bracket_part == identification_key(b).bracket_part)
print(smoothing_profile(a) == smoothing_profile(b))

table = shipped_table()
print(len(table))
for p, q in [(8, 3), (14, 3), (38, 7), (98, 27), (98, 41)]:
    hit = identify_class(canonicalize(p, q), table)
    print((p, q), hit.matched_id, hit.status)
