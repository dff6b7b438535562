"""
Splitting numbers
=================

A link whose class has an expansion C(2a1, b1, 2a2, ..., 2ak) can be split
by changing |a1| + ... + |ak| crossings, and this is sharp.
"""
from twobridge import canonicalize, match_pattern, splitting_number, tabulate_range

print(match_pattern((2, 1, 4)))
print(match_pattern((3, 3)))

sp, cert = splitting_number(canonicalize(12, 5))
print(sp, cert.pattern_form, cert.a_values)

# Which classes up to 11 crossings have a certificate?
for row in tabulate_range(11):
    res = splitting_number(row.link_class, row.crossing_number)
    if res and res[0] >= 4:
        print(row.crossing_number, (row.p, row.q), row.form, res[0])
