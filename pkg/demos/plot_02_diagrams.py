"""
Diagrams from continued fractions
=================================

Each expansion builds a planar diagram out of twist regions. The diagram is
stored as a PD code; the Gauss code reads off the over/under sequence.
"""
from twobridge import build_diagram, component_count, gauss_code, mirror, parse_pd

d = build_diagram((2, 1, 2))
print(d)
print(gauss_code(d))
print(component_count(d))

# Even numerator <-> two components
for form in [(3,), (4,), (2, 1, 2), (2, 2, 2), (3, 1, 3)]:
    print(form, component_count(build_diagram(form)))

# PD codes round-trip through text
e = parse_pd(str(d))
assert e == d

m = mirror(d)
print(gauss_code(m))
