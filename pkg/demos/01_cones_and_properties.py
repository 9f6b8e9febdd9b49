"""
Cones and order properties
==========================

Build a small poset from its covering pairs, look at lower and upper cones,
and run the property checkers on a non-lattice and on a built-in example.
"""

from posetres import from_covers, is_distributive, is_modular, load_fixture
from posetres.properties import full_report

# The "bowtie": two minimal and two maximal elements, every bottom below every top.
# It is not a lattice, since {a, b} has two minimal upper bounds.
p = from_covers(["a", "b", "c", "d"], [("a", "c"), ("a", "d"), ("b", "c"), ("b", "d")])
print("lattice:", p.is_lattice())

# Element sets are bitmasks; p.mask turns labels into one
ab = p.mask("a", "b")
print("U(a,b) =", p.labels(p.upper_cone(ab)))
print("L(U(a,b)) =", p.labels(p.lower_cone(p.upper_cone(ab))))
print("Min U(a,b) =", p.labels(p.minimal(p.upper_cone(ab))))

# The empty set has the whole carrier as its cone
print("L(empty) =", p.labels(p.lower_cone(0)))

# Distributivity and modularity are LU-identities, so they make sense without meets
print(is_distributive(p).describe())
print(is_modular(p).describe())

# A larger example with a unary operation: every report at once.
# Modularity fails and the report names a witness triple.
entry = load_fixture("fig3")
q = entry.poset
for report in full_report(q, entry.unary(q)):
    print()
    print(report.describe())
