"""Semiring structures on the small commutative monoids.

For a fixed additive monoid, searches every multiplication table that
satisfies the semiring axioms (unit, absorbing zero, associativity,
distributivity) and reports one representative per isomorphism class.
"""

from monodual import catalog, enumerate_semiring_multiplications, one_generates_addition
from monodual.tables import render_table

# M15 is the four-element chain under max; it carries 13 semiring classes,
# two of which have a non-commutative multiplication (N1 and N2).
add = catalog.monoid("M15")
classes = enumerate_semiring_multiplications(add)
print(f"M15 carries {len(classes)} semiring structures:")
for cls in classes:
    comm = "commutative" if cls.semiring.mul_monoid().is_commutative() else "NON-commutative"
    gen = "1 generates +" if one_generates_addition(cls.semiring) else ""
    print(f"  multiplication ~ {cls.mult_label:3s}  unit {cls.semiring.one}  {comm} {gen}")

print()

# Some additive monoids admit no semiring structure at all.
for label in ("M5", "M12", "M16", "M18", "M19"):
    n = len(enumerate_semiring_multiplications(catalog.monoid(label)))
    print(f"{label}: {n} semiring structures")

print()

# The four-element field: addition M25 (the Klein group), multiplication
# isomorphic to M18 (a cyclic group of order three plus the zero).
field = catalog.semiring("M25", "M18")
print(render_table("F4*", field.mul.rows))
print("unit generates addition:", one_generates_addition(field))
