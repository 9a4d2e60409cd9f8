"""Tour of the small commutative monoids.

Enumerates every isomorphism class up to order 4, matches each class against
the embedded catalog, and prints a few of the tables in the same layout the
catalog uses.
"""

from monodual import catalog, enumerate_commutative_monoids
from monodual.tables import render_table

# The number of isomorphism classes grows quickly: 1, 2, 5, 19, 78 for
# orders one to five.
for order in (1, 2, 3, 4, 5):
    report = enumerate_commutative_monoids(order)
    labels = ", ".join(report.catalog_labels) if report.catalog_labels else "beyond the catalog"
    print(f"order {order}: {report.count:3d} classes  ({labels})")

print()

# Each catalog entry records whether the class has an absorbing element
# (x + y = x for every y) or an almost absorbing one (absorbing against
# everything except itself).
for label in ("M1", "M2", "M6", "M19", "M25"):
    entry = catalog.entry(label)
    traits = []
    if entry.absorbing is not None:
        traits.append(f"absorbing element {entry.absorbing}")
    if entry.almost_absorbing is not None:
        traits.append(f"almost absorbing element {entry.almost_absorbing}")
    print(render_table(label, entry.table.rows))
    print("   " + ("; ".join(traits) if traits else "no absorbing structure"))
    print()

# The cyclic groups hide in the catalog as the last entry of each order.
for label in ("M2", "M7", "M26"):
    print(f"{label} is the cyclic group of order {catalog.entry(label).table.order}")
