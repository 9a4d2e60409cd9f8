"""The duality-function census.

A duality function pairs two commutative monoids S and R through a value
monoid T: its columns enumerate the homomorphisms S -> T and its rows the
homomorphisms R -> T, with no repeats.  This script walks the machinery that
finds every such table on carriers up to order four.
"""

from monodual import (
    catalog,
    find_all_duality_quadruples,
    hom_set,
    is_reflexive,
    named_duality,
    reduce_duality_quadruples,
)
from monodual.tables import render_table

# Homomorphism sets form monoids of their own under pointwise addition.
s, t = catalog.monoid("M6"), catalog.monoid("M5")
adj = hom_set(s, t)
print(f"H(M6, M5) has {adj.size} elements:")
for h in adj.base:
    print("  ", h.values)
hit = catalog.catalog_lookup(adj.monoid())
print("as a monoid it is isomorphic to", hit[0].label)
print("M6 is reflexive with respect to M5:", is_reflexive(s, t))
print()

# The census: every (R, S, T) with R ~ H(S,T) and S ~ H(R,T) yields a
# duality function, 110 triples in all, collapsing to 22 essentially
# different tables after discarding non-minimal ones and quotienting by
# argument relabeling and transposition.
quads = find_all_duality_quadruples(4)
classes = reduce_duality_quadruples(quads)
print(f"{len(quads)} quadruples reduce to {len(classes)} classes:")
for c in classes:
    r = c.representative
    print(f"  {c.matched_name:7s} {r.s_label:4s} x {r.r_label:4s} -> {r.t_label}")
print()

# The highlight: a three-state duality between two different monoids.
psi5 = named_duality("psi5")
print(render_table("psi5", psi5.values))
print("rows indexed by M5, columns by M6, values in M5")
emb = catalog.REAL_EMBEDDINGS["M5"]
print("in signed coordinates (0 -> 1, 1 -> -1, 2 -> 0) the transpose reads:")
for row in psi5.transposed().values:
    print("  ", [emb[v] for v in row])
