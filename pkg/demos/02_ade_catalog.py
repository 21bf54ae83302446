"""The ADE threefold singularity catalog.

Each ADE equation x^2 + y^2 + (z, w)-part becomes xy + g(z, w) after a
linear change of coordinates; the stored germs g are classified from
scratch and must reproduce the catalog's branch numbers and local class
groups exactly.
"""

from kminusone import FinAbGroup, ade_germ, ade_labels, ade_lookup, \
    classify_cAn, render_polynomial

print("type | germ g(z, w)   | cA_n | br | Cl(A)")
print("-----+----------------+------+----+------")
for family, index in ade_labels(range(1, 4)):
    germ = ade_germ(family, index)
    got = classify_cAn(germ)
    catalog = ade_lookup(family, index)
    assert (got.br, got.cl_rank) == (catalog.br, catalog.cl_rank)
    cl = FinAbGroup.free(got.cl_rank)
    print(f"{family}{index:<4} | {render_polynomial(germ):<14} | "
          f"cA_{got.n}  | {got.br}  | {cl}")

print()
print("Branch number 1 (A_even, E6, E8) means the germ is irreducible:")
print("such points have trivial local class group, contribute nothing to")
print("L, and never obstruct a Kawamata type decomposition by themselves.")
