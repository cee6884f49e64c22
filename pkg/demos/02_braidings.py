"""Braiding matrices as integer exponents, and their diagrams."""
# %%
from nichols_zn import BraidingMatrix, DegreeLattice, canonical_form, gdd_of, permutation_similar
from nichols_zn.braiding import is_connected

B = BraidingMatrix(6, [[2, 1], [5, 3]])
G = gdd_of(B)
print(G)                      # vertices w^2, -1; edge w^(1+5) = 1, so no edge
print(is_connected(G))

C = BraidingMatrix(6, [[2, 1], [1, 3]])
print(gdd_of(C), is_connected(gdd_of(C)))

# %% relabeling vertices
D = BraidingMatrix(6, [[3, 5], [1, 2]])
print(permutation_similar(B, D))
print(canonical_form(D).exponents)

# %% the bicharacter on degrees
L = DegreeLattice(C)
print(L.chi((1, 1), (1, 0)), L.chi((2, 1), (1, 1)))
