"""Weyl reflections and the three finite rank-3 families."""
# %%
from nichols_zn import BraidingMatrix, GDD, classify, enumerate_rank3, weyl_orbit, weyl_reflect
from nichols_zn.classify import reflection_data
from nichols_zn.realize import lemma_2_2pp_system

A2 = BraidingMatrix(7, [[3, 4], [0, 3]])
print(reflection_data(GDD.from_edges(7, (3, 3), {(0, 1): 4}), 0))
print(weyl_reflect(A2, 0).exponents)

# %% one orbit: -1 with edges w^2 and w^-2 over Z_10
G = GDD.from_edges(10, (5, 5, 5), {(0, 1): 2, (0, 2): 8})
for H in weyl_orbit(G):
    print(H)

# %% verdicts
for G in [GDD.from_edges(6, (3, 3, 3), {(0, 1): 2, (1, 2): 2}),
          GDD.from_edges(7, (1, 1, 1), {(0, 1): 6, (0, 2): 6}),
          lemma_2_2pp_system(4, 3, 1, 1, 12).gdd(),
          lemma_2_2pp_system(5, 5, 1, 4, 10).gdd()]:
    v = classify(G)
    print(G, v.label, v.m, v.m2)

# %% everything finite over Z_6
for v in enumerate_rank3(6):
    print(v.gdd, v.label, v.witness)
