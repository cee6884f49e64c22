"""Connected rank-2 braidings over Z_n with finite-dimensional Nichols algebra."""
# %%
from collections import Counter

from nichols_zn import GDD, classify, enumerate_rank2

for n, d, e in [(12, (4, 8), 9), (7, (6, 6), 1), (10, (5, 5), 2), (4, (2, 2), 2)]:
    v = classify(GDD.from_edges(n, d, {(0, 1): e}))
    print(v.gdd, v.label, v.witness)

# %% counts per modulus
for n in range(2, 19):
    c = Counter(str(v.label) for v in enumerate_rank2(n))
    print(n, sum(c.values()), dict(sorted(c.items())))

# %% the full list over Z_8
for v in enumerate_rank2(8):
    print(v.gdd, v.label)
