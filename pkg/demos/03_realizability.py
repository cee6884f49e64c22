"""Which braidings come from Yetter-Drinfeld modules over Z_n.

A braiding is realizable when a_ij = x_i * y_j (mod n) for some vectors
x, y.  At the diagram level only x_i y_i and x_i y_j + x_j y_i matter.
"""
# %%
from nichols_zn import GDD, BraidingMatrix, oracle_realize, rank2_solve, realize_gdd, realize_matrix
from nichols_zn.realize import BilinearSystem, lemma_2_2pp_solvable, normal_form

print(realize_matrix(BraidingMatrix(2, [[1, 1], [1, 1]])))
print(realize_matrix(BraidingMatrix(4, [[2, 1], [1, 2]])))

# %% rank 2: one quadratic congruence decides most cases
w = rank2_solve(2, 3, 5, k=1, s=1, m=6)
print(w, w.matrix().exponents)

# %% ...but not all; here neither vertex exponent is a unit mod 12
S = BilinearSystem.from_targets(12, (3, 4), {(0, 1): 6})
print(normal_form(S), rank2_solve(3, 4, 6, 1, 1, 12), oracle_realize(S))

# %% rank 3
chain = GDD.from_edges(6, (2, 3, 3), {(0, 1): 2, (0, 2): 4})
print(chain, realize_gdd(chain))
row1 = GDD.from_edges(7, (1, 1, 1), {(0, 1): 6, (0, 2): 6})
print(row1, realize_gdd(row1))

# %% -1 joined to q and r: arithmetic test for the orders m, m'
for args in [(5, 5, 1, 4), (5, 5, 1, 1), (4, 3, 1, 1), (2, 2, 1, 1), (6, 3, 1, 1)]:
    print(args, lemma_2_2pp_solvable(*args))
