"""PBW generators and dimensions of the rank-3 Nichols algebras."""
# %%
from nichols_zn import BraidingMatrix, CaseLabel, rank2_pbw_special, rank3_pbw
from nichols_zn.nichols import summarize

for label in (CaseLabel.Rank3_i, CaseLabel.Rank3_ii, CaseLabel.Rank3_iii):
    words = rank3_pbw(label)
    print(label, len(words), [str(w) for w in words])

print(summarize(CaseLabel.Rank3_i, 5).dimension)
print(summarize(CaseLabel.Rank3_iii, 4, 6).to_json())

# %% degrees of the class (ii) generators
for w in rank3_pbw(CaseLabel.Rank3_ii):
    print(str(w).ljust(36), w.degree(3))

# %% rank 2 with q11 = -1
print([str(w) for w in rank2_pbw_special(BraidingMatrix(6, [[3, 1], [0, 3]]))])
