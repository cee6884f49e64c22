"""Quadratic congruences modulo composite numbers.

Factor the modulus, solve per prime power (Hensel lifting where the
derivative is a unit, plain enumeration otherwise), glue with CRT.
"""
# %%
from nichols_zn import QuadCongruence, crt_combine, factorize, hensel_lift, legendre, solve_quadratic
from nichols_zn.modarith import sqrt_mod_prime_power

print(factorize(360).as_dict())

# %% Legendre symbols decide square roots mod an odd prime
for p in (5, 7, 11, 13):
    print(p, legendre(-3, p), list(sqrt_mod_prime_power(-3 % p, p, 1)))

# %% lifting a root of x^2 + x + 1 from mod 7 to mod 7^4
x = hensel_lift((1, 1, 1), 2, 7, 4)
print(x, (x * x + x + 1) % 7**4)

# %% roots mod 12 are pairs of roots mod 4 and mod 3
q = QuadCongruence(4, -9, 8, 12)
print(q, list(solve_quadratic(q)))
print(crt_combine([(0, 4), (1, 3)]))

# x^2 + 3x + 7 has no root mod 14 (no root mod 7)
print(list(solve_quadratic(QuadCongruence(1, 3, 7, 14))))

# %% x^2 = 3 is solvable mod 3 but not mod 9, so roots mod p do not always lift
print(list(solve_quadratic(QuadCongruence(1, 0, -3, 3))), list(solve_quadratic(QuadCongruence(1, 0, -3, 9))))
