# ---
# jupyter:
#   jupytext:
#     formats: py:percent
#   kernelspec:
#     display_name: Python 3
#     language: python
#     name: python3
# ---

# %% [markdown]
# # Fields and linearized polynomials
#
# Arithmetic in F_{q^n}, the Frobenius map, the field norm, and the ring of
# linearized polynomials under composition.

# %%
import random

from twistgab import ExtensionField, LinearizedPoly, annihilator, moore_determinant

# %% [markdown]
# ## F_9 = F_3[beta] / (beta^2 + 1)
#
# The default modulus is the smallest monic irreducible polynomial.

# %%
F9 = ExtensionField(3, 2)
b = F9.gen
print(F9)
print("beta^2        =", b * b)
print("beta^3        =", b.frobenius(1))
print("N(beta)       =", b.norm())
print("elements      =", list(F9.elements()))
print("norm-2 count  =", sum(1 for x in F9.elements() if x.norm() == F9(2)))

# %% [markdown]
# ## Composition is not commutative

# %%
F81 = ExtensionField(3, 4)
a = F81.gen
ax = LinearizedPoly.monomial(F81, 0, a)
xq = LinearizedPoly.monomial(F81, 1)
print("(a x) o x^q =", ax * xq)
print("x^q o (a x) =", xq * ax)

# %% [markdown]
# ## Division and root spaces
#
# Left division recovers a right composition factor exactly.

# %%
rng = random.Random(0)
g = LinearizedPoly(F81, [F81.random_element(rng) for _ in range(3)])
h = LinearizedPoly(F81, [F81.random_element(rng) for _ in range(2)])
quot, rem = (g * h).divide_left(g)
print("quotient == h:", quot == h, " remainder:", rem)

# %% [markdown]
# The Moore-determinant polynomial of a subspace vanishes exactly on it, and
# its outer coefficients obey h_0 = (-1)^k h_k^q.

# %%
basis = [F81.gen, F81.gen**2 + 1]
h = annihilator(basis)
print("annihilator     :", h)
print("leading == Moore determinant:", h.coeffs[-1] == moore_determinant(basis))
print("kernel dimension:", len(h.kernel()))
print("h_0 == h_2^q    :", h.coeffs[0] == h.coeffs[2].frobenius(1))
