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
# # Twisted Gabidulin codes are MRD
#
# Build G(eta, r) over F_81 with k = 2 and confirm by exhaustion that every
# nonzero codeword has rank at least n - k + 1 = 3.  Then break the norm
# condition and watch the minimum distance drop.

# %%
from twistgab import ExtensionField, NotMRDError, TwistedCode, oracle_min_distance, oracle_singleton_check

F81 = ExtensionField(3, 4)
eta = next(x for x in F81.elements() if x and int(x.norm()) == 2)
print("eta =", eta, " N(eta) =", eta.norm())

# %%
for r in range(4):
    code = TwistedCode(F81, 2, eta, r)
    print(f"r={r}: min rank distance {oracle_min_distance(code)}, Singleton equality {oracle_singleton_check(code)}")

# %% [markdown]
# ## The norm obstruction
#
# With N(eta) = (-1)^(nk) the construction is refused.  Bypassing the check
# produces a code with a low-rank codeword.

# %%
bad = next(x for x in F81.elements() if x and int(x.norm()) == 1)
try:
    TwistedCode(F81, 2, bad, 0)
except NotMRDError as exc:
    print("refused:", exc)

broken = TwistedCode(F81, 2, bad, 0, validate=False)
print("unvalidated code min distance:", oracle_min_distance(broken))

# %% [markdown]
# Over F_2 every nonzero element has norm 1, so only eta = 0 survives.

# %%
F16 = ExtensionField(2, 4)
print({int(x.norm()) for x in F16.elements() if x})
