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
# # Decoding twisted Gabidulin codes
#
# Walk through the interpolation decoder on a single corrupted word, then run
# many trials and compare against exhaustive nearest-codeword search.

# %%
import random
import statistics
import time

from twistgab import ExtensionField, TwistedCode, oracle_nearest, random_error
from twistgab.rank_metric import add_words, rank_norm

F81 = ExtensionField(3, 4)
eta = next(x for x in F81.elements() if x and int(x.norm()) == 2)
code = TwistedCode(F81, 2, eta, r=3)  # r = t + k mod n for t = 1
rng = random.Random(1)

msg = [F81.random_element(rng) for _ in range(2)]
err = random_error(F81, 1, rng)
word = add_words(code.encode(msg), err)
print("message :", msg)
print("error rank:", rank_norm(err))

# %% [markdown]
# ## Step by step at t = 1
#
# The interpolation system has 2n - 2t - k + 2 = 6 unknowns and n = 4
# equations, so its nullspace has dimension at least 2.

# %%
t = 1
sols = code.interpolation_solutions(word, t)
print("nullspace dimension:", len(sols))
for p1, p2 in sols:
    print("  division gives:", code.divide_candidate(p1, p2, word, t))

# %% [markdown]
# When division fails, f_0 comes from the ratio of extreme coefficients.  It
# is a root of a quadratic; each root is tried by stripping the f_0 terms and
# decoding the rest as a Gabidulin code of dimension k - 1.

# %%
cands = list(code.f0_candidates(sols, t))
print("f_0 candidates:", cands, " true f_0:", msg[0])
for f0 in cands:
    print("  ", f0, "->", code.strip_and_decode(f0, word, t))

# %%
print("decode(word) == message:", code.decode(word) == msg)

# %% [markdown]
# ## Against the exhaustive oracle

# %%
agree = 0
for _ in range(50):
    m = [F81.random_element(rng) for _ in range(2)]
    w = add_words(code.encode(m), random_error(F81, 1, rng))
    agree += code.decode(w) == oracle_nearest(code, w).message == m
print(f"{agree}/50 decoder outputs equal the unique nearest codeword")

# %% [markdown]
# ## Scaling with n
#
# Median decode time at the full decoding radius with r = t + k mod n.

# %%
for n in (4, 6, 8):
    field = ExtensionField(3, n)
    e = next(x for x in field.elements() if x and int(x.norm()) != 1)
    radius = (n - 2) // 2
    c = TwistedCode(field, 2, e, (radius + 2) % n)
    times = []
    for _ in range(15):
        m = [field.random_element(rng) for _ in range(2)]
        w = add_words(c.encode(m), random_error(field, radius, rng))
        start = time.perf_counter()
        assert c.decode(w) == m
        times.append(time.perf_counter() - start)
    print(f"n={n}: median {statistics.median(times) * 1e3:.1f} ms")
