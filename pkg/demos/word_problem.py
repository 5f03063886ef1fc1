"""
Solving the word problem
========================

Every element of the group has a unique normal form t^s u with u a reduced
free word.  Folding a word left to right computes it.
"""

import torus

phi = torus.bundled("fib")
print(phi.to_dict())

# %%
# Conjugating a by t applies phi, so t^-1 a t is the element a b.

w = torus.parse_group_word(phi.alphabet, "t^-1 a t")
print(torus.normal_form(w, phi).format(phi.alphabet))

# %%
# Append b^-1 a^-1 and the word becomes trivial.

w = torus.parse_group_word(phi.alphabet, "t^-1 a t b^-1 a^-1")
nf, peak = torus.normal_form(w, phi, with_peak=True)
print(nf.format(phi.alphabet), "peak tail:", peak)
print(torus.is_identity(w, phi))

# %%
# Deeper conjugates grow like Fibonacci numbers.

for k in range(8):
    w = torus.GroupWord([-torus.T] * k + [1] + [torus.T] * k)
    print(k, len(torus.normal_form(w, phi).tail))

# %%
# A random word that is trivial in the group, reproducible from its seed.

z = torus.random_null_word(phi, "demo", 30)
print(torus.format_group_word(phi.alphabet, z))
print(torus.is_identity(z, phi))
