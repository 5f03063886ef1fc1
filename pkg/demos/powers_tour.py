"""
Passing to a power of t
=======================

A word whose t-exponent is a multiple of p can be rewritten over the free
letters and tau = t^p.  Free letters are moved onto the lattice of heights
divisible by p, at the price of applying powers of phi.
"""

import torus
from torus import powers

phi = torus.bundled("fib")
w = torus.parse_group_word(phi.alphabet, "t a t a t^-1 a t^-1")

d = powers.lattice_decompose(w, 2)
print(d.heights())
for pc in d.pieces:
    print(pc.kind, torus.format_group_word(phi.alphabet, pc.letters), pc.start_height, pc.end_height)

# %%

r = powers.rewrite_power(w, phi, 2)
for key, value in r.format(phi.alphabet).items():
    print(key, value)

# %%
# Both words are the same element of the group.

print(torus.normal_form(w, phi).format(phi.alphabet))
print(torus.normal_form(powers.expand_tau(r.result, 2), phi).format(phi.alphabet))

# %%
# p = 1 changes nothing.

print(torus.format_group_word(phi.alphabet, powers.rewrite_power(w, phi, 1).result))
