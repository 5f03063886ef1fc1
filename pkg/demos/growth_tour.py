"""
Orbit growth
============

Track the length of phi^i(w) for i up to N.  The question is whether the
middle of an orbit can be long while both ends stay short.
"""

from fractions import Fraction

import torus
from torus import growth

fib = torus.bundled("fib")
tab = growth.growth_table(fib, fib.alphabet.parse("a b^-1"), 8)
print(tab.to_tsv())
print("k_emp", tab.k_emp)

# %%
# psi fixes b, so orbits can shrink before they grow in either direction.

psi = torus.bundled("psi")
w = psi.alphabet.parse("a b^-1 b^-1")
print(growth.orbit_lengths(psi, w, 6), growth.orbit_lengths(psi.inverse, w, 6))

# %%
# Exhaustive constants over all short words and horizons.

for name in ("permutation", "fib", "psi", "rank3"):
    phi = torus.bundled(name)
    print(name, growth.k_exhaustive(phi, 5, 8), growth.k_exhaustive(phi, 5, 8, "cyclic"))

# %%
# A random corpus at twice the exhaustive constant.

k = growth.k_exhaustive(fib, 6, 8, "cyclic")
rep = growth.check_brinkmann(fib, 2 * k, seed=1, count=2000)
print(rep.K, rep.checked, rep.ok)
print(growth.check_brinkmann(fib, Fraction(1, 3), seed=1, count=200).violations[:3])
