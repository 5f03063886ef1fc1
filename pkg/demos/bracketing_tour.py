"""
Bracketings of null words
=========================

Each t must pair with an opposite t so that the pairs nest.  Each pair
encloses a subword that evaluates to a free word.  The ratio measures how
long those contents get compared with the word itself.
"""

import torus
from torus import bracketing

phi = torus.bundled("fib")
w = torus.parse_group_word(phi.alphabet, "t^-1 a t b^-1 a^-1")

b = bracketing.canonical_bracketing(w, phi)
for br in b.brackets:
    print(br.open, br.close, phi.alphabet.format(br.content_value))
print("ratio", bracketing.content_bound_ratio(b))

# %%
# Recomputing the contents by nested evaluation confirms them.

print(bracketing.validate(b, phi).to_dict())

# %%
# With few stable letters every admissible matching can be tried.

w = torus.parse_group_word(phi.alphabet, "t^-1 t t^-1 a t b^-1 a^-1")
best, ratio = bracketing.optimal_bracketing_oracle(w, phi)
print("canonical", bracketing.content_bound_ratio(bracketing.canonical_bracketing(w, phi)))
print("optimal  ", ratio)

# %%
# The family t^-k a t^k phi^k(a)^-1 keeps its ratio below one.

a = torus.Word([1])
for k in range(1, 10):
    w = torus.GroupWord([-torus.T] * k + [1] + [torus.T] * k + list(~phi.power(a, k)))
    r = bracketing.content_bound_ratio(bracketing.canonical_bracketing(w, phi))
    print(k, len(w), r, float(r))
