"""
Stacks of corridors
===================

Start from a coloured path, apply the map, tighten, and repeat.  Every edge
remembers which edge below produced it, so the whole history can be traced.
"""

import torus
from torus import stack

f = torus.rose_of(torus.bundled("fib"))
a = f.alphabet
d = stack.build_stack(f, [a.parse("a b"), a.parse("a^-1")], 4)

for k, row in enumerate(d.rows):
    print(k, a.format(d.labels(row.bottom)), "->", a.format(d.labels(row.top)))

# %%
# Corridor lengths, and the cancellations of each step.

print(stack.corridor_lengths(d))
for k, row in enumerate(d.rows):
    print(k, [("internal" if c.internal else "boundary", c.phase) for c in row.log])

# %%
# Colour intervals on the last top, and where one bottom edge ends up.

for iv in stack.colour_intervals(d, len(d.rows) - 1, top=True):
    print(iv)
print(stack.trace_future(d, 0)[:10])
print(stack.check_stack(d))

# %%
# Bounded cancellation, estimated from tight paths of growing length.

for name in ("fib", "psi", "rank3", "permutation"):
    g = torus.rose_of(torus.bundled(name))
    print(name, stack.bcc_profile(g, 5))

# %%
# Graphviz output for rendering elsewhere.

print(d.to_dot()[:300])
