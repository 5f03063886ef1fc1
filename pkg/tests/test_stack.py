import random

import pytest

import torus
from torus.graphmap import GraphMap, rose_of
from torus.growth import random_word
from torus.stack import (
    bcc_profile,
    build_stack,
    check_stack,
    colour_intervals,
    corridor_lengths,
    dying_intervals,
    estimate_bcc,
    trace_future,
    trace_past,
)
from torus.words import Word, concat

a, b = 1, 2
A, B = -1, -2


def brute_bcc(f, depth):
    """Oracle: every tight pair u.v with |u|, |v| <= depth, cancellation counted directly."""
    g = f.graph
    paths = [()]
    layer = [()]
    for _ in range(depth):
        layer = [p + (e,) for p in layer for e in g.oriented_edges()
                 if not p or (e != -p[-1] and g.terminus(p[-1]) == g.origin(e))]
        paths += layer
    paths = paths[1:]
    best = 0
    for u in paths:
        fu = f(u)
        for v in paths:
            if u[-1] == -v[0] or g.terminus(u[-1]) != g.origin(v[0]):
                continue
            fv = f(v)
            best = max(best, (len(fu) + len(fv) - len(concat(fu, fv))) // 2)
    return 1 + best


@pytest.fixture
def fib_stack(fib):
    return build_stack(rose_of(fib), [(a,), (b,)], 2)


@pytest.fixture
def psi_stack(psi):
    return build_stack(rose_of(psi), [(a,), (B,)], 1)


def test_fibonacci_rows(fib_stack):
    d = fib_stack
    bottoms = [d.labels(r.bottom) for r in d.rows]
    assert bottoms == [(a, b), (a, b, a), (a, b, a, a, b)]
    assert all(not r.log for r in d.rows)
    assert corridor_lengths(d) == ([2, 3, 5], 5)


def test_psi_rows(psi_stack):
    d = psi_stack
    assert d.labels(d.rows[0].top) == (a,)
    assert len(d.rows[0].log) == 1
    pair = d.rows[0].log[0]
    assert not pair.internal and pair.phase == 2
    assert corridor_lengths(d) == ([2, 1], 2)
    # the b^-1 edge of colour 1 has no future
    dead = d.rows[0].bottom[1]
    assert trace_future(d, dead) == []


def test_base_case(psi):
    d = build_stack(rose_of(psi), [(a, B)], 0)
    assert len(d.rows) == 1
    assert d.labels(d.rows[0].top) == (a,)
    # one colour: the cancellation happens inside it
    assert d.rows[0].log[0].internal and d.rows[0].log[0].phase == 1


def test_colour_intervals(fib_stack, psi_stack, fib):
    ivs = colour_intervals(fib_stack, 1)
    assert [(iv.colour, iv.start, iv.end) for iv in ivs] == [(0, 0, 1), (1, 2, 2)]
    one = build_stack(rose_of(fib), [(a, b, A)], 3)
    for k in range(4):
        ivs = colour_intervals(one, k)
        assert len(ivs) == 1 and ivs[0].start == 0 and ivs[0].end == len(one.rows[k].bottom) - 1
    ivs = colour_intervals(psi_stack, 1)
    assert [(iv.colour, iv.start, iv.end) for iv in ivs] == [(0, 0, 0)]


def test_trace(fib_stack):
    d = fib_stack
    root = d.rows[0].bottom[0]
    assert trace_past(d, root) == []
    future = trace_future(d, root)
    for r in d.rows[1:]:
        assert any(i in future and d.edges[i].label == a for i in r.bottom)
    leaf = d.rows[2].bottom[0]
    assert trace_past(d, leaf) == [d.rows[1].bottom[0], root]
    with pytest.raises(KeyError):
        trace_future(d, 10 ** 6)


def test_check_stack_clean(fib_stack, psi_stack):
    assert check_stack(fib_stack) == []
    assert check_stack(psi_stack) == []


def test_build_stack_errors(fib):
    f = rose_of(fib)
    with pytest.raises(ValueError, match="tight"):
        build_stack(f, [(a,), (A,)], 1)
    with pytest.raises(ValueError):
        build_stack(f, [(a,)], -1)


def test_identity_stack_constant(rng):
    f = rose_of(torus.bundled("identity"))
    rho = random_word(rng, 2, 7)
    d = build_stack(f, [rho], 5)
    assert corridor_lengths(d) == ([7] * 6, 7)


def test_non_rose_stack():
    f = GraphMap.from_dict({
        "vertices": ["v", "w"],
        "edges": {"x": ["v", "w"], "y": ["v", "w"], "z": ["v", "w"]},
        "vertex_image": {"v": "v", "w": "w"},
        "edge_image": {"x": "x", "y": "y x^-1 z", "z": "z"},
    })
    d = build_stack(f, [(2,), (-1,)], 3)
    assert check_stack(d) == []
    assert d.labels(d.rows[0].top) == (2, -1, 3, -1)


def test_estimate_bcc_examples(psi, fib):
    ident = rose_of(torus.bundled("identity"))
    assert estimate_bcc(ident, 3) == 1
    assert estimate_bcc(rose_of(psi), 1) == brute_bcc(rose_of(psi), 1) == 2
    # frozen from the exhaustive pair sweep
    assert brute_bcc(rose_of(fib), 3) == 2
    assert estimate_bcc(rose_of(fib), 3) == 2


def test_estimate_bcc_matches_brute_force(phi):
    f = rose_of(phi)
    for d in (1, 2, 3):
        assert estimate_bcc(f, d) == brute_bcc(f, d)


def test_bcc_monotone(phi):
    values, stable = bcc_profile(rose_of(phi), 5)
    assert values == sorted(values)
    assert stable is not None


def test_random_stacks(phi):
    f = rose_of(phi)
    rng = random.Random(99)
    values, stable = bcc_profile(f, 6)
    B = values[stable - 1]
    for _ in range(40):
        w = random_word(rng, phi.rank, rng.randint(1, 10))
        cut = rng.randint(1, len(w))
        segs = [w[:cut], w[cut:]] if cut < len(w) else [w]
        d = build_stack(f, segs, rng.randint(0, 6))
        assert check_stack(d) == []
        for k, r in enumerate(d.rows):
            assert d.labels(r.top) == f(d.labels(r.bottom))
            for s, e in dying_intervals(d, k):
                assert e - s + 1 < B


def test_exports(fib_stack):
    data = fib_stack.to_dict()
    assert data["corridor_lengths"] == [2, 3, 5]
    assert len(data["rows"]) == 3
    dot = fib_stack.to_dot()
    assert dot.startswith("digraph stack {") and dot.rstrip().endswith("}")
