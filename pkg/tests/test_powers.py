import random

import pytest

import torus
from torus.group import T, GroupWord, is_identity, normal_form, random_null_word, t_exponent
from torus.powers import corridor_bound, expand_tau, lattice_decompose, rewrite_power
from torus.words import Word

from conftest import gw, random_letters

a, b = 1, 2
A, B = -1, -2


def admissible(rng, phi, p, n):
    w = random_letters(rng, phi.rank, n, 0.4)
    w += [-T] * (t_exponent(w) % p)
    assert t_exponent(w) % p == 0
    return GroupWord(w)


def test_decompose_worked_example(fib):
    d = lattice_decompose(gw(fib, "t a t a t^-1 a t^-1"), 2)
    assert d.heights() == [0, 1, 1, 2, 2, 1, 1, 0]
    assert [(pc.kind, len(pc.letters)) for pc in d.pieces] == [("up-step", 3), ("flat", 1), ("down-step", 3)]


def test_decompose_p1(fib):
    w = gw(fib, "t a t^-1 b t^-1 t")
    d = lattice_decompose(w, 1)
    segs = d.segments()
    assert all(len(pc.letters) == 1 and pc.kind.endswith("step") for pc in segs)
    assert GroupWord(x for pc in d.pieces for x in pc.letters) == w


def test_decompose_flat(fib):
    d = lattice_decompose(gw(fib, "a b a"), 3)
    assert [pc.kind for pc in d.pieces] == ["flat"]


def test_decompose_bumps(fib):
    d = lattice_decompose(gw(fib, "t a t^-1 t^-1 b t"), 2)
    assert [pc.kind for pc in d.pieces] == ["up-bump", "down-bump"]


def test_decompose_rejects_bad_height(fib):
    with pytest.raises(ValueError):
        lattice_decompose(gw(fib, "t a"), 2)


def test_worked_rewrite(fib):
    r = rewrite_power(gw(fib, "t a t a t^-1 a t^-1"), fib, 2)
    assert r.tilde == gw(fib, "t t a b a t^-1 t^-1 b")
    assert r.result == gw(fib, "t a b a t^-1 b")  # stable letters here are tau
    assert r.verified
    assert normal_form(expand_tau(r.result, 2), fib).tail == (a, b)
    assert normal_form(r.original, fib).tail == (a, b)
    assert len(r.result) == 6 <= 2 * 7
    assert r.corridor_bound == 6
    assert corridor_bound(lattice_decompose(r.original, 2), fib) == 2 * 3


def test_rewrite_p1_is_identity(fib):
    w = gw(fib, "t a t^-1 b^-1 t t")
    r = rewrite_power(w + GroupWord([-T, -T]), fib, 1)
    assert r.tilde == r.original
    assert r.result == GroupWord(Word(r.original))


def test_tau_cancel(fib):
    r = rewrite_power(GroupWord([T, T, -T, -T]), fib, 2)
    assert r.tilde == (T, T, -T, -T)
    assert r.result == ()


def test_corridor_bound_no_segments(fib):
    assert corridor_bound(lattice_decompose(gw(fib, "a b"), 2), fib) == 0
    assert corridor_bound(lattice_decompose(gw(fib, "t a t^-1"), 1), fib) == 1


@pytest.mark.parametrize("p", [1, 2, 3])
def test_random_rewrites(phi, p):
    rng = random.Random(100 + p)
    L = phi.lipschitz
    for _ in range(150):
        w = admissible(rng, phi, p, rng.randint(0, 16))
        d = lattice_decompose(w, p)
        assert GroupWord(x for pc in d.pieces for x in pc.letters) == w
        hs = d.heights()
        pos = 0
        for pc in d.pieces:
            assert pc.start_height == hs[pos]
            pos += len(pc.letters)
            assert pc.end_height == hs[pos]
            if pc.is_segment:
                assert pc.start_height % p == 0 and pc.end_height % p == 0
        r = rewrite_power(w, phi, p)
        assert r.verified
        assert is_identity(w + ~expand_tau(r.result, p), phi)
        assert len(r.result) <= len(r.tilde) <= L ** (p - 1) * len(w)


def test_null_words_rewrite(fib):
    for seed in range(50):
        w = random_null_word(fib, seed, 30)
        r = rewrite_power(w, fib, 2)
        assert r.verified
        assert is_identity(expand_tau(r.result, 2), fib)
