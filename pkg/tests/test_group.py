import random

import pytest
from hypothesis import given, settings, strategies as st

import torus
from torus.group import (
    T,
    GroupWord,
    NormalForm,
    format_group_word,
    is_identity,
    multiply,
    normal_form,
    random_null_word,
    t_exponent,
)
from torus.words import Word, concat, invert

from conftest import gw, random_letters

a, b = 1, 2
A, B = -1, -2


def fold_right_to_left(w, phi):
    """Oracle with the mirrored convention: state u t^s, letters prepended."""
    u, s = Word(), 0
    for x in reversed(w):
        if x == T:
            u, s = phi.inverse(u), s + 1
        elif x == -T:
            u, s = phi(u), s - 1
        else:
            u = concat((x,), u)
    # u t^s = t^s phi^s(u)
    return NormalForm(s, phi.power(u, s))


def test_normal_form_examples(fib):
    assert normal_form(gw(fib, "t t^-1"), fib) == NormalForm(0, Word())
    assert normal_form(gw(fib, "t^-1 a t b^-1 a^-1"), fib) == NormalForm(0, Word())
    w = gw(fib, "t a t a t^-1 a t^-1")
    assert normal_form(w, fib) == NormalForm(0, Word([a, b]))
    assert fold_right_to_left(w, fib) == NormalForm(0, Word([a, b]))


def test_is_identity_examples(fib):
    assert is_identity(GroupWord(), fib)
    assert not is_identity(gw(fib, "a"), fib)
    # phi^2(a) = a b a
    assert fib.power((a,), 2) == (a, b, a)
    assert is_identity(gw(fib, "t^-2 a t^2 a^-1 b^-1 a^-1"), fib)


def test_normal_form_matches_mirrored_fold(phi):
    rng = random.Random(11)
    for _ in range(300):
        w = GroupWord(random_letters(rng, phi.rank, rng.randint(0, 14), 0.35))
        assert normal_form(w, phi) == fold_right_to_left(w, phi)


def test_homomorphism(phi):
    rng = random.Random(12)
    for _ in range(1000):
        v = GroupWord(random_letters(rng, phi.rank, rng.randint(0, 10), 0.3))
        w = GroupWord(random_letters(rng, phi.rank, rng.randint(0, 10), 0.3))
        assert normal_form(v + w, phi) == multiply(phi, normal_form(v, phi), normal_form(w, phi))


def test_inverse_normal_form(phi):
    rng = random.Random(13)
    for _ in range(300):
        w = GroupWord(random_letters(rng, phi.rank, rng.randint(0, 12), 0.3))
        nf = normal_form(w, phi)
        # (t^s u)^-1 = t^-s phi^-s(u^-1)
        assert normal_form(~w, phi) == NormalForm(-nf.t_exponent, phi.power(invert(nf.tail), -nf.t_exponent))


@settings(max_examples=200)
@given(st.data())
def test_free_insertion_invariance(data):
    phi = torus.bundled(data.draw(st.sampled_from(["fib", "psi", "rank3"])))
    alphabet = [T, -T] + [x for g in range(1, phi.rank + 1) for x in (g, -g)]
    w = data.draw(st.lists(st.sampled_from(alphabet), max_size=12))
    pos = data.draw(st.integers(0, len(w)))
    x = data.draw(st.sampled_from(alphabet))
    padded = w[:pos] + [x, -x] + w[pos:]
    assert normal_form(padded, phi) == normal_form(w, phi)


def test_random_null_word_contract(phi):
    for seed in range(200):
        w = random_null_word(phi, seed, 40)
        assert len(w) <= 40
        assert is_identity(w, phi)
        assert t_exponent(w) == 0
        assert random_null_word(phi, seed, 40) == w


def test_random_null_word_edge_cases(fib):
    assert random_null_word(fib, 0, 0) == ()
    w = random_null_word(fib, 5, 20, t_density=0.0)
    half = len(w) // 2
    assert T not in w and -T not in w
    assert GroupWord(w[half:]) == ~GroupWord(w[:half])


def test_peak_tail(fib):
    nf, peak = normal_form(gw(fib, "t t t a t^-1 t^-1 t^-1"), fib, with_peak=True)
    # tails: a, b, b^-1 a, a^-1 b b
    assert nf == NormalForm(0, Word([A, b, b]))
    assert peak == 3


def test_format(fib):
    assert format_group_word(fib.alphabet, gw(fib, "t^-1 a t b^-1")) == "t^-1 a t b^-1"
    assert normal_form(gw(fib, "a"), fib).format(fib.alphabet) == "t^0 · a"
    with pytest.raises(ValueError):
        gw(fib, "a x")
