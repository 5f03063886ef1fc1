"""The free-by-cyclic group F x|_phi Z.

Group words mix free-group letters with the stable letter ``t``, encoded as
``+T`` / ``-T``.  The defining relation is ``t^-1 a t = phi(a)``, so pushing
every ``t`` to the left gives the normal form ``t^s u`` with ``u`` in F.
"""

import random
from dataclasses import dataclass
from typing import Iterable, Sequence

from .graphmap import Automorphism
from .words import Alphabet, Word, substitute

__all__ = [
    "T",
    "GroupWord",
    "NormalForm",
    "format_group_word",
    "is_identity",
    "multiply",
    "normal_form",
    "parse_group_word",
    "random_null_word",
    "t_exponent",
]

T = 1 << 24


def is_t(x: int) -> bool:
    return x == T or x == -T


class GroupWord(tuple):
    """A word over the generators and ``t``; not reduced."""

    __slots__ = ()

    def __new__(cls, letters: Iterable[int] = ()):
        return tuple.__new__(cls, letters)

    def __getitem__(self, item):
        if isinstance(item, slice):
            return GroupWord(tuple.__getitem__(self, item))
        return tuple.__getitem__(self, item)

    def __add__(self, other):
        return GroupWord(tuple(self) + tuple(other))

    def __invert__(self):
        return GroupWord(-x for x in reversed(self))

    def t_positions(self):
        return [i for i, x in enumerate(self) if is_t(x)]

    def __repr__(self):
        return f"GroupWord({list(self)!r})"


def t_exponent(w: Sequence[int]) -> int:
    return sum(1 if x == T else -1 for x in w if is_t(x))


def parse_group_word(alphabet: Alphabet, text: str) -> GroupWord:
    """Parse ``t^-1 a t b^-1``; ``t`` is reserved for the stable letter."""
    out = []
    for name, k in alphabet.tokens(text):
        if name == "t":
            x = T
        elif name in alphabet.index:
            x = alphabet.index[name] + 1
        else:
            raise ValueError(f"unknown generator {name!r}")
        out.extend([x if k > 0 else -x] * abs(k))
    return GroupWord(out)


def format_group_word(alphabet: Alphabet, w: Sequence[int], stable: str = "t") -> str:
    if not w:
        return "1"
    toks = []
    for x in w:
        if is_t(x):
            toks.append(stable if x > 0 else stable + "^-1")
        else:
            toks.append(alphabet.format_letter(x))
    return " ".join(toks)


@dataclass(frozen=True)
class NormalForm:
    """``t^t_exponent * tail``."""

    t_exponent: int
    tail: Word

    def is_identity(self) -> bool:
        return self.t_exponent == 0 and not self.tail

    def format(self, alphabet: Alphabet) -> str:
        return f"t^{self.t_exponent} · {alphabet.format(self.tail)}"


class _Folder:
    """Left-to-right fold with state ``t^s u``; records the peak tail length."""

    __slots__ = ("phi", "s", "u", "peak")

    def __init__(self, phi: Automorphism, s: int = 0, u: Sequence[int] = ()):
        self.phi = phi
        self.s = s
        self.u = list(u)
        self.peak = len(self.u)

    def push(self, x: int):
        u = self.u
        if x == T:
            self.s += 1
            self.u = list(substitute(self.phi.images, u))
        elif x == -T:
            self.s -= 1
            self.u = list(substitute(self.phi.inverse_images, u))
        elif u and u[-1] == -x:
            u.pop()
        else:
            u.append(x)
        if len(self.u) > self.peak:
            self.peak = len(self.u)

    def result(self) -> NormalForm:
        return NormalForm(self.s, Word._trusted(self.u))


def normal_form(w: Sequence[int], phi: Automorphism, with_peak: bool = False):
    """Normal form ``(s, u)`` with ``w = t^s u`` in the group.

    With ``with_peak`` also return the largest intermediate tail length.
    """
    fold = _Folder(phi)
    for x in w:
        fold.push(x)
    if with_peak:
        return fold.result(), fold.peak
    return fold.result()


def multiply(phi: Automorphism, a: NormalForm, b: NormalForm) -> NormalForm:
    """Product of two normal forms: ``t^s1 u1 t^s2 u2 = t^(s1+s2) phi^s2(u1) u2``."""
    head = phi.power(a.tail, b.t_exponent)
    return NormalForm(a.t_exponent + b.t_exponent, head * b.tail)


def is_identity(w: Sequence[int], phi: Automorphism) -> bool:
    return normal_form(w, phi).is_identity()


def random_group_word(rng: random.Random, rank: int, length: int, t_density: float = 0.3) -> GroupWord:
    """Random word with no adjacent inverse pair, ``t^{+-1}`` drawn with probability ``t_density``."""
    out = []
    while len(out) < length:
        if rng.random() < t_density:
            x = T if rng.random() < 0.5 else -T
        else:
            x = rng.randrange(1, rank + 1) * rng.choice((1, -1))
        if out and out[-1] == -x:
            continue
        out.append(x)
    return GroupWord(out)


def random_null_word(phi: Automorphism, seed, length: int, t_density: float = 0.3) -> GroupWord:
    """A word equal to the identity, of length at most ``length``.

    A random prefix ``v`` is grown letter by letter while
    ``|v| + |u| + |s| <= length`` where ``(s, u)`` is the normal form of ``v``;
    the word returned is ``v u^-1 t^-s``.  Deterministic per ``seed``.
    """
    rng = random.Random(seed)
    fold = _Folder(phi)
    v = []
    while True:
        if rng.random() < t_density:
            x = T if rng.random() < 0.5 else -T
        else:
            x = rng.randrange(1, phi.rank + 1) * rng.choice((1, -1))
        if v and v[-1] == -x:
            continue
        trial = _Folder(phi, fold.s, fold.u)
        trial.push(x)
        if len(v) + 1 + len(trial.u) + abs(trial.s) > length:
            break
        v.append(x)
        fold = trial
    s, u = fold.s, fold.u
    tail = [-x for x in reversed(u)]
    closing = [-T if s > 0 else T] * abs(s)
    return GroupWord(v + tail + closing)
