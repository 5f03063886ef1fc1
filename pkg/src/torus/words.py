"""Free group words.

A letter is a nonzero int: generator ``g`` (0-based) is ``g + 1`` and its
inverse is ``-(g + 1)``.  Words are immutable tuples of letters; the
printable names live in an :class:`Alphabet` and never enter arithmetic.
"""

import re
from typing import Iterable, Sequence

__all__ = [
    "Alphabet",
    "CyclicWord",
    "Word",
    "concat",
    "cyclic_reduce",
    "generator",
    "invert",
    "letter",
    "reduce",
    "sign",
    "substitute",
]

NAME_RE = re.compile(r"[a-z][a-z0-9_]*\Z")


def letter(gen: int, sgn: int = 1) -> int:
    if gen < 0:
        raise ValueError(f"negative generator index {gen}")
    if sgn not in (1, -1):
        raise ValueError(f"sign must be +1 or -1, got {sgn}")
    return sgn * (gen + 1)


def generator(x: int) -> int:
    return abs(x) - 1


def sign(x: int) -> int:
    return 1 if x > 0 else -1


def _free_reduce(raw: Iterable[int]) -> list:
    out = []
    for x in raw:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return out


class Word(tuple):
    """A freely reduced word.  The constructor reduces its input."""

    __slots__ = ()

    def __new__(cls, letters: Iterable[int] = ()):
        return tuple.__new__(cls, _free_reduce(letters))

    @classmethod
    def _trusted(cls, letters: Iterable[int]) -> "Word":
        # caller guarantees the letters are already reduced
        return tuple.__new__(cls, letters)

    def __mul__(self, other):
        return concat(self, other)

    def __invert__(self):
        return invert(self)

    def __getitem__(self, item):
        if isinstance(item, slice):
            return Word._trusted(tuple.__getitem__(self, item))
        return tuple.__getitem__(self, item)

    def __repr__(self):
        return f"Word({list(self)!r})"


class CyclicWord(Word):
    """A cyclically reduced word: reduced, and first letter is not the inverse of the last."""

    __slots__ = ()

    def __new__(cls, letters: Iterable[int] = ()):
        w = _free_reduce(letters)
        if len(w) > 1 and w[0] == -w[-1]:
            raise ValueError("word is not cyclically reduced")
        return tuple.__new__(cls, w)

    def rotations(self):
        for i in range(len(self) or 1):
            yield CyclicWord._trusted(self[i:] + self[:i])

    def canonical(self) -> "CyclicWord":
        """Lexicographically least rotation; one representative per rotation class."""
        if not self:
            return self
        return min(self.rotations(), key=tuple)

    def __repr__(self):
        return f"CyclicWord({list(self)!r})"


def reduce(raw: Sequence[int]) -> Word:
    return Word(raw)


def concat(u: Sequence[int], v: Sequence[int]) -> Word:
    u = list(u)
    i = 0
    n = len(v)
    while u and i < n and u[-1] == -v[i]:
        u.pop()
        i += 1
    u.extend(v[i:])
    return Word._trusted(u)


def invert(u: Sequence[int]) -> Word:
    return Word._trusted(-x for x in reversed(u))


def cyclic_reduce(w: Sequence[int]):
    """Split ``w`` as ``conjugator * core * conjugator^-1``.

    Returns ``(core, conjugator)`` with ``core`` cyclically reduced.
    """
    w = Word(w)
    i, j = 0, len(w) - 1
    while i < j and w[i] == -w[j]:
        i += 1
        j -= 1
    core = CyclicWord._trusted(w[i:j + 1])
    return core, Word._trusted(w[:i])


def substitute(images: Sequence[Sequence[int]], w: Sequence[int]) -> Word:
    """Tightened image of ``w`` under the substitution ``generator g -> images[g]``."""
    table = {}
    for g, img in enumerate(images, 1):
        table[g] = img
        table[-g] = [-y for y in reversed(img)]
    out = []
    pop, extend = out.pop, out.extend
    for x in w:
        img = table[x]
        k, m = 0, len(img)
        while out and k < m and out[-1] == -img[k]:
            pop()
            k += 1
        extend(img[k:] if k else img)
    return Word._trusted(out)


class Alphabet:
    """Generator names and the text syntax ``a b^-1 a`` (empty word is ``1``).

    Tokens may carry any integer exponent, ``a^3`` or ``b^-2``.  ``reserved``
    names (the stable letter ``t``) are refused as generator names.
    """

    def __init__(self, names: Sequence[str], reserved: Sequence[str] = ()):
        names = list(names)
        for name in names:
            if not NAME_RE.match(name):
                raise ValueError(f"invalid generator name {name!r}")
            if name in reserved:
                raise ValueError(f"generator name {name!r} is reserved")
        if len(set(names)) != len(names):
            raise ValueError("duplicate generator names")
        self.names = tuple(names)
        self.index = {name: i for i, name in enumerate(names)}

    @property
    def rank(self) -> int:
        return len(self.names)

    def __eq__(self, other):
        return isinstance(other, Alphabet) and self.names == other.names

    def __hash__(self):
        return hash(self.names)

    def __repr__(self):
        return f"Alphabet({list(self.names)!r})"

    def tokens(self, text: str):
        """Yield ``(name, exponent)`` pairs; ``1`` tokens are skipped."""
        for tok in text.split():
            if tok == "1":
                continue
            name, caret, exp = tok.partition("^")
            if caret:
                try:
                    k = int(exp)
                except ValueError:
                    raise ValueError(f"bad exponent in token {tok!r}") from None
            else:
                k = 1
            yield name, k

    def letters(self, text: str) -> list:
        out = []
        for name, k in self.tokens(text):
            if name not in self.index:
                raise ValueError(f"unknown generator {name!r}")
            x = self.index[name] + 1
            out.extend([x if k > 0 else -x] * abs(k))
        return out

    def parse(self, text: str) -> Word:
        return Word(self.letters(text))

    def format_letter(self, x: int) -> str:
        name = self.names[abs(x) - 1]
        return name if x > 0 else name + "^-1"

    def format(self, w: Sequence[int]) -> str:
        if not w:
            return "1"
        return " ".join(self.format_letter(x) for x in w)


def default_alphabet(rank: int) -> Alphabet:
    base = "abcdefghijklmnopqrsuvwxyz"  # no t
    if rank <= len(base):
        return Alphabet(list(base[:rank]))
    return Alphabet([f"x{i}" for i in range(rank)])
