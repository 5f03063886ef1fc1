"""Rewriting words over ``A`` and ``t`` as words over ``A`` and ``tau = t^p``.

Reading ``t`` moves the running height up one, ``t^-1`` down one.  The word
is cut into pieces: flat runs of free letters, and segments that start on a
multiple of ``p`` and stop at the first stable letter that lands on a
multiple of ``p`` again.  A segment returning to its start height is a bump
and becomes a free word; one that climbs or falls by ``p`` is a step and
becomes ``t^{+-p}`` followed by a free word.  Every free letter is pushed to
the height where its segment ends, which applies a power of ``phi`` between
``-(p-1)`` and ``p-1``.
"""

from dataclasses import dataclass
from typing import List, Sequence, Tuple

from .graphmap import Automorphism
from .group import T, GroupWord, format_group_word, is_identity, is_t
from .words import Alphabet, Word

__all__ = [
    "LatticeDecomposition",
    "Piece",
    "PowerRewrite",
    "corridor_bound",
    "expand_tau",
    "lattice_decompose",
    "rewrite_power",
]

KINDS = ("up-bump", "down-bump", "up-step", "down-step", "flat")


@dataclass(frozen=True)
class Piece:
    kind: str
    letters: GroupWord
    start_height: int
    end_height: int

    @property
    def is_segment(self) -> bool:
        return self.kind != "flat"


@dataclass(frozen=True)
class LatticeDecomposition:
    word: GroupWord
    p: int
    pieces: Tuple[Piece, ...]

    def heights(self) -> List[int]:
        h = [0]
        for x in self.word:
            h.append(h[-1] + (1 if x == T else -1 if x == -T else 0))
        return h

    def segments(self) -> List[Piece]:
        return [pc for pc in self.pieces if pc.is_segment]


def lattice_decompose(w: Sequence[int], p: int) -> LatticeDecomposition:
    if p < 1:
        raise ValueError("p must be at least 1")
    w = GroupWord(w)
    total = sum(1 if x == T else -1 for x in w if is_t(x))
    if total % p:
        raise ValueError(f"final height {total} is not a multiple of p = {p}")
    pieces = []
    h = 0
    i, n = 0, len(w)
    while i < n:
        j = i
        if not is_t(w[i]):
            while j < n and not is_t(w[j]):
                j += 1
            pieces.append(Piece("flat", w[i:j], h, h))
            i = j
            continue
        start = h
        while True:
            h += 1 if w[j] == T else -1 if w[j] == -T else 0
            j += 1
            if is_t(w[j - 1]) and h % p == 0:
                break
        up = w[i] == T
        if h == start:
            kind = "up-bump" if up else "down-bump"
        else:
            kind = "up-step" if h > start else "down-step"
        pieces.append(Piece(kind, w[i:j], start, h))
        i = j
    return LatticeDecomposition(w, p, tuple(pieces))


def _push(piece: Piece, phi: Automorphism) -> Word:
    # each free letter at height h is carried to the segment's end height e,
    # becoming phi^(e - h) of itself
    out = Word()
    h = piece.start_height
    e = piece.end_height
    for x in piece.letters:
        if x == T:
            h += 1
        elif x == -T:
            h -= 1
        else:
            out = out * phi.power((x,), e - h)
    return out


@dataclass(frozen=True)
class PowerRewrite:
    original: GroupWord
    tilde: GroupWord
    result: GroupWord  # stable letters here stand for tau
    p: int
    corridor_bound: int
    verified: bool

    def format(self, alphabet: Alphabet) -> dict:
        return {
            "p": self.p,
            "original": format_group_word(alphabet, self.original),
            "tilde": format_group_word(alphabet, self.tilde),
            "result": format_group_word(alphabet, self.result, stable="τ"),
            "lengths": {"original": len(self.original), "tilde": len(self.tilde),
                        "result": len(self.result)},
            "corridor_bound": self.corridor_bound,
            "verified": self.verified,
        }


def expand_tau(w: Sequence[int], p: int) -> GroupWord:
    out = []
    for x in w:
        if is_t(x):
            out.extend([x] * p)
        else:
            out.append(x)
    return GroupWord(out)


def _tokenize_tau(tilde: Sequence[int], p: int) -> GroupWord:
    out = []
    i = 0
    while i < len(tilde):
        x = tilde[i]
        if is_t(x):
            j = i
            while j < len(tilde) and tilde[j] == x:
                j += 1
            if (j - i) % p:
                raise AssertionError("stable-letter run is not a multiple of p")
            out.extend([x] * ((j - i) // p))
            i = j
        else:
            out.append(x)
            i += 1
    # free reduction over A and tau
    red = []
    for x in out:
        if red and red[-1] == -x:
            red.pop()
        else:
            red.append(x)
    return GroupWord(red)


def corridor_bound(d: LatticeDecomposition, phi: Automorphism) -> int:
    """``L^(p-1) * max |u_i|`` over bumps and steps; 0 when there are none."""
    longest = max((len(pc.letters) for pc in d.segments()), default=0)
    return phi.lipschitz ** (d.p - 1) * longest


def rewrite_power(w: Sequence[int], phi: Automorphism, p: int) -> PowerRewrite:
    d = lattice_decompose(w, p)
    tilde = []
    for pc in d.pieces:
        if pc.kind == "flat":
            tilde.extend(pc.letters)
            continue
        U = _push(pc, phi)
        if pc.kind.endswith("step"):
            eps = T if pc.kind == "up-step" else -T
            tilde.extend([eps] * p)
        tilde.extend(U)
    tilde = GroupWord(tilde)
    result = _tokenize_tau(tilde, p)
    original = d.word
    ok = (
        is_identity(original + ~tilde, phi)
        and is_identity(original + ~expand_tau(result, p), phi)
        and len(result) <= len(tilde) <= phi.lipschitz ** (p - 1) * len(original)
    )
    return PowerRewrite(original, tilde, result, p, corridor_bound(d, phi), ok)
