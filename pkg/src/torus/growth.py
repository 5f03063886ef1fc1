"""Orbit growth of words and cyclic words, and empirical checks of the
inequality ``||phi^i(w)|| <= K (||w|| + ||phi^N(w)||)`` for ``0 <= i <= N``.
"""

import os
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Sequence, Tuple

from .graphmap import Automorphism
from .words import CyclicWord, Word, cyclic_reduce, substitute

__all__ = [
    "BrinkmannReport",
    "GrowthTable",
    "check_brinkmann",
    "enumerate_words",
    "growth_table",
    "k_exhaustive",
    "orbit_lengths",
]

DEFAULT_WORK_CAP = 2_000_000


@dataclass(frozen=True)
class GrowthTable:
    word: Word
    N: int
    mode: str
    based_lengths: Tuple[int, ...]
    cyclic_lengths: Tuple[int, ...]
    k_emp: Fraction

    def rows(self):
        for i in range(self.N + 1):
            yield i, self.based_lengths[i], self.cyclic_lengths[i]

    def to_tsv(self) -> str:
        lines = ["i\tbased_len\tcyclic_len"]
        lines += [f"{i}\t{b}\t{c}" for i, b, c in self.rows()]
        return "\n".join(lines) + "\n"


def _ratio(lengths: Sequence[int]) -> Fraction:
    denom = lengths[0] + lengths[-1]
    if denom == 0:
        return Fraction(0)
    return Fraction(max(lengths), denom)


def orbit_lengths(phi: Automorphism, w: Sequence[int], N: int, mode: str = "based") -> List[int]:
    if mode == "based":
        w = Word(w)
        out = [len(w)]
        for _ in range(N):
            w = substitute(phi.images, w)
            out.append(len(w))
        return out
    if mode == "cyclic":
        core, _ = cyclic_reduce(w)
        out = [len(core)]
        for _ in range(N):
            core, _ = cyclic_reduce(substitute(phi.images, core))
            out.append(len(core))
        return out
    raise ValueError(f"unknown mode {mode!r}")


def growth_table(phi: Automorphism, w: Sequence[int], N: int, mode: str = "based") -> GrowthTable:
    if N < 0:
        raise ValueError("N must be non-negative")
    if mode not in ("based", "cyclic"):
        raise ValueError(f"unknown mode {mode!r}")
    based = orbit_lengths(phi, w, N, "based")
    cyclic = orbit_lengths(phi, w, N, "cyclic")
    chosen = based if mode == "based" else cyclic
    return GrowthTable(Word(w), N, mode, tuple(based), tuple(cyclic), _ratio(chosen))


def work_cap() -> int:
    return int(os.environ.get("TORUS_WORK_CAP", DEFAULT_WORK_CAP))


def enumerate_words(rank: int, max_len: int, mode: str = "based"):
    """Non-empty reduced words of length ``<= max_len``.

    In cyclic mode only cyclically reduced words are produced, one per
    rotation class (the lexicographically least rotation).
    """
    letters = [x for g in range(1, rank + 1) for x in (g, -g)]

    def extend(prefix):
        yield prefix
        if len(prefix) == max_len:
            return
        for x in letters:
            if prefix and prefix[-1] == -x:
                continue
            yield from extend(prefix + (x,))

    for x in letters:
        for w in extend((x,)):
            if mode == "based":
                yield Word._trusted(w)
            elif len(w) == 1 or w[0] != -w[-1]:
                c = CyclicWord._trusted(w)
                if tuple(c.canonical()) == w:
                    yield c


def k_exhaustive(phi: Automorphism, max_len: int, N: int, mode: str = "based", cap: int = None) -> Fraction:
    """Largest ratio ``max_{i<=n} len_i / (len_0 + len_n)`` over all words up to ``max_len`` and horizons ``n <= N``."""
    cap = work_cap() if cap is None else cap
    if (2 * phi.rank) ** max_len > cap:
        raise ValueError(f"enumeration of {(2 * phi.rank) ** max_len} words exceeds the work cap {cap}")
    best = Fraction(0)
    for w in enumerate_words(phi.rank, max_len, mode):
        lengths = orbit_lengths(phi, w, N, mode)
        peak = 0
        for ln in lengths:
            peak = max(peak, ln)
            r = Fraction(peak, lengths[0] + ln)
            if r > best:
                best = r
    return best


@dataclass
class BrinkmannReport:
    K: Fraction
    mode: str
    checked: int = 0
    violations: List[tuple] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def random_word(rng: random.Random, rank: int, length: int) -> Word:
    out = []
    while len(out) < length:
        x = rng.randrange(1, rank + 1) * rng.choice((1, -1))
        if out and out[-1] == -x:
            continue
        out.append(x)
    return Word._trusted(out)


def check_brinkmann(phi: Automorphism, K, seed=0, count: int = 10_000, max_len: int = 30,
                    max_N: int = 12, mode: str = "cyclic") -> BrinkmannReport:
    """Test the inequality on a seeded corpus of random words.

    Each corpus word has a uniform length in ``1..max_len`` and a uniform
    horizon in ``0..max_N``; every ``i <= N`` is tested.  Violations are
    recorded as ``(w, i, N)``.
    """
    K = Fraction(K)
    if K < 0:
        raise ValueError("K must be non-negative")
    rng = random.Random(seed)
    rep = BrinkmannReport(K, mode)
    for _ in range(count):
        w = random_word(rng, phi.rank, rng.randint(1, max_len))
        N = rng.randint(0, max_N)
        lengths = orbit_lengths(phi, w, N, mode)
        bound = K * (lengths[0] + lengths[N])
        rep.checked += 1
        for i, ln in enumerate(lengths):
            if ln > bound:
                rep.violations.append((w, i, N))
                break
    return rep
