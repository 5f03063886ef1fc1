"""t-complete bracketings of null words.

A bracket pairs a ``t`` with a ``t^-1`` whose enclosed subword (sentinels
included) has t-exponent zero, so it equals an element of F: the content
value.  A bracketing is t-complete when every stable letter is a sentinel of
exactly one bracket and brackets are pairwise nested or disjoint.
"""

import os
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .graphmap import Automorphism
from .group import GroupWord, T, is_identity, is_t, normal_form
from .words import Word

__all__ = [
    "Bracket",
    "Bracketing",
    "ValidationReport",
    "canonical_bracketing",
    "content_bound_ratio",
    "optimal_bracketing_oracle",
    "validate",
]

ORACLE_T_LIMIT = 12


@dataclass(frozen=True)
class Bracket:
    open: int
    close: int
    content_value: Word

    def contains(self, other: "Bracket") -> bool:
        return self.open < other.open and other.close < self.close


@dataclass(frozen=True)
class Bracketing:
    word: GroupWord
    brackets: Tuple[Bracket, ...]

    def to_dict(self, alphabet) -> dict:
        return {
            "brackets": [
                {"open": b.open, "close": b.close, "content": alphabet.format(b.content_value)}
                for b in self.brackets
            ],
            "ratio": format_ratio(content_bound_ratio(self)),
        }


def format_ratio(r: Fraction) -> str:
    return str(r.numerator) if r.denominator == 1 else f"{r.numerator}/{r.denominator}"


def _content(w: Sequence[int], phi: Automorphism, i: int, j: int) -> Word:
    nf = normal_form(w[i:j + 1], phi)
    if nf.t_exponent != 0:
        raise ValueError(f"subword [{i}..{j}] has t-exponent {nf.t_exponent}")
    return nf.tail


def canonical_bracketing(w: Sequence[int], phi: Automorphism) -> Bracketing:
    """Innermost bracketing: free reduction of the t-skeleton, leftmost pair first.

    Raises ``ValueError`` if ``w`` is not the identity.
    """
    w = GroupWord(w)
    if not is_identity(w, phi):
        raise ValueError("word does not represent the identity")
    pairs = []
    stack = []
    for i, x in enumerate(w):
        if not is_t(x):
            continue
        if stack and w[stack[-1]] == -x:
            pairs.append((stack.pop(), i))
        else:
            stack.append(i)
    # t-exponent zero means the skeleton reduces completely
    assert not stack
    pairs.sort()
    brackets = tuple(Bracket(i, j, _content(w, phi, i, j)) for i, j in pairs)
    return Bracketing(w, brackets)


@dataclass
class ValidationReport:
    compatible: bool = True
    complete: bool = True
    sentinels: bool = True
    contents: bool = True
    problems: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.compatible and self.complete and self.sentinels and self.contents

    def to_dict(self) -> dict:
        return {
            "ok": self.ok,
            "compatible": self.compatible,
            "complete": self.complete,
            "sentinels": self.sentinels,
            "contents": self.contents,
            "problems": list(self.problems),
        }


def _evaluate_nested(w, brackets: Sequence[Bracket], phi: Automorphism) -> Dict[Tuple[int, int], Word]:
    # Value of a bracket t^e X t^-e is phi^-e applied to X, where X is read
    # with every child bracket replaced by its own value.
    order = sorted(brackets, key=lambda b: b.close - b.open)
    values = {}
    for b in order:
        inner = [c for c in brackets if b.contains(c)]
        children = [c for c in inner if not any(d.contains(c) for d in inner)]
        children.sort(key=lambda c: c.open)
        acc = []
        pos = b.open + 1
        for c in children + [None]:
            stop = b.close if c is None else c.open
            acc.extend(w[pos:stop])
            if c is not None:
                acc.extend(values[(c.open, c.close)])
                pos = c.close + 1
        x = Word(acc)
        if w[b.open] == -T:
            x = phi(x)
        else:
            x = phi.inverse(x)
        values[(b.open, b.close)] = x
    return values


def validate(b: Bracketing, phi: Automorphism) -> ValidationReport:
    """Check compatibility, t-completeness, sentinel signs and content values."""
    rep = ValidationReport()
    w = b.word
    n = len(w)
    for br in b.brackets:
        if not (0 <= br.open < br.close < n):
            rep.sentinels = False
            rep.problems.append(f"bracket ({br.open},{br.close}) out of range")
            continue
        x, y = w[br.open], w[br.close]
        if not (is_t(x) and is_t(y) and x == -y):
            rep.sentinels = False
            rep.problems.append(f"bracket ({br.open},{br.close}) sentinels are not t, t^-1")
    brs = list(b.brackets)
    for i in range(len(brs)):
        for j in range(i + 1, len(brs)):
            p, q = brs[i], brs[j]
            if p.open > q.open:
                p, q = q, p
            crossing = p.open < q.open <= p.close < q.close
            shared = p.open == q.open or p.close == q.close or q.open == p.close
            if crossing or shared:
                rep.compatible = False
                rep.problems.append(f"brackets ({p.open},{p.close}) and ({q.open},{q.close}) cross")
    ends = {}
    for br in brs:
        for k in (br.open, br.close):
            ends[k] = ends.get(k, 0) + 1
    for k in w.t_positions():
        if ends.get(k, 0) != 1:
            rep.complete = False
            rep.problems.append(f"stable letter at {k} is a sentinel of {ends.get(k, 0)} brackets")
    for k in ends:
        if not (0 <= k < n and is_t(w[k])):
            rep.complete = False
            rep.problems.append(f"sentinel at {k} is not a stable letter")
    if rep.ok:
        values = _evaluate_nested(w, brs, phi)
    else:
        values = {}
        for br in brs:
            if 0 <= br.open < br.close < n:
                nf = normal_form(w[br.open:br.close + 1], phi)
                values[(br.open, br.close)] = nf.tail if nf.t_exponent == 0 else None
    for br in brs:
        got = values.get((br.open, br.close))
        if got != br.content_value:
            rep.contents = False
            rep.problems.append(f"content of ({br.open},{br.close}) recomputes to a different element")
    return rep


def content_bound_ratio(b: Bracketing) -> Fraction:
    """Largest content length divided by the word length (0 for the empty word)."""
    n = len(b.word)
    if n == 0 or not b.brackets:
        return Fraction(0)
    return Fraction(max(len(br.content_value) for br in b.brackets), n)


def _matchings(pos: List[int], signs: Dict[int, int]):
    # non-crossing perfect matchings with opposite signs
    if not pos:
        yield []
        return
    first = pos[0]
    for k in range(1, len(pos), 2):
        j = pos[k]
        if signs[j] != -signs[first]:
            continue
        for inner in _matchings(pos[1:k], signs):
            for outer in _matchings(pos[k + 1:], signs):
                yield [(first, j)] + inner + outer


def optimal_bracketing_oracle(w: Sequence[int], phi: Automorphism, limit: Optional[int] = None):
    """Exhaustive search for a bracketing minimising the largest content.

    Returns ``(bracketing, ratio)``.  The first minimiser in enumeration
    order wins ties.
    """
    w = GroupWord(w)
    if limit is None:
        limit = int(os.environ.get("TORUS_ORACLE_T_LIMIT", ORACLE_T_LIMIT))
    pos = w.t_positions()
    if len(pos) > limit:
        raise ValueError(f"{len(pos)} stable letters exceed the oracle bound {limit}")
    if not is_identity(w, phi):
        raise ValueError("word does not represent the identity")
    signs = {i: (1 if w[i] == T else -1) for i in pos}
    cache = {}

    def content(i, j):
        if (i, j) not in cache:
            cache[(i, j)] = _content(w, phi, i, j)
        return cache[(i, j)]

    best, best_cost = None, None
    for m in _matchings(pos, signs):
        cost = max((len(content(i, j)) for i, j in m), default=0)
        if best_cost is None or cost < best_cost:
            best, best_cost = m, cost
    brackets = tuple(Bracket(i, j, content(i, j)) for i, j in sorted(best))
    b = Bracketing(w, brackets)
    return b, content_bound_ratio(b)
