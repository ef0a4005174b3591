"""Group-agnostic brute force: palindrome enumeration, Cayley-ball
tabulation, and bounded palindromic-length search.

Everything is parameterized by an `Evaluator`: a label, an alphabet, and
an exact evaluation map from reduced words to canonical, hashable
encodings (equal encodings iff equal group elements). When the evaluator
also carries `mul`/`inv` on encodings the length search uses a
meet-in-the-middle hash join; otherwise it falls back to evaluating
concatenations pairwise.

All tie-breaking is shortlex in the fixed letter order a < a^-1 < b < ...,
so identical inputs produce identical outputs, witnesses included.
The identity has palindromic length 0 by convention and reported factors
are always non-empty.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass, field
from typing import Any, Callable, Iterator

from .words import EMPTY, Alphabet, Word, shortlex_key


class BudgetExceeded(RuntimeError):
    """A search hit its state cap; `completed` is the last finished depth
    (product depth or BFS radius)."""

    def __init__(self, message: str, completed: int) -> None:
        super().__init__(f"{message} (completed depth {completed})")
        self.completed = completed


@dataclass(frozen=True)
class Evaluator:
    label: str
    alphabet: Alphabet
    eval: Callable[[Word], Any]
    mul: Callable[[Any, Any], Any] | None = None
    inv: Callable[[Any], Any] | None = None
    describe: Callable[[Any], str] = str


def enumerate_reduced_words(alphabet: Alphabet, length: int) -> Iterator[Word]:
    """Freely reduced words of exactly `length`, in lexicographic order."""
    letters = alphabet.letters()

    def extend(prefix: list) -> Iterator[Word]:
        if len(prefix) == length:
            yield Word(tuple(prefix))
            return
        last = prefix[-1] if prefix else None
        for c in letters:
            if last is not None and c[0] == last[0] and c[1] == -last[1]:
                continue
            prefix.append(c)
            yield from extend(prefix)
            prefix.pop()

    yield from extend([])


def enumerate_palindromes(alphabet: Alphabet, max_len: int) -> Iterator[Word]:
    """All reduced palindromic words of length <= max_len, each exactly
    once, in shortlex order.

    A reduced palindrome of even length is half + reversed half for an
    arbitrary reduced half (the junction doubles a letter, which never
    cancels); odd length additionally takes a center letter that must not
    cancel against the half's last letter.
    """
    for n in range(max_len + 1):
        half = n // 2
        if n % 2 == 0:
            for u in enumerate_reduced_words(alphabet, half):
                yield Word(u.letters + tuple(reversed(u.letters)))
        elif n == 1:
            for c in alphabet.letters():
                yield Word((c,))
        else:
            for u in enumerate_reduced_words(alphabet, half):
                last = u.letters[-1]
                for c in alphabet.letters():
                    if c[0] == last[0] and c[1] == -last[1]:
                        continue
                    yield Word(u.letters + (c,) + tuple(reversed(u.letters)))


@dataclass(frozen=True)
class PalSearchResult:
    """Outcome of `pal_length_bounded`: k and verified witness factors, or
    unknown (k is None) within the stated bounds."""

    k: int | None
    factors: tuple[Word, ...] | None
    max_factors: int
    max_len: int

    @property
    def found(self) -> bool:
        return self.k is not None


class _PalProductIndex:
    """Image sets of d-fold products of non-empty enumerated palindromes,
    with backpointers for witness reconstruction."""

    def __init__(self, ev: Evaluator, max_len: int, max_states: int | None) -> None:
        self.ev = ev
        self.max_states = max_states
        self.states = 0
        base: dict[Any, Word] = {}
        for w in enumerate_palindromes(ev.alphabet, max_len):
            if w:
                base.setdefault(ev.eval(w), w)
        # levels[d] maps encoding -> (last palindrome, previous encoding)
        self.base = base
        self.levels: list[dict[Any, tuple[Word, Any]]] = [
            {},
            {enc: (w, None) for enc, w in base.items()},
        ]
        self._count(len(base), 1)

    def _count(self, added: int, depth: int) -> None:
        self.states += added
        if self.max_states is not None and self.states > self.max_states:
            raise BudgetExceeded("palindrome product index exceeded its state cap", depth - 1)

    def ensure(self, depth: int) -> None:
        while len(self.levels) <= depth:
            d = len(self.levels)
            prev = self.levels[d - 1]
            level: dict[Any, tuple[Word, Any]] = {}
            if self.ev.mul is not None:
                for enc_prev in prev:
                    for enc1 in self.base:
                        level.setdefault(self.ev.mul(enc_prev, enc1), (self.base[enc1], enc_prev))
            else:
                prev_words = {enc: self.factors(d - 1, enc) for enc in prev}
                for enc_prev, words in prev_words.items():
                    prefix = Word()
                    for w in words:
                        prefix = prefix * w
                    for enc1, w1 in self.base.items():
                        level.setdefault(self.ev.eval(prefix * w1), (w1, enc_prev))
            self.levels.append(level)
            self._count(len(level), d)

    def factors(self, depth: int, enc: Any) -> tuple[Word, ...]:
        out: list[Word] = []
        for d in range(depth, 0, -1):
            w, enc = self.levels[d][enc]
            out.append(w)
        return tuple(reversed(out))

    def find(self, target: Any, k: int) -> tuple[Word, ...] | None:
        """First split of `target` into a product of exactly k palindromes."""
        left = (k + 1) // 2
        right = k - left
        self.ensure(left)
        if right == 0:
            if target in self.levels[left]:
                return self.factors(left, target)
            return None
        if self.ev.mul is not None and self.ev.inv is not None:
            lhs, rhs = self.levels[left], self.levels[right]
            if len(rhs) <= len(lhs):
                for enc_r in rhs:
                    need = self.ev.mul(target, self.ev.inv(enc_r))
                    if need in lhs:
                        return self.factors(left, need) + self.factors(right, enc_r)
            else:
                for enc_l in lhs:
                    need = self.ev.mul(self.ev.inv(enc_l), target)
                    if need in rhs:
                        return self.factors(left, enc_l) + self.factors(right, need)
            return None
        for enc_l in self.levels[left]:
            l_words = self.factors(left, enc_l)
            prefix = Word()
            for w in l_words:
                prefix = prefix * w
            for enc_r in self.levels[right]:
                r_words = self.factors(right, enc_r)
                product = prefix
                for w in r_words:
                    product = product * w
                if self.ev.eval(product) == target:
                    return l_words + r_words
        return None


def pal_length_bounded(
    ev: Evaluator,
    target: Any,
    max_factors: int,
    max_len: int,
    max_states: int | None = None,
) -> PalSearchResult:
    """Smallest k <= max_factors expressing `target` as a product of k
    enumerated palindromes of length <= max_len, with a verified witness;
    unknown otherwise. Absence is not a proof."""
    if max_factors < 1:
        raise ValueError("max_factors must be at least 1")
    if target == ev.eval(EMPTY):
        return PalSearchResult(0, (), max_factors, max_len)
    index = _PalProductIndex(ev, max_len, max_states)
    for k in range(1, max_factors + 1):
        factors = index.find(target, k)
        if factors is not None:
            product = Word()
            for w in factors:
                product = product * w
            if ev.eval(product) != target:
                raise AssertionError("search witness failed re-verification")
            return PalSearchResult(k, factors, max_factors, max_len)
    return PalSearchResult(None, None, max_factors, max_len)


@dataclass
class BallTable:
    """Exact minimal word lengths within a radius, with shortlex-first
    witness words keyed by canonical encoding."""

    radius: int
    entries: dict[Any, tuple[int, Word]] = field(default_factory=dict)

    def __len__(self) -> int:
        return len(self.entries)


def ball_table(ev: Evaluator, radius: int, max_states: int | None = None) -> BallTable:
    """Breadth-first closure of generator multiplication from the identity."""
    if radius < 0:
        raise ValueError("radius must be non-negative")
    entries: dict[Any, tuple[int, Word]] = {ev.eval(EMPTY): (0, EMPTY)}
    frontier: list[Word] = [EMPTY]
    letters = ev.alphabet.letters()
    for depth in range(1, radius + 1):
        new: list[Word] = []
        for w in frontier:
            last = w.letters[-1] if w.letters else None
            for c in letters:
                if last is not None and c[0] == last[0] and c[1] == -last[1]:
                    continue  # a cancelling letter revisits a shorter element
                nw = Word(w.letters + (c,))
                enc = ev.eval(nw)
                if enc not in entries:
                    entries[enc] = (depth, nw)
                    new.append(nw)
                    if max_states is not None and len(entries) > max_states:
                        raise BudgetExceeded("ball table exceeded its state cap", depth - 1)
        frontier = new
    return BallTable(radius, entries)


def write_ball_csv(table: BallTable, ev: Evaluator, out) -> None:
    """CSV with columns normal_form, min_length, witness, in deterministic
    (length, shortlex witness) order."""
    writer = csv.writer(out)
    writer.writerow(["normal_form", "min_length", "witness"])
    rows = sorted(
        table.entries.items(), key=lambda kv: (kv[1][0], shortlex_key(kv[1][1], ev.alphabet))
    )
    for enc, (length, witness) in rows:
        writer.writerow([ev.describe(enc), length, str(witness)])


def pal_length_histogram(
    ev: Evaluator,
    radius: int,
    max_factors: int,
    max_len: int,
    max_states: int | None = None,
) -> dict[str, int]:
    """Bounded palindromic-length histogram over the ball of the given
    radius; elements not expressible within the bounds count as unknown."""
    table = ball_table(ev, radius, max_states)
    index = _PalProductIndex(ev, max_len, max_states)
    identity = ev.eval(EMPTY)
    hist: dict[str, int] = {str(k): 0 for k in range(max_factors + 1)}
    hist["unknown"] = 0
    for enc in table.entries:
        if enc == identity:
            hist["0"] += 1
            continue
        for k in range(1, max_factors + 1):
            if index.find(enc, k) is not None:
                hist[str(k)] += 1
                break
        else:
            hist["unknown"] += 1
    return hist
