"""Exact arithmetic in the wreath product Z wr Z and its width procedures.

Conventions, from which everything else is derived:

  * a_i denotes b^-i a b^i, so a_0 = a and conjugating by b^k moves the
    lamp at index i to index i + k;
  * an element is tail * b^shift with tail a finitely supported map from
    lamp indices to integer exponents.

`evaluate` sends a to the unit lamp at index 0 and b to a bare shift; its
homomorphism property is the binding contract that pins every sign choice,
and the randomized suites test exactly that contract.

The three constructive procedures:

  * `commutator_witness` solves [f, b] = c by prefix sums whenever the
    element has shift 0 and exponent sum 0 (every derived-subgroup element
    is a single commutator);
  * `three_palindrome_decomposition` certifies that every element is a
    product of at most three palindromic words. The middle factor carries
    the abelianized a-block at lamp index 1: placing it at index 0 fails
    re-verification whenever the block is nontrivial, because the block
    sits to the right of b^-1 in the factored word.
  * `classify_palindrome_form` matches an element against the two overlap
    shapes l*unit(-k) + h + h^(b^-2k) with shift 2k ("a-form") and
    h + h^(b^-l) with shift l ("b-form"). Word reversal actually mirrors
    the support (a_i maps to a_-i), so some palindromic words match
    neither literal shape; the classifier then falls back to the
    mirror-corrected shapes and flags the result `mirrored`.
"""

from __future__ import annotations

import json
import operator
from dataclasses import dataclass
from typing import Iterable, Mapping, Union

from .palindromes import (
    CertificateError,
    PalindromicDecomposition,
    SelfCheckError,
    check_in_group,
)
from .words import AB, Word, run_word


class NotInDerivedError(ValueError):
    """The element lies outside the derived subgroup."""


class SupportVector:
    """Finitely supported map from lamp index to a nonzero integer exponent."""

    __slots__ = ("_entries", "_key")

    def __init__(
        self, entries: Union[Mapping[int, int], Iterable[tuple[int, int]]] = ()
    ) -> None:
        data: dict[int, int] = {}
        items = entries.items() if isinstance(entries, Mapping) else entries
        for i, e in items:
            v = data.get(i, 0) + e
            if v:
                data[i] = v
            elif i in data:
                del data[i]
        self._entries = data
        self._key = tuple(sorted(data.items()))

    @classmethod
    def unit(cls, index: int, exponent: int = 1) -> "SupportVector":
        return cls({index: exponent} if exponent else {})

    def items(self) -> tuple[tuple[int, int], ...]:
        """Entries in ascending index order."""
        return self._key

    def support(self) -> tuple[int, ...]:
        return tuple(i for i, _ in self._key)

    def __getitem__(self, index: int) -> int:
        return self._entries.get(index, 0)

    def __bool__(self) -> bool:
        return bool(self._entries)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, SupportVector) and self._key == other._key

    def __hash__(self) -> int:
        return hash(self._key)

    def __repr__(self) -> str:
        return f"SupportVector({dict(self._key)!r})"

    def __add__(self, other: "SupportVector") -> "SupportVector":
        merged = dict(self._entries)
        for i, e in other._entries.items():
            v = merged.get(i, 0) + e
            if v:
                merged[i] = v
            else:
                del merged[i]
        return SupportVector(merged)

    def __neg__(self) -> "SupportVector":
        return SupportVector({i: -e for i, e in self._entries.items()})

    def __sub__(self, other: "SupportVector") -> "SupportVector":
        return self + (-other)

    def shift(self, k: int) -> "SupportVector":
        """Conjugate by b^k: the entry at index i moves to index i + k."""
        if k == 0:
            return self
        return SupportVector({i + k: e for i, e in self._entries.items()})

    def mirror(self) -> "SupportVector":
        """Image under the reversal anti-automorphism: a_i maps to a_-i."""
        return SupportVector({-i: e for i, e in self._entries.items()})

    def exponent_sum(self) -> int:
        """Sum of all exponents; vanishes exactly on derived-subgroup tails."""
        return sum(self._entries.values())


@dataclass(frozen=True)
class WreathElement:
    tail: SupportVector = SupportVector()
    shift: int = 0

    @classmethod
    def identity(cls) -> "WreathElement":
        return cls()

    def __mul__(self, other: "WreathElement") -> "WreathElement":
        return WreathElement(
            self.tail + other.tail.shift(-self.shift), self.shift + other.shift
        )

    def inverse(self) -> "WreathElement":
        return WreathElement((-self.tail).shift(self.shift), -self.shift)

    __invert__ = inverse

    def b_conjugate(self, k: int) -> "WreathElement":
        """b^-k * self * b^k: shifts the tail by +k, leaves the shift alone."""
        return WreathElement(self.tail.shift(k), self.shift)

    def in_derived_subgroup(self) -> bool:
        return self.shift == 0 and self.tail.exponent_sum() == 0

    def to_json(self) -> dict:
        return {
            "support": {str(i): e for i, e in self.tail.items()},
            "shift": self.shift,
        }

    @classmethod
    def from_json(cls, doc: object) -> "WreathElement":
        if not isinstance(doc, dict) or set(doc) != {"support", "shift"}:
            raise ValueError('expected {"support": {...}, "shift": int}')
        support = doc["support"]
        shift = doc["shift"]
        if not isinstance(shift, int) or isinstance(shift, bool):
            raise ValueError("shift must be an integer")
        if not isinstance(support, dict):
            raise ValueError("support must be an object with decimal index keys")
        entries = {}
        for key, val in support.items():
            if not isinstance(val, int) or isinstance(val, bool) or val == 0:
                raise ValueError(f"support entry {key!r} must be a nonzero integer")
            entries[int(key)] = val
        return cls(SupportVector(entries), shift)

    def literal(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)

    def __str__(self) -> str:
        return self.literal()


_GENERATORS = {"a": WreathElement(SupportVector.unit(0), 0), "b": WreathElement(SupportVector(), 1)}


def evaluate(w: Word) -> WreathElement:
    """Image of a word over {a, b} under a -> unit lamp at 0, b -> shift 1."""
    tail: dict[int, int] = {}
    shift = 0
    for gen, sign in w:
        if gen == "a":
            i = -shift
            v = tail.get(i, 0) + sign
            if v:
                tail[i] = v
            else:
                del tail[i]
        elif gen == "b":
            shift += sign
        else:
            raise ValueError(f"word is not over the alphabet {{a, b}}: {gen!r}")
    return WreathElement(SupportVector(tail), shift)


def reversal_image(g: WreathElement) -> WreathElement:
    """Image of g under the reversal anti-automorphism (fixes a and b,
    reverses products): evaluate(w.reverse()) == reversal_image(evaluate(w))."""
    return WreathElement(g.tail.mirror().shift(-g.shift), g.shift)


def support_word(tail: SupportVector) -> Word:
    """Canonical word for a tail: ascending lamp walk with blocks
    b^-i a^(n_i) b^i and the b-travel between blocks fused."""
    letters: list[tuple[str, int]] = []
    pos = 0
    for i, e in tail.items():
        travel = pos - i
        letters.extend([("b", 1 if travel > 0 else -1)] * abs(travel))
        letters.extend([("a", 1 if e > 0 else -1)] * abs(e))
        pos = i
    letters.extend([("b", 1 if pos > 0 else -1)] * abs(pos))
    return Word(tuple(letters))


def to_word(g: WreathElement) -> Word:
    return support_word(g.tail) * run_word("b", g.shift)


def commutator_with_b(f: SupportVector) -> WreathElement:
    """[f, b] = f^-1 * f^b as an element."""
    return WreathElement(f.shift(1) - f, 0)


def commutator_witness(g: WreathElement) -> SupportVector:
    """f with [f, b] = g exactly, for g in the derived subgroup.

    Writing g's tail entries as n_m ... n_M, the witness has
    f_i = -(n_m + ... + n_i) for m <= i <= M - 1; the final equation closes
    because the exponent sum vanishes.
    """
    if not g.in_derived_subgroup():
        raise NotInDerivedError(
            "element is not in the derived subgroup (needs shift 0 and exponent sum 0)"
        )
    items = g.tail.items()
    if not items:
        return SupportVector()
    lo, hi = items[0][0], items[-1][0]
    f: dict[int, int] = {}
    acc = 0
    for i in range(lo, hi):
        acc += g.tail[i]
        if acc:
            f[i] = -acc
    witness = SupportVector(f)
    if commutator_with_b(witness) != g:
        raise SelfCheckError("commutator witness failed re-verification")
    return witness


def _check_wreath_certificate(dec: PalindromicDecomposition, g: WreathElement) -> None:
    try:
        check_in_group(dec, evaluate)
    except CertificateError as exc:
        raise SelfCheckError(f"wreath certificate invalid: {exc}") from exc
    if evaluate(dec.target) != g:
        raise SelfCheckError("certificate target does not evaluate to the element")
    if dec.length > 3:
        raise SelfCheckError(f"certificate has {dec.length} factors, expected <= 3")


def three_palindrome_decomposition(g: WreathElement) -> PalindromicDecomposition:
    """Certificate with at most three palindromic factors multiplying to g.

    Splits g as a_1^k * b^l * d with d derived (k the exponent sum, l the
    shift), takes f with [f, b] = d shifted by -l, and emits

        w(-f) b^-1 rev(w(-f))  .  rev(w(f)) a^k w(f)  .  b^(l+1)

    where w(.) is the canonical tail word. Each factor is a symmetric
    string; the two rev(.) blocks cancel in the group because the tail
    subgroup is abelian. Elements whose canonical word is already a
    palindrome are returned as a single factor.
    """
    canonical = to_word(g)
    if canonical.is_palindrome():
        factors: tuple[Word, ...] = (canonical,) if canonical else ()
        dec = PalindromicDecomposition(canonical, factors, AB)
        _check_wreath_certificate(dec, g)
        return dec
    k = g.tail.exponent_sum()
    l = g.shift
    derived_tail = (g.tail - SupportVector.unit(1, k)).shift(l)
    f = commutator_witness(WreathElement(derived_tail, 0)).shift(-l)
    w_pos = support_word(f)
    w_neg = support_word(-f)
    b_inv = run_word("b", -1)
    first = w_neg * b_inv * w_neg.reverse()
    middle = w_pos.reverse() * run_word("a", k) * w_pos
    last = run_word("b", l + 1)
    dec = PalindromicDecomposition(
        canonical, tuple(x for x in (first, middle, last) if x), AB
    )
    _check_wreath_certificate(dec, g)
    return dec


@dataclass(frozen=True)
class PalindromeForm:
    """Result of `classify_palindrome_form`: the matched shape with its
    witness, or kind == "neither"."""

    kind: str  # "a-form" | "b-form" | "neither"
    h: SupportVector | None = None
    k: int | None = None
    l: int | None = None
    mirrored: bool = False

    def matches(self) -> bool:
        return self.kind != "neither"


def _overlap(tail: SupportVector, step: int) -> SupportVector | None:
    """Solve tail = h + h.shift(-step) for a finitely supported h.

    For step != 0 the equations tail_i = h_i + h_{i+step} decouple over
    residue classes mod |step|; walking each class from the end where h
    must vanish determines h uniquely, and solvability is the vanishing of
    the final residual.
    """
    if step == 0:
        if any(v % 2 for _, v in tail.items()):
            return None
        return SupportVector({i: v // 2 for i, v in tail.items()})
    width = abs(step)
    groups: dict[int, list[int]] = {}
    for i, _ in tail.items():
        groups.setdefault(i % width, []).append(i)
    solved: dict[int, int] = {}
    for idxs in groups.values():
        lo, hi = min(idxs), max(idxs)
        rng = range(hi, lo - 1, -width) if step > 0 else range(lo, hi + 1, width)
        last = 0
        for i in rng:
            v = tail[i] - solved.get(i + step, 0)
            if v:
                solved[i] = v
            last = v
        if last:
            return None
    return SupportVector(solved)


def _overlap_with_center(
    tail: SupportVector, step: int, center: int
) -> tuple[SupportVector, int] | None:
    """Solve tail - l*unit(center) = h + h.shift(-step) for some integer l.

    Only the residue class of `center` can absorb l; the residual of that
    class is affine in l with slope +-1, so a workable l always exists
    provided every other class admits a plain overlap solution.
    """
    if step == 0:
        if any(v % 2 for i, v in tail.items() if i != center):
            return None
        l = tail[center] % 2
        h = {i: (v - (l if i == center else 0)) // 2 for i, v in tail.items()}
        return SupportVector(h), l
    width = abs(step)
    rest = SupportVector({i: v for i, v in tail.items() if (i - center) % width})
    h_rest = _overlap(rest, step)
    if h_rest is None:
        return None
    idxs = sorted({i for i, _ in tail.items() if (i - center) % width == 0} | {center})
    lo, hi = idxs[0], idxs[-1]
    rng = range(hi, lo - 1, -width) if step > 0 else range(lo, hi + 1, width)

    def walk(l: int) -> tuple[dict[int, int], int]:
        solved: dict[int, int] = {}
        last = 0
        for i in rng:
            v = tail[i] - (l if i == center else 0) - solved.get(i + step, 0)
            if v:
                solved[i] = v
            last = v
        return solved, last

    _, r0 = walk(0)
    _, r1 = walk(1)
    slope = r1 - r0
    if slope not in (1, -1):  # the center always lies inside the walk
        raise SelfCheckError("center class residual is not affine with unit slope")
    l = -r0 // slope
    solved, last = walk(l)
    if last:
        raise SelfCheckError("center class did not close after choosing l")
    return SupportVector(tuple(h_rest.items()) + tuple(solved.items())), l


def _mirror_pairs(
    tail: SupportVector, s: int, free_center: bool
) -> tuple[SupportVector, int | None] | None:
    """Solve tail = [e at -s/2] + h + h.mirror().shift(-s).

    The equations pair index i with -s - i, so the tail must be symmetric
    under that involution; the fixed point (present only for even s) needs
    an even entry, unless `free_center` lets e soak it up.
    """
    entries = dict(tail.items())
    h: dict[int, int] = {}
    e = 0
    seen: set[int] = set()
    for i in sorted(entries):
        if i in seen:
            continue
        j = -s - i
        v = entries[i]
        if i == j:
            if free_center:
                e = v
            elif v % 2:
                return None
            else:
                h[i] = v // 2
        else:
            if entries.get(j, 0) != v:
                return None
            h[max(i, j)] = v
            seen.add(j)
        seen.add(i)
    return SupportVector(h), (e if free_center else None)


def classify_palindrome_form(g: WreathElement) -> PalindromeForm:
    """Match g against the palindrome shapes; the literal overlap shapes
    are tried first, the mirror-corrected shapes as fallback (flagged
    `mirrored`). Every image of a palindromic word matches some shape;
    the converse is not claimed."""
    tail, s = g.tail, g.shift
    h = _overlap(tail, s)
    if h is not None:
        assert tail == h + h.shift(-s)
        return PalindromeForm("b-form", h=h, l=s)
    if s % 2 == 0:
        res = _overlap_with_center(tail, s, -(s // 2))
        if res is not None:
            h, l = res
            k = s // 2
            assert tail == SupportVector.unit(-k, l) + h + h.shift(-s)
            return PalindromeForm("a-form", h=h, k=k, l=l)
    mirrored = _mirror_pairs(tail, s, free_center=False)
    if mirrored is not None:
        h, _ = mirrored
        assert tail == h + h.mirror().shift(-s)
        return PalindromeForm("b-form", h=h, l=s, mirrored=True)
    if s % 2 == 0:
        mirrored = _mirror_pairs(tail, s, free_center=True)
        if mirrored is not None:
            h, e = mirrored
            k = s // 2
            assert e is not None
            assert tail == SupportVector.unit(-k, e) + h + h.mirror().shift(-s)
            return PalindromeForm("a-form", h=h, k=k, l=e, mirrored=True)
    return PalindromeForm("neither")


def evaluator():
    """Plug-in for the generic search engine."""
    from .search import Evaluator

    return Evaluator(
        label="wreath",
        alphabet=AB,
        eval=evaluate,
        mul=operator.mul,
        inv=WreathElement.inverse,
        describe=WreathElement.literal,
    )
