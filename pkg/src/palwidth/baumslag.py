"""Solvable Baumslag-Solitar groups BS(1, n) via the affine representation.

BS(1, n) = < a, t | t^-1 a t = a^n > with |n| >= 2 acts faithfully on the
rationals by a: x -> x + 1 and t: x -> x / n, composed left to right along
the word. An element is therefore a pair (q, dil) acting as
x -> n^dil * x + q, where q has a power-of-n denominator; the reduced
two-integer encoding (num, den_exp) with q = num / n^den_exp makes
equality a tuple comparison.

Every element equals t^k a^l t^-m with k, m >= 0, and then
t^k a^l t^k . t^(-m-k) exhibits it as a product of two palindromes.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .palindromes import (
    CertificateError,
    PalindromicDecomposition,
    SelfCheckError,
    check_in_group,
)
from .search import enumerate_palindromes
from .words import AT, Word, run_word


@dataclass(frozen=True)
class BSElement:
    num: int
    den_exp: int
    dil: int
    n: int

    def __post_init__(self) -> None:
        if abs(self.n) < 2:
            raise ValueError(f"group parameter must satisfy |n| >= 2, got {self.n}")
        if self.den_exp < 0:
            raise ValueError("den_exp must be non-negative")
        num, den_exp = self.num, self.den_exp
        if num == 0:
            den_exp = 0
        else:
            while den_exp and num % self.n == 0:
                num //= self.n
                den_exp -= 1
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den_exp", den_exp)

    @classmethod
    def identity(cls, n: int) -> "BSElement":
        return cls(0, 0, 0, n)

    @classmethod
    def gen_a(cls, n: int) -> "BSElement":
        return cls(1, 0, 0, n)

    @classmethod
    def gen_t(cls, n: int) -> "BSElement":
        return cls(0, 0, 1, n)

    def translation(self) -> Fraction:
        return Fraction(self.num, self.n**self.den_exp)

    def __mul__(self, other: "BSElement") -> "BSElement":
        if self.n != other.n:
            raise ValueError("cannot multiply elements of different BS(1, n) groups")
        n = self.n
        # q = q1 * n^d2 + q2, over the common power-of-n denominator
        e1, num1 = self.den_exp - other.dil, self.num
        if e1 < 0:
            num1 *= n ** (-e1)
            e1 = 0
        e2, num2 = other.den_exp, other.num
        e = max(e1, e2)
        return BSElement(
            num1 * n ** (e - e1) + num2 * n ** (e - e2), e, self.dil + other.dil, n
        )

    def inverse(self) -> "BSElement":
        e = self.den_exp + self.dil
        if e >= 0:
            return BSElement(-self.num, e, -self.dil, self.n)
        return BSElement(-self.num * self.n ** (-e), 0, -self.dil, self.n)

    __invert__ = inverse

    def to_json(self) -> dict:
        return {"num": self.num, "den_exp": self.den_exp, "dil": self.dil, "n": self.n}

    @classmethod
    def from_json(cls, doc: object) -> "BSElement":
        if not isinstance(doc, dict) or set(doc) != {"num", "den_exp", "dil", "n"}:
            raise ValueError('expected {"num": int, "den_exp": int, "dil": int, "n": int}')
        for key in ("num", "den_exp", "dil", "n"):
            if not isinstance(doc[key], int) or isinstance(doc[key], bool):
                raise ValueError(f"{key} must be an integer")
        return cls(doc["num"], doc["den_exp"], doc["dil"], doc["n"])

    def __str__(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)


def evaluate(w: Word, n: int) -> BSElement:
    # fold run by run: normal forms carry a^l blocks with huge l, and a run
    # is a single multiplication (a^e adds e, t^e scales by n^e)
    out = BSElement.identity(n)
    letters = w.letters
    i, size = 0, len(letters)
    while i < size:
        gen, sign = letters[i]
        j = i
        while j < size and letters[j] == (gen, sign):
            j += 1
        exp = sign * (j - i)
        if gen == "a":
            out = out * BSElement(exp, 0, 0, n)
        elif gen == "t":
            out = out * BSElement(0, 0, exp, n)
        else:
            raise ValueError(f"word is not over the alphabet {{a, t}}: {gen!r}")
        i = j
    return out


def normal_form(g: BSElement) -> tuple[int, int, int]:
    """The minimal (k, l, m) with g = t^k a^l t^-m, k, m >= 0.

    Re-evaluating t^k a^l t^-m gives (l * n^-m, k - m), so m must clear the
    reduced denominator exponent and keep k non-negative; the smallest such
    m makes the form unique, and n never divides l when both k and m are
    positive.
    """
    m = max(g.den_exp, -g.dil)
    k = g.dil + m
    l = g.num * g.n ** (m - g.den_exp)
    if evaluate(normal_form_word(k, l, m), g.n) != g:
        raise SelfCheckError("normal form failed re-evaluation")
    return k, l, m


def normal_form_word(k: int, l: int, m: int) -> Word:
    return run_word("t", k) * run_word("a", l) * run_word("t", -m)


def two_palindrome_decomposition(g: BSElement) -> PalindromicDecomposition:
    """Certificate with at most two palindromic factors multiplying to g:
    the symmetric string t^k a^l t^k followed by t^(-m-k). Pure powers of t
    collapse to a single factor."""
    k, l, m = normal_form(g)
    target = normal_form_word(k, l, m)
    if l == 0:
        factors = (run_word("t", k - m),) if k != m else ()
    else:
        symmetric = run_word("t", k) * run_word("a", l) * run_word("t", k)
        factors = tuple(f for f in (symmetric, run_word("t", -m - k)) if f)
    dec = PalindromicDecomposition(target, factors, AT)
    try:
        check_in_group(dec, lambda w: evaluate(w, g.n))
    except CertificateError as exc:
        raise SelfCheckError(f"BS certificate invalid: {exc}") from exc
    if evaluate(dec.target, g.n) != g:
        raise SelfCheckError("certificate target does not evaluate to the element")
    if dec.length > 2:
        raise SelfCheckError(f"certificate has {dec.length} factors, expected <= 2")
    return dec


def palindrome_search_bounded(g: BSElement, max_len: int) -> Word | None:
    """Shortlex-first palindromic word of length <= max_len evaluating to g,
    or None. Absence within the bound is evidence, not a proof."""
    for w in enumerate_palindromes(AT, max_len):
        if evaluate(w, g.n) == g:
            return w
    return None


def evaluator(n: int):
    """Plug-in for the generic search engine."""
    from .search import Evaluator

    return Evaluator(
        label=f"bs:{n}",
        alphabet=AT,
        eval=lambda w: evaluate(w, n),
        mul=lambda g1, g2: g1 * g2,
        inv=BSElement.inverse,
        describe=str,
    )
