"""Base-point moves on words and the cyclic classes they generate.

The shift moves the base point past the first letter: ``A x A y`` becomes
``x Ā y Ā``.  Orbits are taken on isomorphism classes, so every member of a
:class:`CyclicClass` is a canonical word.  Vectors carry exact rational
coefficients.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping

from .words import EMPTY, SignedWord, _canon, canonical_form, enumerate_words, format_word

__all__ = [
    "WordVector",
    "CyclicClass",
    "nu_shift",
    "nu_shift_raw",
    "orbit",
    "class_key",
    "class_sum",
    "normalized_class",
    "enumerate_classes",
    "is_nu_invariant",
    "apply_nu",
]


def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


class WordVector:
    """Finitely supported rational combination of canonical words."""

    __slots__ = ("_entries",)

    def __init__(self, entries: Mapping[SignedWord, object] | Iterable = ()):
        acc: dict[SignedWord, Fraction] = {}
        items = entries.items() if isinstance(entries, Mapping) else entries
        for w, c in items:
            w = canonical_form(w)
            acc[w] = acc.get(w, Fraction(0)) + _frac(c)
        self._entries = {w: c for w, c in acc.items() if c != 0}

    @classmethod
    def of(cls, w: SignedWord, coeff=1) -> "WordVector":
        return cls({w: coeff})

    def items(self):
        return self._entries.items()

    def keys(self):
        return self._entries.keys()

    def coefficient(self, w: SignedWord) -> Fraction:
        return self._entries.get(canonical_form(w), Fraction(0))

    __getitem__ = coefficient

    def __len__(self):
        return len(self._entries)

    def __bool__(self):
        return bool(self._entries)

    def __eq__(self, other):
        if isinstance(other, WordVector):
            return self._entries == other._entries
        if other == 0:
            return not self._entries
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._entries.items()))

    def __add__(self, other: "WordVector") -> "WordVector":
        acc = dict(self._entries)
        for w, c in other.items():
            acc[w] = acc.get(w, Fraction(0)) + c
        return WordVector(acc)

    def __neg__(self):
        return WordVector({w: -c for w, c in self.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, scalar):
        s = _frac(scalar)
        return WordVector({w: c * s for w, c in self.items()})

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        return self * (1 / _frac(scalar))

    def lengths(self) -> set[int]:
        """Letter counts of the words in the support."""
        return {w.n for w in self._entries}

    def sorted_items(self):
        return sorted(self._entries.items(), key=lambda kv: kv[0].sort_key())

    def __repr__(self):
        if not self._entries:
            return "WordVector(0)"
        terms = " + ".join(f"{c}*{format_word(w)}" for w, c in self.sorted_items())
        return f"WordVector({terms})"


@dataclass(frozen=True)
class CyclicClass:
    """A shift orbit of canonical words, sorted in enumeration order."""

    members: tuple[SignedWord, ...]

    @property
    def size(self) -> int:
        return len(self.members)

    @property
    def key(self) -> SignedWord:
        """The least member; identifies the class in reports."""
        return self.members[0]

    @property
    def n(self) -> int:
        return self.members[0].n

    def __contains__(self, w: SignedWord) -> bool:
        return canonical_form(w) in self.members

    def __iter__(self):
        return iter(self.members)

    def __len__(self):
        return len(self.members)

    def to_json(self) -> list[str]:
        return [format_word(w) for w in self.members]


def nu_shift_raw(w: SignedWord) -> SignedWord:
    """Shift without relabeling: rotate left once and negate the moved letter
    at both of its occurrences.  Positions stay meaningful, which the
    surface code relies on."""
    if not w.letters:
        return w
    a = w.letters[0]
    rest = w.letters[1:] + (a,)
    return SignedWord._trusted(tuple(-x if abs(x) == abs(a) else x for x in rest))


def nu_shift(w: SignedWord) -> SignedWord:
    return SignedWord._trusted(_canon(nu_shift_raw(w).letters))


@lru_cache(maxsize=1 << 16)
def _orbit(letters: tuple[int, ...]) -> tuple[tuple[int, ...], ...]:
    if not letters:
        return ((),)
    start = _canon(letters)
    seen = [start]
    seen_set = {start}
    cur = start
    while True:
        a = cur[0]
        cur = _canon(tuple(-x if abs(x) == abs(a) else x for x in cur[1:] + (a,)))
        if cur in seen_set:
            break
        seen.append(cur)
        seen_set.add(cur)
    words = [SignedWord._trusted(c) for c in seen]
    words.sort(key=SignedWord.sort_key)
    return tuple(w.letters for w in words)


def orbit(w: SignedWord) -> CyclicClass:
    return CyclicClass(tuple(SignedWord._trusted(c) for c in _orbit(w.letters)))


def class_key(w: SignedWord) -> SignedWord:
    """Least member of the orbit of ``w``."""
    return SignedWord._trusted(_orbit(w.letters)[0])


def class_sum(w: SignedWord | WordVector) -> WordVector:
    """The orbit sum ``[w]``; linear in vector arguments."""
    if isinstance(w, WordVector):
        out = WordVector()
        for u, c in w.items():
            out = out + class_sum(u) * c
        return out
    return WordVector({m: 1 for m in orbit(w).members})


def normalized_class(w: SignedWord) -> WordVector:
    """``[w]`` divided by the orbit size."""
    c = orbit(w)
    return WordVector({m: Fraction(1, c.size) for m in c.members})


def apply_nu(v: WordVector) -> WordVector:
    """The shift extended linearly to vectors."""
    return WordVector({nu_shift(w): c for w, c in v.items()})


def is_nu_invariant(v: WordVector) -> bool:
    return apply_nu(v) == v


@lru_cache(maxsize=None)
def _classes(n: int) -> tuple[CyclicClass, ...]:
    done: set[SignedWord] = set()
    out = []
    for w in enumerate_words(n):
        if w in done:
            continue
        c = orbit(w)
        done.update(c.members)
        out.append(c)
    out.sort(key=lambda c: c.key.sort_key())
    return tuple(out)


def enumerate_classes(n: int) -> list[CyclicClass]:
    """Shift orbits partitioning the words with ``n`` letters, ordered by key.

    Their orbit sums form a basis of the shift-invariant subspace, so the
    length of the result is its dimension.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    return list(_classes(n))


EMPTY_CLASS = CyclicClass((EMPTY,))
