"""Signed Gauss words: parsing, canonical forms, isomorphism, subwords and
the subword-counting pairing.

A word is stored as a tuple of non-zero integers.  The absolute value is the
letter name and the sign of the integer is the letter sign, so ``(-1, 2, -1, 2)``
is the word usually written ``X̄1 X2 X̄1 X2`` (compact form ``AbAb``).
"""

from __future__ import annotations

import re
from collections import Counter
from functools import lru_cache
from itertools import combinations, product
from typing import Iterator, NamedTuple

__all__ = [
    "WordError",
    "WordParseError",
    "WordValidationError",
    "Letter",
    "SignedWord",
    "EMPTY",
    "parse_word",
    "parse_word_labels",
    "format_word",
    "canonical_form",
    "are_isomorphic",
    "restrict",
    "subwords_of_size",
    "indicator",
    "pairing",
    "subword_counts",
    "enumerate_patterns",
    "enumerate_words",
    "count_words",
]

EMPTY_SYMBOL = "∅"


class WordError(ValueError):
    pass


class WordParseError(WordError):
    """Malformed text that cannot be read as a word."""


class WordValidationError(WordError):
    """Well-formed text or data violating the double-occurrence rules."""


class Letter(NamedTuple):
    name: int
    sign: int

    def __str__(self):
        return f"{self.name}{'+' if self.sign > 0 else '-'}"


def _check(letters: tuple[int, ...]) -> None:
    counts = Counter(abs(x) for x in letters)
    for x in letters:
        if not isinstance(x, int) or x == 0:
            raise WordValidationError(f"invalid letter {x!r}: names must be positive")
    bad = sorted(name for name, c in counts.items() if c != 2)
    if bad:
        raise WordValidationError(
            "letter(s) " + ", ".join(map(str, bad)) + " must occur exactly twice"
        )
    seen: dict[int, int] = {}
    for x in letters:
        s = seen.setdefault(abs(x), x)
        if s != x:
            raise WordValidationError(f"letter {abs(x)} occurs with inconsistent signs")


class SignedWord:
    """Immutable double-occurrence word over signed letters."""

    __slots__ = ("letters", "_hash")

    def __init__(self, letters=()):
        if isinstance(letters, SignedWord):
            letters = letters.letters
        elif letters and isinstance(letters[0], Letter):
            letters = [l.name * l.sign for l in letters]
        letters = tuple(int(x) for x in letters)
        _check(letters)
        object.__setattr__(self, "letters", letters)
        object.__setattr__(self, "_hash", hash(letters))

    @classmethod
    def _trusted(cls, letters: tuple[int, ...]) -> "SignedWord":
        # no validation: callers guarantee a valid tuple
        self = object.__new__(cls)
        object.__setattr__(self, "letters", letters)
        object.__setattr__(self, "_hash", hash(letters))
        return self

    def __setattr__(self, key, value):
        raise AttributeError("SignedWord is immutable")

    def __reduce__(self):
        return (SignedWord._trusted, (self.letters,))

    def __len__(self):
        return len(self.letters)

    def __iter__(self) -> Iterator[Letter]:
        for x in self.letters:
            yield Letter(abs(x), 1 if x > 0 else -1)

    def __getitem__(self, i) -> Letter:
        x = self.letters[i]
        return Letter(abs(x), 1 if x > 0 else -1)

    def __eq__(self, other):
        if isinstance(other, SignedWord):
            return self.letters == other.letters
        return NotImplemented

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"SignedWord({format_word(self)!r})"

    def __str__(self):
        return format_word(self)

    @property
    def n(self) -> int:
        """Number of distinct letters (double points)."""
        return len(self.letters) // 2

    @property
    def occurrences(self) -> tuple[Letter, ...]:
        return tuple(self)

    def names(self) -> list[int]:
        """Letter names in order of first occurrence."""
        out, seen = [], set()
        for x in self.letters:
            if abs(x) not in seen:
                seen.add(abs(x))
                out.append(abs(x))
        return out

    def sign_of(self, name: int) -> int:
        for x in self.letters:
            if abs(x) == name:
                return 1 if x > 0 else -1
        raise KeyError(name)

    def positions(self, name: int) -> tuple[int, int]:
        p = [i for i, x in enumerate(self.letters) if abs(x) == name]
        if len(p) != 2:
            raise KeyError(name)
        return p[0], p[1]

    def mirror(self) -> "SignedWord":
        """Negate every sign."""
        return SignedWord._trusted(tuple(-x for x in self.letters))

    def sort_key(self) -> tuple:
        """Ordering key: occurrence pattern first, then the sign vector
        (``+`` before ``-``) of the letters in first-occurrence order."""
        c = canonical_form(self).letters
        pattern = tuple(abs(x) for x in c)
        signs = []
        seen = set()
        for x in c:
            if abs(x) not in seen:
                seen.add(abs(x))
                signs.append(0 if x > 0 else 1)
        return (len(c), pattern, tuple(signs))


EMPTY = SignedWord._trusted(())


# --- text formats -----------------------------------------------------------

_TOKEN = re.compile(r"^([A-Za-z][A-Za-z0-9]*|[0-9]+)([+-])$")
_COMPACT = re.compile(r"^[A-Za-z]+$")


def _check_labelled(pairs: list[tuple[str, int]]) -> None:
    counts = Counter(lab for lab, _ in pairs)
    bad = [lab for lab in counts if counts[lab] != 2]
    if bad:
        raise WordValidationError(
            "letter(s) " + ", ".join(bad) + " must occur exactly twice"
        )
    signs: dict[str, int] = {}
    for lab, s in pairs:
        if signs.setdefault(lab, s) != s:
            raise WordValidationError(f"letter {lab} occurs with inconsistent signs")


def parse_word_labels(text: str) -> tuple[SignedWord, dict[str, int]]:
    """Parse ``text`` and also return the map from source labels to names.

    Compact labels are the lowercase letters.  Token labels are kept
    verbatim; integer labels keep their value and other labels receive
    fresh names above every integer label, in order of first appearance.
    """
    text = text.strip()
    if text in ("", EMPTY_SYMBOL):
        return EMPTY, {}
    if _COMPACT.match(text):
        letters = tuple(
            (ord(ch.lower()) - 96) * (1 if ch.islower() else -1) for ch in text
        )
        labels = {ch.lower(): ord(ch.lower()) - 96 for ch in text}
        _check_labelled([(ch.lower(), 1 if ch.islower() else -1) for ch in text])
        return SignedWord(letters), labels
    tokens = text.split()
    parsed = []
    for tok in tokens:
        m = _TOKEN.match(tok)
        if not m:
            raise WordParseError(f"malformed token {tok!r}")
        parsed.append((m.group(1), 1 if m.group(2) == "+" else -1))
    _check_labelled([(str(int(lab)) if lab.isdigit() else lab, s) for lab, s in parsed])
    labels: dict[str, int] = {}
    numeric = [int(lab) for lab, _ in parsed if lab.isdigit()]
    if any(v == 0 for v in numeric):
        raise WordParseError("integer letter names must be positive")
    for lab in numeric:
        labels[str(lab)] = lab
    nxt = max(numeric, default=0) + 1
    for lab, _ in parsed:
        key = str(int(lab)) if lab.isdigit() else lab
        if key not in labels:
            labels[key] = nxt
            nxt += 1
    letters = tuple(
        labels[str(int(lab)) if lab.isdigit() else lab] * s for lab, s in parsed
    )
    return SignedWord(letters), labels


def parse_word(text: str) -> SignedWord:
    """Read a word in token form (``a+ b- a+ b-``) or compact form (``aBaB``).

    >>> parse_word("aBaB").letters
    (1, -2, 1, -2)
    """
    return parse_word_labels(text)[0]


def format_word(w: SignedWord, form: str | None = None) -> str:
    """Compact form when every name is at most 26, token form otherwise."""
    if not w.letters:
        return EMPTY_SYMBOL
    if form is None:
        form = "compact" if max(abs(x) for x in w.letters) <= 26 else "token"
    if form == "compact":
        return "".join(
            chr(96 + abs(x)) if x > 0 else chr(64 + abs(x)) for x in w.letters
        )
    return " ".join(f"{abs(x)}{'+' if x > 0 else '-'}" for x in w.letters)


# --- canonical forms ----------------------------------------------------------


@lru_cache(maxsize=1 << 16)
def _canon(letters: tuple[int, ...]) -> tuple[int, ...]:
    relabel: dict[int, int] = {}
    out = []
    for x in letters:
        a = abs(x)
        r = relabel.get(a)
        if r is None:
            r = relabel[a] = len(relabel) + 1
        out.append(r if x > 0 else -r)
    return tuple(out)


def canonical_form(w: SignedWord) -> SignedWord:
    """Relabel letters 1, 2, 3, ... in order of first occurrence."""
    c = _canon(w.letters)
    return w if c == w.letters else SignedWord._trusted(c)


def are_isomorphic(u: SignedWord, w: SignedWord) -> bool:
    return _canon(u.letters) == _canon(w.letters)


def indicator(u: SignedWord, v: SignedWord) -> int:
    return 1 if are_isomorphic(u, v) else 0


# --- subwords and pairing ---------------------------------------------------------


def restrict(w: SignedWord, names) -> SignedWord:
    """The subword of ``w`` on the given letter names (order and signs kept)."""
    keep = set(names)
    return SignedWord._trusted(tuple(x for x in w.letters if abs(x) in keep))


def subwords_of_size(w: SignedWord, k: int) -> list[SignedWord]:
    """One subword per ``k``-subset of the letters of ``w``.

    Subsets are taken in lexicographic order of the first-occurrence
    positions of their letters.  Empty when ``k`` exceeds the letter count.
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    names = w.names()
    if k > len(names):
        return []
    return [restrict(w, s) for s in combinations(names, k)]


@lru_cache(maxsize=4096)
def _subword_counts(letters: tuple[int, ...], k: int) -> dict[tuple[int, ...], int]:
    names = []
    seen = set()
    for x in letters:
        if abs(x) not in seen:
            seen.add(abs(x))
            names.append(abs(x))
    counts: Counter = Counter()
    for s in combinations(names, k):
        keep = set(s)
        counts[_canon(tuple(x for x in letters if abs(x) in keep))] += 1
    return dict(counts)


def subword_counts(w: SignedWord, k: int) -> dict[SignedWord, int]:
    """Canonical size-``k`` subwords of ``w`` with their multiplicities."""
    if k < 0 or k > w.n:
        return {}
    return {
        SignedWord._trusted(c): m for c, m in _subword_counts(w.letters, k).items()
    }


def pairing(u: SignedWord, w: SignedWord) -> int:
    """Number of subwords of ``w`` isomorphic to ``u``."""
    k = u.n
    if k > w.n:
        return 0
    if k == 0:
        return 1
    # cheap rejection: sign multisets must embed
    pu = sum(1 for x in u.letters if x > 0)
    pw = sum(1 for x in w.letters if x > 0)
    if pu > pw or (len(u.letters) - pu) > (len(w.letters) - pw):
        return 0
    return _subword_counts(w.letters, k).get(_canon(u.letters), 0)


# --- enumeration --------------------------------------------------------------------


def enumerate_patterns(n: int) -> Iterator[tuple[int, ...]]:
    """Canonical unsigned double-occurrence patterns of length ``2n`` in
    lexicographic order; there are (2n-1)!! of them."""
    if n < 0:
        raise ValueError("n must be non-negative")
    seq: list[int] = []
    used = [0] * (n + 2)

    def rec(opened: int, pending: int):
        if len(seq) == 2 * n:
            yield tuple(seq)
            return
        remaining = 2 * n - len(seq)
        for name in range(1, opened + 1):
            if used[name] == 1:
                used[name] = 2
                seq.append(name)
                yield from rec(opened, pending - 1)
                seq.pop()
                used[name] = 1
        if opened < n and pending + 2 <= remaining:
            name = opened + 1
            used[name] = 1
            seq.append(name)
            yield from rec(opened + 1, pending + 1)
            seq.pop()
            used[name] = 0

    yield from rec(0, 0)


def enumerate_words(n: int) -> Iterator[SignedWord]:
    """Every isomorphism class of words with ``n`` letters, once, canonical,
    ordered by (pattern, sign vector)."""
    for pattern in enumerate_patterns(n):
        for signs in product((1, -1), repeat=n):
            yield SignedWord._trusted(tuple(x * signs[x - 1] for x in pattern))


def count_words(n: int) -> int:
    """(2n-1)!! * 2**n."""
    out = 2**n
    for j in range(1, 2 * n, 2):
        out *= j
    return out

