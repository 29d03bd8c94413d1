"""The invariants SCI_n, the duality between shift-invariant vectors and
functionals, and the composition audit.

A :class:`Functional` of order ``n`` stores one rational per cyclic class of
words with ``n`` letters, keyed by the class's least member.  Evaluating it
on a word returns the value of the word's class; evaluation on vectors is
linear.
"""

from __future__ import annotations

from dataclasses import dataclass, asdict
from fractions import Fraction
from math import comb, factorial
from typing import Iterable, Mapping

from .cyclic import WordVector, class_key, is_nu_invariant, orbit
from .words import SignedWord, _subword_counts, format_word, parse_word

__all__ = [
    "Functional",
    "sci",
    "sci_linear",
    "iota",
    "iota_inv",
    "compose_sci",
    "AuditRow",
    "relation_audit",
    "audit_word",
    "printed_coefficient",
    "double_count_coefficient",
]


def _frac_str(q: Fraction) -> str:
    return str(q)


class Functional:
    """Sparse linear functional on the shift-invariant words of one order."""

    __slots__ = ("order", "_values")

    def __init__(self, order: int, values: Mapping[SignedWord, object] | Iterable = ()):
        self.order = order
        acc: dict[SignedWord, Fraction] = {}
        items = values.items() if isinstance(values, Mapping) else values
        for w, c in items:
            if w.n != order:
                raise ValueError(
                    f"class {format_word(w)} has {w.n} letters, expected {order}"
                )
            k = class_key(w)
            acc[k] = acc.get(k, Fraction(0)) + Fraction(c)
        self._values = {k: c for k, c in acc.items() if c != 0}

    @classmethod
    def zero(cls, order: int) -> "Functional":
        return cls(order)

    def items(self):
        return self._values.items()

    def sorted_items(self):
        return sorted(self._values.items(), key=lambda kv: kv[0].sort_key())

    def is_zero(self) -> bool:
        return not self._values

    def value(self, w: SignedWord) -> Fraction:
        """Value on the class of a single word; 0 off the order."""
        if w.n != self.order:
            return Fraction(0)
        return self._values.get(class_key(w), Fraction(0))

    def __call__(self, v) -> Fraction:
        if isinstance(v, str):
            v = parse_word(v)
        if isinstance(v, SignedWord):
            return self.value(v)
        total = Fraction(0)
        for w, c in v.items():
            total += c * self.value(w)
        return total

    def __eq__(self, other):
        if isinstance(other, Functional):
            return self.order == other.order and self._values == other._values
        return NotImplemented

    def __hash__(self):
        return hash((self.order, frozenset(self._values.items())))

    def __add__(self, other: "Functional") -> "Functional":
        if other.order != self.order:
            raise ValueError("cannot add functionals of different orders")
        acc = dict(self._values)
        for k, c in other.items():
            acc[k] = acc.get(k, Fraction(0)) + c
        return Functional(self.order, acc)

    def __neg__(self):
        return Functional(self.order, {k: -c for k, c in self.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, scalar):
        s = Fraction(scalar)
        return Functional(self.order, {k: c * s for k, c in self.items()})

    __rmul__ = __mul__

    def to_json(self) -> dict:
        return {
            "order": self.order,
            "values": {format_word(k): _frac_str(c) for k, c in self.sorted_items()},
        }

    @classmethod
    def from_json(cls, data: dict) -> "Functional":
        return cls(
            int(data["order"]),
            {parse_word(k): Fraction(v) for k, v in data["values"].items()},
        )

    def __repr__(self):
        body = ", ".join(f"{format_word(k)}: {c}" for k, c in self.sorted_items())
        return f"Functional(order={self.order}, {{{body}}})"


def sci(n: int, gamma: SignedWord) -> Functional:
    """``v -> <[v], w_gamma>``: for each class, the number of size-``n``
    subwords of ``gamma`` lying in that class."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if n > gamma.n:
        return Functional.zero(n)
    values: dict[SignedWord, int] = {}
    for c, mult in _subword_counts(gamma.letters, n).items():
        k = class_key(SignedWord._trusted(c))
        values[k] = values.get(k, 0) + mult
    return Functional(n, values)


def _basis_coefficients(v: WordVector) -> dict[SignedWord, Fraction]:
    """Coordinates of a shift-invariant vector in the normalized-class basis."""
    lengths = v.lengths()
    if len(lengths) > 1:
        raise ValueError(f"vector mixes word lengths {sorted(lengths)}")
    if not is_nu_invariant(v):
        raise ValueError("vector is not shift-invariant")
    coords: dict[SignedWord, Fraction] = {}
    for w, c in v.items():
        cls = orbit(w)
        coords.setdefault(cls.key, c * cls.size)
    return coords


def sci_linear(n: int, v: WordVector) -> Functional:
    """SCI_n extended linearly, with a normalized class standing for its curve."""
    out = Functional.zero(n)
    for key, alpha in _basis_coefficients(v).items():
        out = out + sci(n, key) * alpha
    return out


def iota(n: int, v: WordVector) -> Functional:
    """Send each normalized class to its dual basis functional."""
    coords = _basis_coefficients(v)
    for key in coords:
        if key.n != n:
            raise ValueError(f"vector lies in length {2 * key.n}, expected {2 * n}")
    return Functional(n, coords)


def iota_inv(F: Functional) -> WordVector:
    """``sum_c F(c) * normalized(c)``."""
    out: dict[SignedWord, Fraction] = {}
    for key, val in F.items():
        cls = orbit(key)
        for m in cls.members:
            out[m] = val / cls.size
    return WordVector(out)


def compose_sci(l: int, k: int, gamma: SignedWord) -> Functional:
    """``SCI_l o iota_k^{-1} o SCI_k`` applied to ``gamma``."""
    if not 0 <= l <= k:
        raise ValueError(f"need 0 <= l <= k, got l={l}, k={k}")
    if k > gamma.n and gamma.n > 0:
        raise ValueError(f"k={k} exceeds the {gamma.n} letters of the word")
    return sci_linear(l, iota_inv(sci(k, gamma)))


def printed_coefficient(l: int, k: int, n: int) -> Fraction | None:
    """``(n-k+1)! / ((n-l-1)! (k-l)!)``; None where a factorial argument is
    negative."""
    if n - l - 1 < 0 or n - k + 1 < 0 or k - l < 0:
        return None
    return Fraction(factorial(n - k + 1), factorial(n - l - 1) * factorial(k - l))


def double_count_coefficient(l: int, k: int, n: int) -> int:
    """Each size-``l`` subword lies in ``C(n-l, k-l)`` size-``k`` subwords."""
    return comb(n - l, k - l)


@dataclass(frozen=True)
class AuditRow:
    word: str
    label: str | None
    l: int
    k: int
    n: int
    measured_lambda: Fraction | None
    closed_form: Fraction | None
    oracle_coefficient: int
    proportional: bool

    @property
    def matches_oracle(self) -> bool:
        return self.proportional and self.measured_lambda == self.oracle_coefficient

    @property
    def matches_printed(self) -> bool:
        return self.proportional and self.measured_lambda == self.closed_form

    def to_json(self) -> dict:
        d = asdict(self)
        for key in ("measured_lambda", "closed_form"):
            d[key] = None if d[key] is None else _frac_str(d[key])
        d["oracle_coefficient"] = str(self.oracle_coefficient)
        d["matches_oracle"] = self.matches_oracle
        d["matches_printed"] = self.matches_printed
        return d


def _ratio(lhs: Functional, rhs: Functional) -> tuple[Fraction | None, bool]:
    """The scalar ``lam`` with ``lhs == lam * rhs``, if one exists."""
    if rhs.is_zero():
        return (Fraction(0), True) if lhs.is_zero() else (None, False)
    key, val = next(iter(rhs.items()))
    lam = lhs.value(key) / val
    return (lam, True) if lhs == rhs * lam else (None, False)


def audit_word(l: int, k: int, w: SignedWord, label: str | None = None) -> AuditRow:
    n = w.n
    if not l <= k <= n:
        raise ValueError(f"need l <= k <= n, got l={l}, k={k}, n={n}")
    lam, ok = _ratio(compose_sci(l, k, w), sci(l, w))
    return AuditRow(
        word=format_word(w),
        label=label,
        l=l,
        k=k,
        n=n,
        measured_lambda=lam,
        closed_form=printed_coefficient(l, k, n),
        oracle_coefficient=double_count_coefficient(l, k, n),
        proportional=ok,
    )


def relation_audit(
    l: int, k: int, corpus: Iterable[SignedWord | tuple[str, SignedWord]], workers: int = 1
) -> list[AuditRow]:
    """Measure the proportionality constant of the composite against SCI_l
    for every corpus word; entries may be bare words or ``(label, word)``."""
    jobs = []
    for item in corpus:
        label, w = item if isinstance(item, tuple) else (None, item)
        jobs.append((l, k, w, label))
    if workers > 1 and len(jobs) > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=workers) as ex:
            return list(ex.map(_audit_job, jobs))
    return [_audit_job(j) for j in jobs]


def _audit_job(job):
    return audit_word(*job)

