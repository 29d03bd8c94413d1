"""Singular curves as pattern descriptors on their all-positive word, the
negative-resolution rewrites, and the alternating resolution sum.

Every singular point is described by ordered letter names and a case id.
Each case is a sequence of adjacent two-letter blocks that must appear, in
order, in the base word with fixed signs.  A negative resolution deletes the
blocks (self-tangencies) or reverses each block in place (triple points).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Sequence

from .sci import Functional, sci
from .words import SignedWord, WordValidationError, canonical_form, format_word, parse_word_labels

__all__ = [
    "CASES",
    "Case",
    "SingularPoint",
    "SingularCurve",
    "SingularityError",
    "validate_singular",
    "resolve",
    "resolve_raw",
    "resolve_all",
    "expanded_invariant",
    "finite_type_check",
    "insert_singularity",
    "safe_gaps",
    "sign_product",
]

KINDS = ("direct", "inverse", "triple")
_KIND_ALIASES = {
    "direct": "direct",
    "direct_tangency": "direct",
    "inverse": "inverse",
    "inverse_tangency": "inverse",
    "triple": "triple",
}


class SingularityError(WordValidationError):
    pass


@dataclass(frozen=True)
class Case:
    kind: str
    signs: tuple[int, ...]
    # letter indices (0=A, 1=B, 2=C) of each adjacent block, in word order
    blocks: tuple[tuple[int, int], ...]

    @property
    def arity(self) -> int:
        return len(self.signs)

    def pattern(self) -> str:
        sym = "ABC"
        parts = []
        for b in self.blocks:
            parts.append(
                "".join(sym[i] if self.signs[i] > 0 else sym[i] + "̄" for i in b)
            )
        gaps = "xyzt"
        return "".join(g + p for g, p in zip(gaps, parts)) + gaps[len(parts)]


def _negated(c: Case) -> Case:
    return Case(c.kind, tuple(-s for s in c.signs), c.blocks)


CASES: dict[str, Case] = {
    "D1": Case("direct", (-1, 1), ((0, 1), (0, 1))),
    "D2": Case("direct", (1, -1), ((0, 1), (0, 1))),
    "I1": Case("inverse", (-1, 1), ((0, 1), (1, 0))),
    "I2": Case("inverse", (1, -1), ((0, 1), (1, 0))),
    "T1": Case("triple", (1, 1, 1), ((0, 1), (2, 1), (2, 0))),
    "T2": Case("triple", (-1, 1, 1), ((0, 1), (0, 2), (2, 1))),
    "T3": Case("triple", (1, -1, 1), ((0, 1), (2, 0), (1, 2))),
    "T4": Case("triple", (1, 1, -1), ((0, 1), (1, 2), (0, 2))),
}
for _i in range(1, 5):
    CASES[f"T{_i + 4}"] = _negated(CASES[f"T{_i}"])
del _i


@dataclass(frozen=True)
class SingularPoint:
    kind: str
    case_id: str
    letters: tuple[int, ...]

    def __post_init__(self):
        kind = _KIND_ALIASES.get(self.kind)
        if kind is None:
            raise SingularityError(f"unknown singular point kind {self.kind!r}")
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "letters", tuple(int(x) for x in self.letters))
        case = CASES.get(self.case_id)
        if case is None:
            raise SingularityError(f"unknown case {self.case_id!r}")
        if case.kind != kind:
            raise SingularityError(f"case {self.case_id} is a {case.kind} point, not {kind}")
        if len(self.letters) != case.arity:
            raise SingularityError(
                f"case {self.case_id} needs {case.arity} letters, got {len(self.letters)}"
            )
        if len(set(self.letters)) != len(self.letters):
            raise SingularityError("letters of a singular point must be distinct")

    @property
    def case(self) -> Case:
        return CASES[self.case_id]


@dataclass(frozen=True)
class SingularCurve:
    base: SignedWord
    points: tuple[SingularPoint, ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "points", tuple(self.points))

    @property
    def m(self) -> int:
        return len(self.points)

    def to_json(self) -> dict:
        compact = not self.base.letters or max(abs(x) for x in self.base.letters) <= 26

        def label(name):
            return chr(96 + name) if compact else str(name)

        return {
            "base": format_word(self.base),
            "points": [
                {"kind": p.kind, "case": p.case_id, "letters": [label(x) for x in p.letters]}
                for p in self.points
            ],
        }

    @classmethod
    def from_json(cls, data: dict) -> "SingularCurve":
        base, labels = parse_word_labels(data.get("base", ""))
        lower = {k.lower(): v for k, v in labels.items()}
        points = []
        for rec in data.get("points", []):
            names = []
            for lab in rec["letters"]:
                if isinstance(lab, int):
                    names.append(lab)
                elif lab in labels:
                    names.append(labels[lab])
                elif lab.lower() in lower:
                    names.append(lower[lab.lower()])
                else:
                    raise SingularityError(f"letter {lab!r} does not occur in the base word")
            kind = rec.get("kind") or CASES[rec["case"]].kind
            points.append(SingularPoint(kind, rec["case"], tuple(names)))
        return cls(base, tuple(points))


def _block_positions(w: SignedWord, p: SingularPoint) -> tuple[list[tuple[int, int]], list[str]]:
    """Positions of each block of ``p`` in ``w`` plus diagnostics."""
    case = p.case
    errors = []
    occ: dict[int, list[int]] = {name: [] for name in p.letters}
    for i, x in enumerate(w.letters):
        if abs(x) in occ:
            occ[abs(x)].append(i)
    for name, idx in occ.items():
        if len(idx) != 2:
            errors.append(f"letter {name} does not occur in the base word")
    if errors:
        return [], errors
    for i, name in enumerate(p.letters):
        if w.sign_of(name) != case.signs[i]:
            want = "+" if case.signs[i] > 0 else "-"
            errors.append(f"letter {name} must have sign {want} for case {p.case_id}")
    used = {name: 0 for name in p.letters}
    blocks = []
    for a, b in case.blocks:
        na, nb = p.letters[a], p.letters[b]
        pa, pb = occ[na][used[na]], occ[nb][used[nb]]
        used[na] += 1
        used[nb] += 1
        blocks.append((pa, pb))
    for j, (pa, pb) in enumerate(blocks):
        if pb != pa + 1:
            errors.append(f"block {j + 1} of case {p.case_id} is not adjacent")
        if j and pa <= blocks[j - 1][1]:
            errors.append(f"blocks of case {p.case_id} are out of order")
    return blocks, errors


def validate_singular(c: SingularCurve) -> list[str]:
    """Diagnostics for ``c``; empty when every point matches its declared
    case and the letter sets are disjoint."""
    out = []
    seen: dict[int, int] = {}
    for i, p in enumerate(c.points):
        for name in p.letters:
            if name in seen:
                out.append(f"point {i}: letter {name} already used by point {seen[name]}")
            seen[name] = i
        _, errs = _block_positions(c.base, p)
        out.extend(f"point {i} ({p.case_id}, pattern {p.case.pattern()}): {e}" for e in errs)
    return out


def _require_valid(c: SingularCurve):
    errs = validate_singular(c)
    if errs:
        raise SingularityError("; ".join(errs))


def sign_product(sigma: Sequence[int]) -> int:
    out = 1
    for s in sigma:
        out *= s
    return out


def resolve_raw(c: SingularCurve, sigma: Sequence[int], check: bool = True) -> SignedWord:
    """Resolved word with the original letter names kept."""
    if len(sigma) != c.m:
        raise ValueError(f"resolution vector has {len(sigma)} entries for {c.m} points")
    if any(s not in (1, -1) for s in sigma):
        raise ValueError("resolution signs must be +1 or -1")
    if check:
        _require_valid(c)
    seq = list(c.base.letters)
    drop: set[int] = set()
    for p, s in zip(c.points, sigma):
        if s > 0:
            continue
        blocks, _ = _block_positions(c.base, p)
        if p.kind == "triple":
            for pa, pb in blocks:
                seq[pa], seq[pb] = seq[pb], seq[pa]
        else:
            drop.update(p.letters)
    return SignedWord._trusted(tuple(x for x in seq if abs(x) not in drop))


def resolve(c: SingularCurve, sigma: Sequence[int]) -> SignedWord:
    return canonical_form(resolve_raw(c, sigma))


def resolve_all(c: SingularCurve) -> list[tuple[tuple[int, ...], SignedWord]]:
    """All ``2**m`` resolutions; the first point is the most significant
    digit of a binary counter in which ``+1`` is 0."""
    _require_valid(c)
    return [
        (sigma, canonical_form(resolve_raw(c, sigma, check=False)))
        for sigma in product((1, -1), repeat=c.m)
    ]


def _term(args):
    n, sigma, w = args
    return sci(n, w) * sign_product(sigma)


def expanded_invariant(n: int, c: SingularCurve, workers: int = 1) -> Functional:
    """``sum over sigma of sign(sigma) * SCI_n(resolution)``."""
    jobs = [(n, sigma, w) for sigma, w in resolve_all(c)]
    if workers > 1 and len(jobs) > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=workers) as ex:
            terms = list(ex.map(_term, jobs))
    else:
        terms = [_term(j) for j in jobs]
    out = Functional.zero(n)
    for t in terms:
        out = out + t
    return out


def finite_type_check(n: int, c: SingularCurve, workers: int = 1) -> bool:
    """True when the expanded invariant of order ``n`` vanishes on ``c``."""
    return expanded_invariant(n, c, workers=workers).is_zero()


def safe_gaps(c: SingularCurve | SignedWord) -> list[int]:
    """Insertion indices that do not split a block of an existing point."""
    if isinstance(c, SignedWord):
        return list(range(len(c) + 1))
    inner = set()
    for p in c.points:
        for pa, _ in _block_positions(c.base, p)[0]:
            inner.add(pa + 1)
    return [i for i in range(len(c.base) + 1) if i not in inner]


def insert_singularity(
    target: SignedWord | SingularCurve,
    case_id: str,
    positions: Sequence[int] | None = None,
    kind: str | None = None,
) -> SingularCurve:
    """Insert a fresh singular point's blocks into a word or curve.

    ``positions`` gives, per block, the index of the current base word in
    front of which the block goes (non-decreasing).  By default all blocks
    are appended.
    """
    curve = target if isinstance(target, SingularCurve) else SingularCurve(target, ())
    case = CASES.get(case_id)
    if case is None:
        raise SingularityError(f"unknown case {case_id!r}")
    if kind is not None and _KIND_ALIASES.get(kind) != case.kind:
        raise SingularityError(f"case {case_id} is a {case.kind} point, not {kind}")
    base = curve.base.letters
    if positions is None:
        positions = [len(base)] * len(case.blocks)
    positions = list(positions)
    if len(positions) != len(case.blocks):
        raise SingularityError(f"case {case_id} needs {len(case.blocks)} positions")
    if positions != sorted(positions) or positions[0] < 0 or positions[-1] > len(base):
        raise SingularityError(f"invalid insertion positions {positions}")
    allowed = set(safe_gaps(curve))
    for pos in positions:
        if pos not in allowed:
            raise SingularityError(f"position {pos} splits an existing singular point")
    top = max((abs(x) for x in base), default=0)
    names = tuple(range(top + 1, top + 1 + case.arity))
    seq: list[int] = []
    j = 0
    for i in range(len(base) + 1):
        while j < len(positions) and positions[j] == i:
            a, b = case.blocks[j]
            seq.append(names[a] * case.signs[a])
            seq.append(names[b] * case.signs[b])
            j += 1
        if i < len(base):
            seq.append(base[i])
    point = SingularPoint(case.kind, case_id, names)
    out = SingularCurve(SignedWord(seq), curve.points + (point,))
    _require_valid(out)
    return out
