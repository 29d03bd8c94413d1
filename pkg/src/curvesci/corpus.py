"""Corpus files and seeded random generators for words and singular curves."""

from __future__ import annotations

import json
import random
from pathlib import Path
from typing import Union

from .singular import CASES, SingularCurve, insert_singularity, safe_gaps
from .words import SignedWord, WordParseError, WordValidationError, parse_word

Record = tuple[str, Union[SignedWord, SingularCurve]]


def random_word(rng: random.Random, n: int) -> SignedWord:
    seq = [i for i in range(1, n + 1) for _ in range(2)]
    rng.shuffle(seq)
    signs = {i: rng.choice((1, -1)) for i in range(1, n + 1)}
    return SignedWord([x * signs[x] for x in seq])


def random_corpus(count: int, max_n: int, seed: int = 0, min_n: int = 0) -> list[SignedWord]:
    rng = random.Random(seed)
    return [random_word(rng, rng.randint(min_n, max_n)) for _ in range(count)]


def random_singular_curve(
    rng: random.Random,
    background: SignedWord,
    m: int,
    first_case: str | None = None,
) -> SingularCurve:
    """Insert ``m`` singular points at random non-splitting positions;
    the first point uses ``first_case`` when given."""
    curve = SingularCurve(background, ())
    for i in range(m):
        case_id = first_case if (i == 0 and first_case) else rng.choice(sorted(CASES))
        gaps = safe_gaps(curve)
        positions = sorted(rng.choice(gaps) for _ in CASES[case_id].blocks)
        curve = insert_singularity(curve, case_id, positions)
    return curve


def _record(item, index: int) -> Record:
    if isinstance(item, str):
        return (f"#{index}", parse_word(item))
    if not isinstance(item, dict):
        raise WordParseError(f"corpus entry {index} is neither a string nor an object")
    label = str(item.get("label", f"#{index}"))
    if "points" in item or "base" in item:
        return (label, SingularCurve.from_json(item))
    if "word" not in item:
        raise WordParseError(f"corpus entry {index} has no 'word' field")
    return (label, parse_word(item["word"]))


def parse_corpus(text: str) -> list[Record]:
    """Read a JSON corpus (a list, or one object) or a line corpus with one
    ``[label:] word`` per line; ``#`` starts a comment."""
    stripped = text.lstrip()
    records: list[Record]
    if stripped.startswith("[") or stripped.startswith("{"):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise WordParseError(f"invalid JSON corpus: {exc}") from exc
        if isinstance(data, dict):
            data = [data]
        records = [_record(item, i) for i, item in enumerate(data)]
    else:
        records = []
        for i, line in enumerate(text.splitlines()):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            if ":" in line:
                label, word = (s.strip() for s in line.split(":", 1))
            else:
                label, word = f"#{len(records)}", line
            records.append((label, parse_word(word)))
    labels = [lab for lab, _ in records]
    dup = sorted({lab for lab in labels if labels.count(lab) > 1})
    if dup:
        raise WordValidationError("duplicate corpus labels: " + ", ".join(dup))
    return records


def load_corpus(path: str | Path) -> list[Record]:
    return parse_corpus(Path(path).read_text(encoding="utf-8"))


def load_singular_curve(path: str | Path) -> SingularCurve:
    records = load_corpus(path)
    curves = [r for _, r in records if isinstance(r, SingularCurve)]
    if len(curves) != 1:
        raise WordValidationError(f"{path}: expected exactly one singular curve record")
    return curves[0]
