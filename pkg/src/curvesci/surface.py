"""Surfaces carried by signed words.

A word with ``n`` letters is read as a 4-valent ribbon graph: one vertex per
letter and one edge per gap between consecutive positions around the based
circle.  Edge ``i`` runs from position ``i`` to position ``i + 1`` (mod 2n);
the base point sits on the last edge.  Faces are traced as cycles of
rotation-after-edge-flip on darts, and the genus follows from Euler's formula.

Each face is reported as a list of edge-sides ``(edge, side)`` with side
``"R"``/``"L"`` relative to the direction of the curve.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .cyclic import nu_shift_raw
from .sci import sci
from .words import SignedWord, WordValidationError, parse_word

__all__ = [
    "SurfaceData",
    "PlaneCurveData",
    "NonPlanarError",
    "surface_data",
    "genus",
    "is_planar",
    "face_of",
    "rotation_number",
    "plane_curve",
    "arnold_check",
    "ARNOLD_COMBINATION",
]


class NonPlanarError(WordValidationError):
    pass


@dataclass(frozen=True)
class SurfaceData:
    vertices: int
    edges: int
    faces: int
    euler: int
    genus: int
    face_list: tuple[tuple[tuple[int, str], ...], ...]

    def to_json(self) -> dict:
        return {
            "vertices": self.vertices,
            "edges": self.edges,
            "faces": self.faces,
            "euler": self.euler,
            "genus": self.genus,
            "face_edges": [[f"{e}{s}" for e, s in face] for face in self.face_list],
        }


# Darts are encoded as 2*edge (tail end, leaving along the curve) and
# 2*edge + 1 (head end, arriving).  Tracing faces by sigma(alpha(d)) keeps the
# face on the right of the dart's direction of travel.


def _rotation(w: SignedWord) -> dict[int, int]:
    """Counterclockwise successor of every dart around its vertex."""
    L = len(w.letters)
    first: dict[int, int] = {}
    succ: dict[int, int] = {}
    for p, x in enumerate(w.letters):
        a = abs(x)
        if a not in first:
            first[a] = p
            continue
        p1, p2 = first[a], p
        in1, out1 = 2 * ((p1 - 1) % L) + 1, 2 * p1
        in2, out2 = 2 * ((p2 - 1) % L) + 1, 2 * p2
        if x < 0:
            cyc = (in1, in2, out1, out2)
        else:
            cyc = (in1, out2, out1, in2)
        for i in range(4):
            succ[cyc[i]] = cyc[(i + 1) % 4]
    return succ


def surface_data(w: SignedWord) -> SurfaceData:
    L = len(w.letters)
    n = L // 2
    if n == 0:
        # an embedded circle on the sphere
        return SurfaceData(0, 0, 2, 2, 0, (((0, "R"),), ((0, "L"),)))
    succ = _rotation(w)
    seen: set[int] = set()
    faces = []
    for d0 in range(2 * L):
        if d0 in seen:
            continue
        face = []
        d = d0
        while d not in seen:
            seen.add(d)
            face.append((d // 2, "R" if d % 2 == 0 else "L"))
            d = succ[d ^ 1]
        faces.append(tuple(face))
    F = len(faces)
    chi = n - L + F
    return SurfaceData(n, L, F, chi, (2 - chi) // 2, tuple(faces))


def genus(w: SignedWord) -> int:
    return surface_data(w).genus


def is_planar(w: SignedWord) -> bool:
    return genus(w) == 0


def face_of(w: SignedWord, edge: int, side: str) -> int:
    """Index of the face bordering ``edge`` on ``side``."""
    for i, face in enumerate(surface_data(w).face_list):
        if (edge, side) in face:
            return i
    raise KeyError((edge, side))


def _whitney(w: SignedWord, base_side: str) -> int:
    # -1 per letter whose first/second passage frame is positive (barred),
    # +1 otherwise; base point on the outer boundary
    crossings = sum(1 if x > 0 else -1 for x in w.letters) // 2
    return crossings + (1 if base_side == "R" else -1)


def rotation_number(w: SignedWord, outer: int, via_edge: tuple[int, str] | None = None) -> int:
    """Rotation number of the plane curve obtained by sending face ``outer``
    to infinity.

    The word is rebased so that the base point lies on an edge bordering the
    outer face; ``via_edge`` picks that edge-side explicitly.
    """
    data = surface_data(w)
    if data.genus != 0:
        raise NonPlanarError("rotation number needs a planar word")
    if not 0 <= outer < data.faces:
        raise KeyError(f"no face {outer}; the word has {data.faces} faces")
    face = data.face_list[outer]
    if via_edge is None:
        via_edge = face[0]
    elif via_edge not in face:
        raise KeyError(f"edge-side {via_edge} does not border face {outer}")
    edge, side = via_edge
    L = len(w.letters)
    if L == 0:
        return _whitney(w, side)
    # after j shifts the base point sits on old edge j - 1
    shifts = (edge + 1) % L
    v = w
    for _ in range(shifts):
        v = nu_shift_raw(v)
    return _whitney(v, side)


@dataclass(frozen=True)
class PlaneCurveData:
    word: SignedWord
    outer_face: int | None
    rotation: int


def plane_curve(w: SignedWord, outer: int | None = None, rotation: int | None = None) -> PlaneCurveData:
    """A planar word together with a rotation number, either supplied or
    computed from the chosen outer face."""
    if not is_planar(w):
        raise NonPlanarError("word is not planar")
    if rotation is None:
        if outer is None:
            raise ValueError("need an outer face or a rotation number")
        rotation = rotation_number(w, outer)
    return PlaneCurveData(w, outer, int(rotation))


# X1X1X2X2 - X1X1X̄2X̄2 + X̄1X̄1X̄2X̄2
ARNOLD_COMBINATION = ((parse_word("aabb"), 1), (parse_word("aaBB"), -1), (parse_word("AABB"), 1))


def arnold_check(p: PlaneCurveData, jplus, jminus, st) -> tuple[Fraction, Fraction]:
    """Residuals of the two relations tying Arnold's invariants to SCI_1,
    SCI_2 and the rotation number; both vanish when the relations hold."""
    if not is_planar(p.word):
        raise NonPlanarError("Arnold relations apply to plane curves only")
    jplus, jminus, st = Fraction(jplus), Fraction(jminus), Fraction(st)
    sci1 = sci(1, p.word)
    sci2 = sci(2, p.word)
    r9 = (jplus - jminus) - sci1(parse_word("aa"))
    combo = sum((c * sci2(u) for u, c in ARNOLD_COMBINATION), Fraction(0))
    r10 = (jminus + 6 * st) - (-2 * combo + p.rotation**2 - 1)
    return r9, r10
