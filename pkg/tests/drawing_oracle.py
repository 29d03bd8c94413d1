"""Numerical oracle: words, outer sides and turning numbers of polygonal
plane curves, computed from coordinates only."""

from __future__ import annotations

import math

import numpy as np


def sample(fn, count=720):
    t = np.linspace(0.0, 2 * np.pi, count, endpoint=False) + 0.0137
    z = fn(t)
    return np.column_stack([z.real, z.imag])


def _cross(a, b):
    return a[0] * b[1] - a[1] * b[0]


def turning_number(pts) -> float:
    d = np.roll(pts, -1, axis=0) - pts
    ang = np.arctan2(d[:, 1], d[:, 0])
    delta = np.diff(np.concatenate([ang, ang[:1]]))
    delta = (delta + np.pi) % (2 * np.pi) - np.pi
    return float(delta.sum() / (2 * np.pi))


def word_of_polygon(pts):
    """Signed word read from the max-x vertex, the side of the first edge
    facing infinity, and the turning number."""
    start = int(np.argmax(pts[:, 0]))
    pts = np.roll(pts, -start, axis=0)
    m = len(pts)
    seg = [(pts[i], pts[(i + 1) % m]) for i in range(m)]
    events = []  # (curve parameter, crossing id)
    tangents = {}
    cid = 0
    for i in range(m):
        p, p2 = seg[i]
        r = p2 - p
        for j in range(i + 2, m):
            if i == 0 and j == m - 1:
                continue
            q, q2 = seg[j]
            s = q2 - q
            den = _cross(r, s)
            if abs(den) < 1e-15:
                continue
            t = _cross(q - p, s) / den
            u = _cross(q - p, r) / den
            if 0 <= t < 1 and 0 <= u < 1:
                events.append((i + t, cid))
                events.append((j + u, cid))
                tangents[cid] = (r, s)
                cid += 1
    events.sort()
    letters = []
    names = {}
    for _, c in events:
        if c not in names:
            names[c] = len(names) + 1
        t1, t2 = tangents[c]
        sign = -1 if _cross(t1, t2) > 0 else 1
        letters.append(names[c] * sign)
    # base point at the max-x vertex: infinity lies towards +x
    d = pts[1] - pts[-1]
    side = "R" if d[1] > 0 else "L"
    return tuple(letters), side, turning_number(pts)


CURVES = {
    "circle": lambda t: np.exp(1j * t),
    "circle_cw": lambda t: np.exp(-1j * t),
    "figure_eight": lambda t: np.sin(t) + 0.5j * np.sin(2 * t),
    "figure_eight_rev": lambda t: np.sin(-t) + 0.5j * np.sin(-2 * t),
    "limacon": lambda t: (0.5 + np.cos(t)) * np.exp(1j * t),
    "limacon_rev": lambda t: (0.5 + np.cos(-t)) * np.exp(-1j * t),
    "two_curls": lambda t: np.exp(1j * t) + 0.5 * np.exp(3j * t),
    "trefoil_like": lambda t: np.exp(1j * t) + 0.6 * np.exp(-2j * t),
    "epicycle": lambda t: np.exp(1j * t) + 0.45 * np.exp(4j * t),
    "curl_out": lambda t: np.exp(2j * t) + 1.3 * np.exp(1j * t),
}
