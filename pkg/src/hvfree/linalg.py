"""Sparse exact linear algebra over Scalars.

Vectors are dicts mapping sortable keys to nonzero Scalars.  Only what the
filtration and span computations need: incremental echelon forms, span
membership and kernels of linear maps given by their column images.
"""

from __future__ import annotations

from .scalars import ONE, Scalar


def _axpy(target: dict, row: dict, factor: Scalar) -> None:
    """target -= factor * row, dropping zeros."""
    for k, v in row.items():
        prev = target.get(k)
        val = -(v * factor) if prev is None else prev - v * factor
        if val:
            target[k] = val
        else:
            target.pop(k, None)


class Echelon:
    """Row echelon form built one vector at a time.

    Each stored row is normalized to pivot coefficient 1, where the pivot is
    the row's largest key; the row has no other keys that are pivots of
    earlier rows with larger keys, which makes reduction terminate.
    """

    def __init__(self):
        self.rows: dict = {}

    def __len__(self):
        return len(self.rows)

    @property
    def rank(self) -> int:
        return len(self.rows)

    def reduce(self, vec: dict, track: dict | None = None) -> dict:
        vec = {k: v for k, v in vec.items() if v}
        while True:
            pivots = [k for k in vec if k in self.rows]
            if not pivots:
                return vec
            p = max(pivots)
            row, rtrack = self.rows[p]
            factor = vec[p]
            _axpy(vec, row, factor)
            if track is not None:
                _axpy(track, rtrack, factor)

    def add(self, vec: dict, track: dict | None = None) -> bool:
        """Insert vec; return True if it enlarged the span."""
        track = {} if track is None else track
        red = self.reduce(vec, track)
        if not red:
            return False
        p = max(red)
        inv = red[p].inverse()
        row = {k: v * inv for k, v in red.items()}
        self.rows[p] = (row, {k: v * inv for k, v in track.items()})
        return True

    def contains(self, vec: dict) -> bool:
        return not self.reduce(vec)


def kernel(images: list) -> list:
    """Basis of the kernel of the map sending basis vector i to images[i].

    Returns a list of dicts {i: coefficient}.
    """
    ech = Echelon()
    out = []
    for i, img in enumerate(images):
        track = {i: ONE}
        red = ech.reduce(img, track)
        if not red:
            out.append({k: v for k, v in track.items() if v})
        else:
            p = max(red)
            inv = red[p].inverse()
            ech.rows[p] = ({k: v * inv for k, v in red.items()}, {k: v * inv for k, v in track.items()})
    return out


def rank(vectors) -> int:
    ech = Echelon()
    for v in vectors:
        ech.add(v)
    return ech.rank

