"""Exact piecewise-linear function algebra.

A PLFunction is a polyline with strictly increasing rational x-coordinates,
either extended to the whole line by two rays (left_slope on the left of the
first vertex, right_slope on the right of the last) or restricted to the
closed interval spanned by its vertices.  All coordinates are Fractions;
there is no floating point anywhere.

Construction canonicalizes: collinear interior vertices are dropped, and on
the full line a leading/trailing vertex collinear with its ray is absorbed
into the ray.  Equality of canonical forms therefore decides equality of
functions.

The two nontrivial operations are the lower convex envelope of a sampled
function (monotone-chain lower hull) and the Legendre-Fenchel transform
f*(t) = sup_x { t*x - f(x) }.  For a convex piecewise-linear f the transform
swaps roles: breakpoints of f* are the slopes of f, and slopes of f* are the
x-coordinates of f's vertices, which makes the transform exact, involutive
on convex functions, and cheap.
"""

from __future__ import annotations

from bisect import bisect_right
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import NotConvex, OutOfDomain, RaysInconsistent
from .rationals import format_rational, parse_rational

Point = tuple[Fraction, Fraction]


def _slope(a: Point, b: Point) -> Fraction:
    return (b[1] - a[1]) / (b[0] - a[0])


def _cross(o: Point, a: Point, b: Point) -> Fraction:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


class PLFunction:
    """An exact piecewise-linear function on the line or a closed interval.

    >>> f = PLFunction([(0, 0), (1, 1)], left_slope=-1, right_slope=1)
    >>> f(Fraction(-2))
    Fraction(2, 1)
    >>> f == PLFunction([(0, 0), (1, 1), (2, 2)], left_slope=-1, right_slope=1)
    True
    """

    __slots__ = ("_vertices", "_left_slope", "_right_slope")

    def __init__(
        self,
        vertices: Iterable[Sequence],
        left_slope: Fraction | int | None = None,
        right_slope: Fraction | int | None = None,
    ):
        pts = [(Fraction(x), Fraction(y)) for x, y in vertices]
        if not pts:
            raise ValueError("a piecewise-linear function needs at least one vertex")
        for a, b in zip(pts, pts[1:]):
            if b[0] <= a[0]:
                raise ValueError("vertex x-coordinates must be strictly increasing")
        if (left_slope is None) != (right_slope is None):
            raise ValueError("give both ray slopes (full line) or neither (interval)")
        on_line = left_slope is not None
        if on_line:
            ls, rs = Fraction(left_slope), Fraction(right_slope)
        elif len(pts) < 2:
            raise ValueError("an interval-domain function needs at least two vertices")
        else:
            ls = rs = None

        # Drop interior vertices collinear with their neighbours.
        kept: list[Point] = []
        for p in pts:
            while len(kept) >= 2 and _cross(kept[-2], kept[-1], p) == 0:
                kept.pop()
            kept.append(p)
        if on_line:
            # A head/tail vertex sitting on its ray is not a real breakpoint.
            while len(kept) >= 2 and _slope(kept[0], kept[1]) == ls:
                kept.pop(0)
            while len(kept) >= 2 and _slope(kept[-2], kept[-1]) == rs:
                kept.pop()
        self._vertices = tuple(kept)
        self._left_slope = ls
        self._right_slope = rs

    # -- inspection ----------------------------------------------------------

    @property
    def vertices(self) -> tuple[Point, ...]:
        return self._vertices

    @property
    def left_slope(self) -> Fraction | None:
        return self._left_slope

    @property
    def right_slope(self) -> Fraction | None:
        return self._right_slope

    @property
    def on_line(self) -> bool:
        return self._left_slope is not None

    @property
    def domain(self) -> tuple[Fraction, Fraction] | None:
        """None for the full line, else the closed interval (lo, hi)."""
        if self.on_line:
            return None
        return (self._vertices[0][0], self._vertices[-1][0])

    def segment_slopes(self) -> list[Fraction]:
        return [_slope(a, b) for a, b in zip(self._vertices, self._vertices[1:])]

    def slope_sequence(self) -> list[Fraction]:
        """All slopes left to right, rays included on the full line."""
        slopes = self.segment_slopes()
        if self.on_line:
            return [self._left_slope] + slopes + [self._right_slope]
        return slopes

    def is_convex(self) -> bool:
        seq = self.slope_sequence()
        return all(a < b for a, b in zip(seq, seq[1:]))

    def __eq__(self, other: object) -> bool:
        if isinstance(other, PLFunction):
            return (
                self._vertices == other._vertices
                and self._left_slope == other._left_slope
                and self._right_slope == other._right_slope
            )
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self._vertices, self._left_slope, self._right_slope))

    def __repr__(self) -> str:
        verts = ", ".join(f"({format_rational(x)}, {format_rational(y)})" for x, y in self._vertices)
        if self.on_line:
            return (
                f"PLFunction([{verts}], left_slope={format_rational(self._left_slope)}, "
                f"right_slope={format_rational(self._right_slope)})"
            )
        return f"PLFunction([{verts}])"

    # -- evaluation ------------------------------------------------------------

    def __call__(self, x: Fraction | int) -> Fraction:
        xf = Fraction(x)
        pts = self._vertices
        if xf < pts[0][0]:
            if not self.on_line:
                raise OutOfDomain(f"{xf} lies left of the domain start {pts[0][0]}")
            x0, y0 = pts[0]
            return y0 + self._left_slope * (xf - x0)
        if xf > pts[-1][0]:
            if not self.on_line:
                raise OutOfDomain(f"{xf} lies right of the domain end {pts[-1][0]}")
            x0, y0 = pts[-1]
            return y0 + self._right_slope * (xf - x0)
        i = bisect_right([p[0] for p in pts], xf) - 1
        if i == len(pts) - 1:
            return pts[-1][1]
        (x0, y0), (x1, y1) = pts[i], pts[i + 1]
        return y0 + (y1 - y0) * (xf - x0) / (x1 - x0)

    # -- serialization -----------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "left_slope": None if self._left_slope is None else format_rational(self._left_slope),
            "vertices": [[format_rational(x), format_rational(y)] for x, y in self._vertices],
            "right_slope": None if self._right_slope is None else format_rational(self._right_slope),
            "domain": "line"
            if self.on_line
            else [format_rational(self.domain[0]), format_rational(self.domain[1])],
        }

    @classmethod
    def from_json(cls, data: dict) -> "PLFunction":
        ls = data.get("left_slope")
        rs = data.get("right_slope")
        return cls(
            [(parse_rational(x), parse_rational(y)) for x, y in data["vertices"]],
            None if ls is None else parse_rational(ls),
            None if rs is None else parse_rational(rs),
        )


def canonical_equal(f: PLFunction, g: PLFunction) -> bool:
    """Equality of functions; construction already canonicalizes."""
    return f == g


def lower_convex_envelope(
    samples: Iterable[Sequence],
    left_slope: Fraction | int,
    right_slope: Fraction | int,
) -> PLFunction:
    """Greatest convex function below the sampled polyline and its two rays.

    The samples (sorted by x) are swept once with a monotone-chain lower
    hull; collinear candidates are dropped, so the result is canonical.
    Raises RaysInconsistent when a ray would cut below a sample, i.e. when
    the left ray is steeper than the first hull segment or the right ray
    shallower than the last.
    """
    pts = [(Fraction(x), Fraction(y)) for x, y in samples]
    if not pts:
        raise ValueError("need at least one sample")
    for a, b in zip(pts, pts[1:]):
        if b[0] <= a[0]:
            raise ValueError("sample x-coordinates must be strictly increasing")
    ls, rs = Fraction(left_slope), Fraction(right_slope)
    hull: list[Point] = []
    for p in pts:
        while len(hull) >= 2 and _cross(hull[-2], hull[-1], p) <= 0:
            hull.pop()
        hull.append(p)
    if len(hull) == 1:
        if ls > rs:
            raise RaysInconsistent(
                f"left slope {ls} exceeds right slope {rs} at a single hull point"
            )
    else:
        first = _slope(hull[0], hull[1])
        last = _slope(hull[-2], hull[-1])
        if ls > first:
            raise RaysInconsistent(
                f"left ray slope {ls} cuts below the sample at x={hull[1][0]}"
            )
        if rs < last:
            raise RaysInconsistent(
                f"right ray slope {rs} cuts below the sample at x={hull[-2][0]}"
            )
    return PLFunction(hull, ls, rs)


def legendre_fenchel(f: PLFunction) -> PLFunction:
    """The conjugate f*(t) = sup_x { t*x - f(x) } of a convex PLFunction.

    For f on the full line with slopes bounded by its rays, the supremum is
    finite exactly for t between the two ray slopes, and on each slope
    interval it is attained at the corresponding vertex of f; the conjugate
    of an interval-domain function is finite everywhere and its rays have
    the domain endpoints as slopes.  Conjugating twice returns f.
    """
    if not f.is_convex():
        raise NotConvex("Legendre-Fenchel transform requires a convex function")
    verts = f.vertices
    if f.on_line:
        slopes = f.slope_sequence()
        out = [(slopes[0], slopes[0] * verts[0][0] - verts[0][1])]
        for i in range(1, len(slopes)):
            x, y = verts[i - 1]
            out.append((slopes[i], slopes[i] * x - y))
        return PLFunction(out)
    seg = f.segment_slopes()
    out = [(s, s * verts[i][0] - verts[i][1]) for i, s in enumerate(seg)]
    return PLFunction(out, verts[0][0], verts[-1][0])
