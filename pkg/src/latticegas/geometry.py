"""Torus geometry: rectangles, distances, fattened regions.

All distances are l-infinity.  Rectangles live on an L x L torus (L=None
means the plain infinite lattice); a rectangle is stored by its anchor
corner (x0, y0) and an extent (w, h) and may wrap around the torus, but
never exceeds it.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import AmbiguousWrap, DomainError


def torus_delta(a: int, b: int, L: int | None) -> int:
    """Signed shortest displacement from a to b (one axis)."""
    if L is None:
        return b - a
    d = (b - a) % L
    if d > L // 2:
        d -= L
    return d


def axis_dist(a: int, b: int, L: int | None) -> int:
    return abs(torus_delta(a, b, L))


def site_dist(p, q, L: int | None) -> int:
    """l-infinity distance between two sites."""
    return max(axis_dist(p[0], q[0], L), axis_dist(p[1], q[1], L))


@dataclass(frozen=True)
class Rect:
    """Axis-aligned rectangle of sites, possibly wrapping on the torus."""

    x0: int
    y0: int
    w: int
    h: int

    def __post_init__(self):
        if self.w < 1 or self.h < 1:
            raise DomainError("rectangle extents must be >= 1")

    def sites(self, L: int | None):
        for i in range(self.w):
            for j in range(self.h):
                x, y = self.x0 + i, self.y0 + j
                if L is not None:
                    x, y = x % L, y % L
                yield (x, y)

    def contains(self, site, L: int | None) -> bool:
        x, y = site
        if L is None:
            return self.x0 <= x < self.x0 + self.w and self.y0 <= y < self.y0 + self.h
        return ((x - self.x0) % L) < self.w and ((y - self.y0) % L) < self.h

    def center(self) -> tuple[float, float]:
        return (self.x0 + (self.w - 1) / 2.0, self.y0 + (self.h - 1) / 2.0)

    def grow(self, r: int, L: int | None) -> "Rect":
        """Fatten by r sites on every side, capped at the torus."""
        w, h = self.w + 2 * r, self.h + 2 * r
        if L is not None:
            w, h = min(w, L), min(h, L)
        return Rect(self.x0 - r, self.y0 - r, w, h).normalized(L)

    def normalized(self, L: int | None) -> "Rect":
        if L is None:
            return self
        return Rect(self.x0 % L, self.y0 % L, self.w, self.h)


def _axis_gap(a0: int, aw: int, b0: int, bw: int, L: int | None) -> int:
    """Distance between two intervals [a0, a0+aw) and [b0, b0+bw) (one axis)."""
    if L is None:
        if a0 + aw <= b0:
            return b0 - (a0 + aw - 1)
        if b0 + bw <= a0:
            return a0 - (b0 + bw - 1)
        return 0
    if aw >= L or bw >= L:
        return 0
    s = (b0 - a0) % L
    if s < aw or L - s < bw:
        return 0
    return min(s - aw + 1, L - s - bw + 1)


def rect_dist(a: Rect, b: Rect, L: int | None) -> int:
    """l-infinity set distance between two rectangles."""
    return max(_axis_gap(a.x0, a.w, b.x0, b.w, L),
               _axis_gap(a.y0, a.h, b.y0, b.h, L))


def point_rect_dist(p, r: Rect, L: int | None) -> int:
    return rect_dist(Rect(p[0], p[1], 1, 1), r, L)


def border_depth(p, r: Rect, L: int | None) -> int:
    """Distance from a site inside r to its internal border (0 = on border)."""
    x, y = p
    if L is not None:
        dx = (x - r.x0) % L
        dy = (y - r.y0) % L
    else:
        dx, dy = x - r.x0, y - r.y0
    return min(dx, r.w - 1 - dx, dy, r.h - 1 - dy)


def circumscribed_rectangle(sites, L: int | None) -> Rect:
    """Minimal rectangle containing the sites.

    On the torus the span is unwrapped around the first site; sets spreading
    half the torus or more on an axis are rejected as ambiguous.
    """
    sites = list(sites)
    if not sites:
        raise DomainError("empty site set has no circumscribed rectangle")
    x0, y0 = sites[0]
    xs = [x0 + torus_delta(x0, s[0], L) for s in sites]
    ys = [y0 + torus_delta(y0, s[1], L) for s in sites]
    w = max(xs) - min(xs) + 1
    h = max(ys) - min(ys) + 1
    if L is not None and (w > L // 2 or h > L // 2):
        raise AmbiguousWrap(f"site set spans {w}x{h} on a torus of side {L}")
    return Rect(min(xs), min(ys), w, h).normalized(L)


def rect_union_rc(rects, L: int | None) -> Rect:
    """Circumscribed rectangle of a union of rectangles."""
    corners = []
    anchor = None
    for r in rects:
        rn = r.normalized(L)
        if anchor is None:
            anchor = (rn.x0, rn.y0)
        ax = anchor[0] + torus_delta(anchor[0], rn.x0, L)
        ay = anchor[1] + torus_delta(anchor[1], rn.y0, L)
        corners.append((ax, ay, rn.w, rn.h))
    xs0 = min(c[0] for c in corners)
    ys0 = min(c[1] for c in corners)
    xs1 = max(c[0] + c[2] for c in corners)
    ys1 = max(c[1] + c[3] for c in corners)
    w, h = xs1 - xs0, ys1 - ys0
    if L is not None and (w > L // 2 or h > L // 2):
        raise AmbiguousWrap(f"rectangle union spans {w}x{h} on a torus of side {L}")
    return Rect(xs0, ys0, w, h).normalized(L)


def centered_volume_box(r: Rect, side: int, L: int | None) -> Rect:
    """Square box of the given side, concentric with r (capped at the torus).

    Used for the droplet annulus, which the model defines by volume rather
    than by fattening radius.
    """
    side = max(side, max(r.w, r.h))
    if L is not None and side >= L:
        return Rect(0, 0, L, L)
    cx, cy = r.center()
    x0 = int(round(cx - (side - 1) / 2.0))
    y0 = int(round(cy - (side - 1) / 2.0))
    return Rect(x0, y0, side, side).normalized(L)
