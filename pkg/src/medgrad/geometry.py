"""Planar domains, boundary parametrization, and circle sampling.

Two domain shapes are supported: disks and strictly convex polygons
(counterclockwise vertices, no collinear triples).  Both expose a signed
distance to the boundary (positive inside), an arclength-proportional
boundary parametrization on [0, 2*pi), and a tight bounding box.  All
operations are pure functions of immutable inputs.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

_CONVEXITY_EPS = 1e-12


class GeometryError(ValueError):
    pass


def _check_finite(arr, what):
    if not np.all(np.isfinite(arr)):
        raise GeometryError(f"{what} must have finite coordinates")


@dataclass(frozen=True)
class Disk:
    center: tuple[float, float] = (0.0, 0.0)
    radius: float = 1.0

    def __post_init__(self):
        _check_finite(np.asarray(self.center, float), "disk center")
        if not (np.isfinite(self.radius) and self.radius > 0):
            raise GeometryError("disk radius must be strictly positive")

    @property
    def boundary_length(self) -> float:
        return 2.0 * np.pi * self.radius

    def bbox(self):
        cx, cy = self.center
        r = self.radius
        return (cx - r, cx + r, cy - r, cy + r)

    def signed_distance(self, pts):
        """Distance to the boundary: positive inside, negative outside."""
        pts = np.asarray(pts, float)
        _check_finite(pts, "query point")
        cx, cy = self.center
        return self.radius - np.hypot(pts[..., 0] - cx, pts[..., 1] - cy)

    def boundary_point(self, t):
        t = np.asarray(t, float)
        cx, cy = self.center
        return np.stack([cx + self.radius * np.cos(t),
                         cy + self.radius * np.sin(t)], axis=-1)

    def nearest_boundary_param(self, pts):
        pts = np.asarray(pts, float)
        cx, cy = self.center
        return np.mod(np.arctan2(pts[..., 1] - cy, pts[..., 0] - cx), 2.0 * np.pi)

    def serialize(self) -> str:
        cx, cy = self.center
        return f"disk {cx!r} {cy!r} {self.radius!r}"


@dataclass(frozen=True)
class ConvexPolygon:
    vertices: tuple = ()
    _edges: np.ndarray = field(init=False, repr=False, compare=False, default=None)

    def __init__(self, vertices):
        verts = np.asarray(vertices, float)
        _check_finite(verts, "polygon vertices")
        if verts.ndim != 2 or verts.shape[1] != 2 or verts.shape[0] < 3:
            raise GeometryError("polygon needs at least 3 (x, y) vertices")
        a = verts
        b = np.roll(verts, -1, axis=0)
        c = np.roll(verts, -2, axis=0)
        cross = (b[:, 0] - a[:, 0]) * (c[:, 1] - b[:, 1]) - (b[:, 1] - a[:, 1]) * (c[:, 0] - b[:, 0])
        scale = np.max(np.abs(verts)) + 1.0
        if np.any(np.abs(cross) <= _CONVEXITY_EPS * scale * scale):
            raise GeometryError("not strictly convex: collinear vertices")
        if np.any(cross < 0):
            if np.all(cross < 0):
                raise GeometryError("polygon vertices must be counterclockwise")
            raise GeometryError("not strictly convex")
        object.__setattr__(self, "vertices", tuple(map(tuple, verts)))
        lens = np.hypot(*(b - a).T)
        cum = np.concatenate([[0.0], np.cumsum(lens)])
        object.__setattr__(self, "_edges", (a, b - a, lens, cum))

    @property
    def boundary_length(self) -> float:
        return float(self._edges[3][-1])

    def bbox(self):
        v = np.asarray(self.vertices)
        return (v[:, 0].min(), v[:, 0].max(), v[:, 1].min(), v[:, 1].max())

    def signed_distance(self, pts):
        """Min distance over edges, signed by containment (inside positive).

        For interior points of a convex polygon the minimum over edge
        segments equals the minimum over supporting lines, so this is the
        exact boundary distance on both sides.
        """
        pts = np.asarray(pts, float)
        _check_finite(pts, "query point")
        a, d, lens, _ = self._edges
        p = pts[..., None, :]                    # (..., nedge, 2)
        rel = p - a
        tproj = np.clip((rel * d).sum(-1) / (lens ** 2), 0.0, 1.0)
        foot = a + tproj[..., None] * d
        dist = np.hypot(*(p - foot).transpose(-1, *range(p.ndim - 1)))
        mind = dist.min(axis=-1)
        cross = d[:, 0] * rel[..., 1] - d[:, 1] * rel[..., 0]
        inside = np.all(cross >= 0, axis=-1)
        return np.where(inside, mind, -mind)

    def boundary_point(self, t):
        t = np.asarray(t, float)
        a, d, lens, cum = self._edges
        L = cum[-1]
        s = np.mod(t, 2.0 * np.pi) * (L / (2.0 * np.pi))
        idx = np.clip(np.searchsorted(cum, s, side="right") - 1, 0, len(lens) - 1)
        frac = (s - cum[idx]) / lens[idx]
        return a[idx] + frac[..., None] * d[idx]

    def nearest_boundary_param(self, pts):
        pts = np.asarray(pts, float)
        a, d, lens, cum = self._edges
        p = pts[..., None, :]
        rel = p - a
        tproj = np.clip((rel * d).sum(-1) / (lens ** 2), 0.0, 1.0)
        foot = a + tproj[..., None] * d
        dist = ((p - foot) ** 2).sum(-1)
        idx = np.argmin(dist, axis=-1)
        tsel = np.take_along_axis(tproj, idx[..., None], axis=-1)[..., 0]
        s = cum[idx] + tsel * lens[idx]
        return np.mod(s * (2.0 * np.pi / cum[-1]), 2.0 * np.pi)

    def serialize(self) -> str:
        flat = " ".join(f"{c!r}" for xy in self.vertices for c in xy)
        return f"poly {flat}"


Domain = Disk | ConvexPolygon


def parse_domain(text: str) -> Domain:
    """Inverse of Domain.serialize: 'disk cx cy r' or 'poly x1 y1 x2 y2 ...'."""
    parts = text.split()
    if not parts:
        raise GeometryError("empty domain spec")
    if parts[0] == "disk":
        if len(parts) != 4:
            raise GeometryError("disk spec needs 'disk cx cy r'")
        cx, cy, r = map(float, parts[1:])
        return Disk((cx, cy), r)
    if parts[0] == "poly":
        coords = list(map(float, parts[1:]))
        if len(coords) < 6 or len(coords) % 2:
            raise GeometryError("poly spec needs an even list of >= 6 coordinates")
        verts = np.array(coords).reshape(-1, 2)
        return ConvexPolygon(verts)
    raise GeometryError(f"unknown domain kind {parts[0]!r}")


@dataclass(frozen=True)
class CircleSpec:
    """Equally spaced angular samples of a circle (uniform in arc length)."""

    center: tuple[float, float]
    radius: float
    sample_count: int
    phase: float = 0.0

    def __post_init__(self):
        _check_finite(np.asarray(self.center, float), "circle center")
        if not (np.isfinite(self.radius) and self.radius > 0):
            raise GeometryError("circle radius must be strictly positive")
        if self.sample_count < 4:
            raise GeometryError("sample_count must be at least 4")


def distance_to_boundary(domain: Domain, p) -> float:
    """Signed distance from p to the domain boundary (positive inside)."""
    return float(domain.signed_distance(np.asarray(p, float)))


def contains_ball(domain: Domain, c, r: float) -> bool:
    """True iff the closed ball B(c, r) is compactly contained in the domain."""
    if not (np.isfinite(r) and r > 0):
        raise GeometryError("ball radius must be strictly positive")
    return distance_to_boundary(domain, c) > r


def sample_circle(spec: CircleSpec) -> np.ndarray:
    """Points at angles 2*pi*k/n + phase, k = 0..n-1, as an (n, 2) array.

    For even n the second half is produced by reflecting the first half
    through the center, so antipodal pairs are exact to the last bit.
    """
    n = spec.sample_count
    cx, cy = spec.center
    c = np.array([cx, cy], float)
    if n % 2 == 0:
        ang = 2.0 * np.pi * np.arange(n // 2) / n + spec.phase
        half = c + spec.radius * np.stack([np.cos(ang), np.sin(ang)], axis=-1)
        return np.concatenate([half, 2.0 * c - half], axis=0)
    ang = 2.0 * np.pi * np.arange(n) / n + spec.phase
    return c + spec.radius * np.stack([np.cos(ang), np.sin(ang)], axis=-1)


def boundary_point(domain: Domain, t) -> np.ndarray:
    """Boundary point at parameter t (2*pi-periodic, counterclockwise)."""
    return domain.boundary_point(t)
