"""Deposition path construction, part slicing, and motion segmentation.

Paths live in a 2D workpiece frame: plan-view positions (x, y) in mm, with
every sample point carrying its arc-length coordinate s.  A layer path of a
tapered part is a sub-span of the base (layer 1) path; ``s_origin`` locates
it inside the build coordinate used by the deposition plant, so heights at
build coordinate u map to layer-local coordinate u - s_origin.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import ConfigError, DegenerateGeometryError, DomainError

# plan-view sampling pitch for path polylines, mm (cosmetic; s is analytic)
_POINT_PITCH = 0.5


@dataclass(frozen=True)
class WeldPath:
    """Arc-length parameterized deposition path.

    ``arc_length`` is the exact analytic length; ``points``/``s`` are samples
    of the underlying line or arc, so chord sums may fall slightly short.
    """

    points: np.ndarray          # (N, 2) plan-view positions, mm
    s: np.ndarray               # (N,) arc-length coordinate per point, mm
    arc_length: float           # exact length, mm
    closed: bool = False
    s_origin: float = 0.0       # offset of local s=0 in the build coordinate

    def __post_init__(self):
        if self.arc_length <= 0:
            raise DomainError("path arc length must be positive")
        if len(self.points) < 2 or len(self.points) != len(self.s):
            raise DomainError("path needs matching points and s samples")
        if np.any(np.diff(self.s) <= 0):
            raise DomainError("arc-length coordinates must strictly increase")
        if self.closed:
            gap = float(np.linalg.norm(self.points[0] - self.points[-1]))
            if gap > 1e-9:
                raise DomainError(f"closed path endpoints differ by {gap} mm")


@dataclass(frozen=True)
class PathSegment:
    """One uniform linear motion segment of a layer path (local coordinates)."""

    index: int
    s_start: float
    s_end: float
    length: float


@dataclass(frozen=True)
class PartSpec:
    """Test geometry description.

    kind "wall": straight path of ``width`` mm, bead thickness ``thickness``.
    kind "blade": curved open path; layer path length shrinks by
    ``taper_rate`` mm per mm of height, constant plan curvature ``curvature``.
    kind "cylinder": closed circular path of ``radius`` mm.
    """

    kind: str
    target_height: float            # mm
    width: float = 0.0              # wall/blade base path length, mm
    thickness: float = 0.0          # wall thickness, mm
    taper_rate: float = 0.0         # blade: mm path length lost per mm height
    curvature: float = 0.0          # blade: plan heading rate, 1/mm
    radius: float = 0.0             # cylinder radius, mm

    def __post_init__(self):
        if self.kind not in ("wall", "blade", "cylinder"):
            raise ConfigError(f"unknown part kind {self.kind!r}")
        if self.target_height <= 0:
            raise ConfigError("target_height must be positive")
        if self.kind in ("wall", "blade") and self.width <= 0:
            raise ConfigError(f"{self.kind} needs a positive width")
        if self.kind == "cylinder" and self.radius <= 0:
            raise ConfigError("cylinder needs a positive radius")
        if self.taper_rate < 0:
            raise ConfigError("taper_rate must be >= 0")
        if self.kind == "blade":
            top = self.width - self.taper_rate * self.target_height
            if top <= 0:
                raise DegenerateGeometryError(
                    f"blade path length {top:.3f} mm at target height")

    @property
    def base_length(self) -> float:
        """Arc length of the layer 1 path, mm."""
        if self.kind == "cylinder":
            return 2.0 * math.pi * self.radius
        return self.width

    @property
    def is_closed(self) -> bool:
        return self.kind == "cylinder"


@dataclass(frozen=True)
class LayerPlan:
    """Planned deposition of one layer (index is 1-based)."""

    index: int
    dh_desired: float               # desired deposition height, mm
    path: WeldPath
    segments: list[PathSegment] = field(default_factory=list)


def _arc_positions(u: np.ndarray, curvature: float) -> np.ndarray:
    """Plan position of a constant-curvature path at arc length u from origin."""
    if abs(curvature) < 1e-12:
        return np.column_stack([u, np.zeros_like(u)])
    k = curvature
    return np.column_stack([np.sin(k * u) / k, (1.0 - np.cos(k * u)) / k])


def build_path(part: PartSpec, layer_height_so_far: float = 0.0) -> WeldPath:
    """Construct the deposition path of a part at a given built height.

    Wall and cylinder paths are height independent.  A blade path keeps the
    base path's shape but shrinks to the centered sub-span whose length is
    width - taper_rate * height, which is what makes top layers short.
    """
    if part.kind == "wall":
        n = max(2, round(part.width / _POINT_PITCH) + 1)
        s = np.linspace(0.0, part.width, n)
        pts = np.column_stack([s, np.zeros(n)])
        return WeldPath(points=pts, s=s, arc_length=part.width, closed=False)

    if part.kind == "cylinder":
        length = 2.0 * math.pi * part.radius
        n = max(16, round(length / _POINT_PITCH))
        theta = np.linspace(0.0, 2.0 * math.pi, n + 1)
        pts = np.column_stack([part.radius * np.cos(theta),
                               part.radius * np.sin(theta)])
        pts[-1] = pts[0]  # exact closure
        s = theta * part.radius
        return WeldPath(points=pts, s=s, arc_length=length, closed=True)

    # blade
    length = part.width - part.taper_rate * layer_height_so_far
    if length <= 0:
        raise DegenerateGeometryError(
            f"blade path length {length:.3f} mm at height "
            f"{layer_height_so_far:.3f} mm")
    s_origin = (part.width - length) / 2.0
    n = max(2, round(length / _POINT_PITCH) + 1)
    s_local = np.linspace(0.0, length, n)
    pts = _arc_positions(s_origin + s_local, part.curvature)
    return WeldPath(points=pts, s=s_local, arc_length=length,
                    closed=False, s_origin=s_origin)


def segment_path(path: WeldPath, n_segments: int) -> list[PathSegment]:
    """Split a path into n uniform segments tiling [0, arc_length]."""
    if n_segments < 1:
        raise DomainError("n_segments must be >= 1")
    length = path.arc_length
    seg_len = length / n_segments
    segments = []
    for k in range(n_segments):
        s0 = k * length / n_segments
        s1 = length if k == n_segments - 1 else (k + 1) * length / n_segments
        segments.append(PathSegment(index=k, s_start=s0, s_end=s1,
                                    length=seg_len))
    return segments


def slice_part(part: PartSpec, dh_desired: float,
               n_segments: int = 40) -> list[LayerPlan]:
    """Slice a part into layers of uniform desired height.

    Returns ceil(target_height / dh_desired) layers; the last layer may
    overshoot the target, never undershoot.
    """
    if dh_desired <= 0:
        raise DomainError("desired layer height must be positive")
    n_layers = math.ceil(part.target_height / dh_desired - 1e-12)
    plans = []
    for i in range(1, n_layers + 1):
        path = build_path(part, layer_height_so_far=(i - 1) * dh_desired)
        plans.append(LayerPlan(index=i, dh_desired=dh_desired, path=path,
                               segments=segment_path(path, n_segments)))
    return plans


def segment_of(path_length: float, n_segments: int, s_local: np.ndarray) -> np.ndarray:
    """Segment index containing each local coordinate (vectorized)."""
    seg = np.floor(np.asarray(s_local) / (path_length / n_segments)).astype(int)
    return np.clip(seg, 0, n_segments - 1)
