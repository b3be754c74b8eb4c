"""Fixed-chart kinematics for Newtonian space-time.

Everything lives in one global chart: a reference origin event, an
orthonormal spatial basis, the rest frame and the time form that reads
off elapsed time.  Four-component values are small frozen dataclasses
and every operation is a pure function, so values can be shared freely.

The metric is Euclidean with identity components in this chart, which
makes ``metric``/``metric_inv`` look like renames.  They are kept as
explicit operations because they change variance: momenta are covectors
and velocities are vectors, and the type distinction is what keeps the
frame bookkeeping honest.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

__all__ = [
    "FourVector",
    "FourCovector",
    "SpatialVector",
    "SpatialCovector",
    "Frame",
    "Event",
    "TIME_FORM",
    "REST_FRAME",
    "ORIGIN",
    "pair",
    "pair_spatial",
    "metric",
    "metric_inv",
    "cometric",
    "embed",
    "project",
    "restrict",
    "dual_lift",
]

# Frames must read exactly one unit of time per unit of time; the
# constructor tolerance absorbs rounding from frame arithmetic only.
_FRAME_TOL = 1e-12


@dataclass(frozen=True, slots=True)
class FourVector:
    """Displacement in space-time; ``dt`` is the elapsed-time component."""

    dt: float
    dx: float
    dy: float
    dz: float

    def __add__(self, other: "FourVector") -> "FourVector":
        return FourVector(self.dt + other.dt, self.dx + other.dx,
                          self.dy + other.dy, self.dz + other.dz)

    def __sub__(self, other: "FourVector") -> "FourVector":
        return FourVector(self.dt - other.dt, self.dx - other.dx,
                          self.dy - other.dy, self.dz - other.dz)

    def __neg__(self) -> "FourVector":
        return FourVector(-self.dt, -self.dx, -self.dy, -self.dz)

    def __mul__(self, a: float) -> "FourVector":
        return FourVector(a * self.dt, a * self.dx, a * self.dy, a * self.dz)

    __rmul__ = __mul__

    def components(self) -> tuple[float, float, float, float]:
        return (self.dt, self.dx, self.dy, self.dz)

    def is_finite(self) -> bool:
        return all(map(math.isfinite, self.components()))


@dataclass(frozen=True, slots=True)
class FourCovector:
    """Linear form on displacements; ``pt`` multiplies the time component."""

    pt: float
    px: float
    py: float
    pz: float

    def __add__(self, other: "FourCovector") -> "FourCovector":
        return FourCovector(self.pt + other.pt, self.px + other.px,
                            self.py + other.py, self.pz + other.pz)

    def __sub__(self, other: "FourCovector") -> "FourCovector":
        return FourCovector(self.pt - other.pt, self.px - other.px,
                            self.py - other.py, self.pz - other.pz)

    def __neg__(self) -> "FourCovector":
        return FourCovector(-self.pt, -self.px, -self.py, -self.pz)

    def __mul__(self, a: float) -> "FourCovector":
        return FourCovector(a * self.pt, a * self.px, a * self.py, a * self.pz)

    __rmul__ = __mul__

    def components(self) -> tuple[float, float, float, float]:
        return (self.pt, self.px, self.py, self.pz)

    def is_finite(self) -> bool:
        return all(map(math.isfinite, self.components()))


@dataclass(frozen=True, slots=True)
class SpatialVector:
    """Vector with no time component, in the spatial basis of the chart."""

    x: float
    y: float
    z: float

    def __add__(self, other: "SpatialVector") -> "SpatialVector":
        return SpatialVector(self.x + other.x, self.y + other.y, self.z + other.z)

    def __sub__(self, other: "SpatialVector") -> "SpatialVector":
        return SpatialVector(self.x - other.x, self.y - other.y, self.z - other.z)

    def __neg__(self) -> "SpatialVector":
        return SpatialVector(-self.x, -self.y, -self.z)

    def __mul__(self, a: float) -> "SpatialVector":
        return SpatialVector(a * self.x, a * self.y, a * self.z)

    __rmul__ = __mul__

    def components(self) -> tuple[float, float, float]:
        return (self.x, self.y, self.z)


@dataclass(frozen=True, slots=True)
class SpatialCovector:
    """Linear form on spatial vectors."""

    x: float
    y: float
    z: float

    def __add__(self, other: "SpatialCovector") -> "SpatialCovector":
        return SpatialCovector(self.x + other.x, self.y + other.y, self.z + other.z)

    def __sub__(self, other: "SpatialCovector") -> "SpatialCovector":
        return SpatialCovector(self.x - other.x, self.y - other.y, self.z - other.z)

    def __neg__(self) -> "SpatialCovector":
        return SpatialCovector(-self.x, -self.y, -self.z)

    def __mul__(self, a: float) -> "SpatialCovector":
        return SpatialCovector(a * self.x, a * self.y, a * self.z)

    __rmul__ = __mul__

    def components(self) -> tuple[float, float, float]:
        return (self.x, self.y, self.z)

    def is_finite(self) -> bool:
        return all(map(math.isfinite, self.components()))


@dataclass(frozen=True, slots=True)
class Frame(FourVector):
    """Four-velocity of an inertial observer: unit time component.

    Frames form an affine space over spatial vectors, not a vector
    space; sums and scalings of frames therefore come back as plain
    ``FourVector`` values.
    """

    def __post_init__(self):
        if abs(self.dt - 1.0) > _FRAME_TOL:
            raise ValueError(f"frame time component must be 1, got {self.dt!r}")

    @classmethod
    def from_boost(cls, b: SpatialVector) -> "Frame":
        return cls(1.0, b.x, b.y, b.z)

    def boost(self) -> SpatialVector:
        """Velocity of this frame relative to the rest frame."""
        return SpatialVector(self.dx, self.dy, self.dz)


@dataclass(frozen=True, slots=True)
class Event:
    """Point of space-time, in affine coordinates relative to ``ORIGIN``."""

    t: float
    x: float
    y: float
    z: float

    def __add__(self, d: FourVector) -> "Event":
        return Event(self.t + d.dt, self.x + d.dx, self.y + d.dy, self.z + d.dz)

    def __sub__(self, other):
        if isinstance(other, Event):
            return FourVector(self.t - other.t, self.x - other.x,
                              self.y - other.y, self.z - other.z)
        return Event(self.t - other.dt, self.x - other.dx,
                     self.y - other.dy, self.z - other.dz)

    def components(self) -> tuple[float, float, float, float]:
        return (self.t, self.x, self.y, self.z)

    def is_finite(self) -> bool:
        return all(map(math.isfinite, self.components()))


TIME_FORM = FourCovector(1.0, 0.0, 0.0, 0.0)
REST_FRAME = Frame(1.0, 0.0, 0.0, 0.0)
ORIGIN = Event(0.0, 0.0, 0.0, 0.0)


def pair(p: FourCovector, v: FourVector) -> float:
    """Natural pairing of a covector with a vector."""
    return p.pt * v.dt + p.px * v.dx + p.py * v.dy + p.pz * v.dz


def pair_spatial(q: SpatialCovector, w: SpatialVector) -> float:
    return q.x * w.x + q.y * w.y + q.z * w.z


def metric(w: SpatialVector) -> SpatialCovector:
    """Euclidean metric applied to a spatial vector."""
    return SpatialCovector(w.x, w.y, w.z)


def metric_inv(q: SpatialCovector) -> SpatialVector:
    return SpatialVector(q.x, q.y, q.z)


def cometric(p: FourCovector) -> FourVector:
    """Degenerate contravariant metric; annihilates the time form."""
    return FourVector(0.0, p.px, p.py, p.pz)


def embed(w: SpatialVector) -> FourVector:
    """Include a spatial vector as a displacement with zero time component."""
    return FourVector(0.0, w.x, w.y, w.z)


def project(u: Frame, v: FourVector) -> SpatialVector:
    """Velocity of ``v`` relative to the observer ``u``.

    Splits off the time component: v = embed(project(u, v)) + pair(TIME_FORM, v) * u.
    """
    s = v.dt
    return SpatialVector(v.dx - s * u.dx, v.dy - s * u.dy, v.dz - s * u.dz)


def restrict(p: FourCovector) -> SpatialCovector:
    """Restriction of a four-covector to spatial vectors."""
    return SpatialCovector(p.px, p.py, p.pz)


def dual_lift(u: Frame, q: SpatialCovector) -> FourCovector:
    """The unique four-covector restricting to ``q`` and vanishing on ``u``.

    The time slot balances the spatial pairing against the frame's boost.
    """
    return FourCovector(-(q.x * u.dx + q.y * u.dy + q.z * u.dz), q.x, q.y, q.z)
