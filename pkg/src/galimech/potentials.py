"""Scalar potentials on space-time.

A potential is one function on events, shared by every observer; only
its restriction to a simultaneity slice depends on who is watching.
Each kind carries its exact differential so the dynamics never has to
fall back on finite differences.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import ClassVar

from .chart import (
    ORIGIN,
    Event,
    FourCovector,
    SpatialCovector,
    metric,
    pair,
    project,
    restrict,
    REST_FRAME,
)

__all__ = ["Potential", "ZeroPotential", "UniformPotential", "HarmonicPotential"]


class Potential:
    """Interface: a value and an exact differential at every event."""

    kind: ClassVar[str]

    def value(self, x: Event) -> float:
        raise NotImplementedError

    def differential(self, x: Event) -> FourCovector:
        raise NotImplementedError

    def spatial_gradient(self, x: Event) -> SpatialCovector:
        """Force covector (up to sign): the differential on spatial directions."""
        return restrict(self.differential(x))


@dataclass(frozen=True)
class ZeroPotential(Potential):
    """Free particle."""

    kind: ClassVar[str] = "zero"

    def value(self, x: Event) -> float:
        return 0.0

    def differential(self, x: Event) -> FourCovector:
        return FourCovector(0.0, 0.0, 0.0, 0.0)


@dataclass(frozen=True)
class UniformPotential(Potential):
    """Affine potential with constant slope covector.

    A nonzero time slot makes the potential drift in time everywhere at
    the same rate; the force is still constant.
    """

    kind: ClassVar[str] = "uniform"
    slope: FourCovector

    def value(self, x: Event) -> float:
        return pair(self.slope, x - ORIGIN)

    def differential(self, x: Event) -> FourCovector:
        return self.slope


@dataclass(frozen=True)
class HarmonicPotential(Potential):
    """Isotropic spring about a center event, static in the rest chart.

    The displacement is measured on the rest-chart simultaneity slice,
    so the differential never picks up a time component.
    """

    kind: ClassVar[str] = "harmonic"
    stiffness: float
    center: Event = ORIGIN

    def __post_init__(self):
        if not self.stiffness > 0:
            raise ValueError(f"stiffness must be positive, got {self.stiffness!r}")

    def value(self, x: Event) -> float:
        s = project(REST_FRAME, x - self.center)
        return 0.5 * self.stiffness * (s.x * s.x + s.y * s.y + s.z * s.z)

    def differential(self, x: Event) -> FourCovector:
        s = project(REST_FRAME, x - self.center)
        q = metric(s)
        k = self.stiffness
        return FourCovector(0.0, k * q.x, k * q.y, k * q.z)
