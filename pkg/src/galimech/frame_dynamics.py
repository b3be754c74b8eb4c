"""Particle dynamics as seen from one inertial frame.

States carry an event and a spatial momentum covector; the frame enters
the equations only through the drift of the position.  Trajectories are
produced by classical fixed-step RK4, which is exact on free motion and
keeps bound-orbit energy drift far below the verification tolerances at
desk scale.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

from .chart import (
    Event,
    Frame,
    FourVector,
    SpatialCovector,
    SpatialVector,
    embed,
    metric,
    metric_inv,
    pair_spatial,
    project,
)
from .potentials import Potential

__all__ = [
    "State",
    "Tangent",
    "Sample",
    "IntegrationDiverged",
    "lagrangian",
    "hamiltonian",
    "dynamics_field",
    "vertical_field",
    "poisson_field",
    "generate_from_lagrangian",
    "integrate",
]


@dataclass(frozen=True, slots=True)
class State:
    """Instantaneous phase point: position event and spatial momentum."""

    x: Event
    p: SpatialCovector


@dataclass(frozen=True, slots=True)
class Tangent:
    """Rate of change of a state along the time parameter.

    The position rate is a frame: the particle advances one unit of
    chart time per unit of parameter.
    """

    xdot: Frame
    pdot: SpatialCovector


class Sample(NamedTuple):
    t: float
    state: State
    energy: float


class IntegrationDiverged(ArithmeticError):
    """A trajectory left the range of 64-bit floats."""


def _require_mass(mass: float):
    if not mass > 0:
        raise ValueError(f"mass must be positive, got {mass!r}")


def lagrangian(u: Frame, mass: float, potential: Potential, x: Event,
               w: Frame) -> float:
    """Kinetic energy relative to ``u`` minus the potential.

    ``w`` is the particle's four-velocity; only its velocity relative to
    the observer enters.
    """
    _require_mass(mass)
    rel = project(u, w - u)
    return 0.5 * mass * pair_spatial(metric(rel), rel) - potential.value(x)


def hamiltonian(mass: float, potential: Potential, x: Event,
                p: SpatialCovector) -> float:
    """Kinetic term of the momentum plus the potential.

    No frame argument: the spatial momentum is already the relative one,
    so the value reads the same from every frame.
    """
    _require_mass(mass)
    return 0.5 * pair_spatial(p, metric_inv(p)) / mass + potential.value(x)


def dynamics_field(u: Frame, mass: float, potential: Potential,
                   state: State) -> Tangent:
    """Equations of motion: xdot = g^-1(p)/m + u, pdot = -grad phi."""
    _require_mass(mass)
    w = metric_inv(state.p)
    inv_mass = 1.0 / mass
    xdot = Frame(1.0,
                 w.x * inv_mass + u.dx,
                 w.y * inv_mass + u.dy,
                 w.z * inv_mass + u.dz)
    return Tangent(xdot, -potential.spatial_gradient(state.x))


def vertical_field(mass: float, potential: Potential,
                   state: State) -> tuple[SpatialVector, SpatialCovector]:
    """Frame-independent part of the dynamics: relative velocity and force."""
    _require_mass(mass)
    return (metric_inv(state.p * (1.0 / mass)),
            -potential.spatial_gradient(state.x))


def poisson_field(mass: float, potential: Potential,
                  state: State) -> tuple[SpatialVector, SpatialCovector]:
    """Hamilton's equations from the canonical bracket on (x, p).

    The bracket only sees the fibers over simultaneity slices, so this
    reproduces exactly the vertical field, never the frame drift.
    """
    _require_mass(mass)
    p = state.p
    dh_dp = SpatialVector(p.x / mass, p.y / mass, p.z / mass)
    dh_dx = potential.spatial_gradient(state.x)
    return (dh_dp, -dh_dx)


def generate_from_lagrangian(u: Frame, mass: float, potential: Potential,
                             x: Event, w: Frame) -> tuple[State, Tangent]:
    """Phase point and its required rate for a particle at ``x`` moving with ``w``.

    The fiber derivative of the lagrangian gives the momentum, the base
    derivative the force.
    """
    _require_mass(mass)
    rel = project(u, w - u)
    state = State(x, metric(rel) * mass)
    return state, Tangent(w, -potential.spatial_gradient(x))


def _stepped(state: State, xdot: FourVector, pdot: SpatialCovector,
             h: float) -> State:
    return State(state.x + xdot * h, state.p + pdot * h)


def _rk4_step(u: Frame, mass: float, potential: Potential, state: State,
              h: float) -> State:
    k1 = dynamics_field(u, mass, potential, state)
    k2 = dynamics_field(u, mass, potential,
                        _stepped(state, k1.xdot, k1.pdot, 0.5 * h))
    k3 = dynamics_field(u, mass, potential,
                        _stepped(state, k2.xdot, k2.pdot, 0.5 * h))
    k4 = dynamics_field(u, mass, potential,
                        _stepped(state, k3.xdot, k3.pdot, h))
    xdot = (k1.xdot + 2.0 * k2.xdot + 2.0 * k3.xdot + k4.xdot) * (1.0 / 6.0)
    pdot = (k1.pdot + 2.0 * k2.pdot + 2.0 * k3.pdot + k4.pdot) * (1.0 / 6.0)
    return _stepped(state, xdot, pdot, h)


def integrate(u: Frame, mass: float, potential: Potential, initial: State,
              dt: float, steps: int) -> list[Sample]:
    """Fixed-step RK4 trajectory, one sample per step plus the initial one.

    Raises IntegrationDiverged as soon as any state component leaves the
    finite floats.
    """
    _require_mass(mass)
    if not dt > 0:
        raise ValueError(f"dt must be positive, got {dt!r}")
    if steps < 1:
        raise ValueError(f"steps must be at least 1, got {steps!r}")

    state = initial
    samples = [Sample(state.x.t, state, hamiltonian(mass, potential, state.x, state.p))]
    for step in range(1, steps + 1):
        state = _rk4_step(u, mass, potential, state, dt)
        if not (state.x.is_finite() and state.p.is_finite()):
            raise IntegrationDiverged(f"state left finite range at step {step}")
        energy = hamiltonian(mass, potential, state.x, state.p)
        if not math.isfinite(energy):
            raise IntegrationDiverged(f"energy left finite range at step {step}")
        samples.append(Sample(state.x.t, state, energy))
    return samples
