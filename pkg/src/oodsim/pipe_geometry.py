"""Pipe-network geometry and the per-track speed law in bends.

A network is an ordered run of straight and bend sections sharing one bore.
Inside a bend, a track at angle ``a`` from the bend plane rides at radius
``R - r*cos(a)`` from the centre of curvature, so its no-slip speed and path
length scale by ``(R - r*cos(a)) / R`` relative to the centreline.  The three
tracks sit 120 degrees apart, which makes the three factors sum to exactly 3:
whatever the inner track gives up in a bend the outer tracks take on.
"""

from __future__ import annotations

import json
from bisect import bisect_right
from dataclasses import dataclass
from math import cos, pi, radians

from .errors import ConfigError, GeometryError

MODULE_OFFSETS_DEG = (0.0, 120.0, 240.0)
TRACK_NAMES = ("A", "B", "C")


@dataclass(frozen=True)
class PipeSpec:
    """Bore geometry shared by every section of a network."""

    inner_radius: float  # mm

    def __post_init__(self):
        if not self.inner_radius > 0:
            raise GeometryError(
                f"pipe inner radius must be positive, got {self.inner_radius}")


@dataclass(frozen=True)
class Straight:
    length: float      # mm along the centreline
    heading: str = ""  # free-text label, e.g. "vertical"

    def __post_init__(self):
        if not self.length > 0:
            raise GeometryError(f"straight length must be positive, got {self.length}")

    @property
    def kind(self) -> str:
        return "straight"


@dataclass(frozen=True)
class Bend:
    bend_radius: float  # mm, centreline radius of curvature
    sweep_deg: float    # turn angle, 0 < sweep <= 360
    plane: str = ""     # free-text label for the bend plane

    def __post_init__(self):
        if not self.bend_radius > 0:
            raise GeometryError(
                f"bend radius must be positive, got {self.bend_radius}")
        if not 0 < self.sweep_deg <= 360:
            raise GeometryError(
                f"bend sweep must lie in (0, 360] degrees, got {self.sweep_deg}")

    @property
    def kind(self) -> str:
        return "bend"

    @property
    def length(self) -> float:
        """Centreline arc length."""
        return self.bend_radius * radians(self.sweep_deg)


Section = Straight | Bend


@dataclass(frozen=True)
class Orientation:
    """Roll angle of module A relative to the bend plane, in degrees.

    The three modules repeat every 120 degrees, so any finite angle is
    accepted; orientations that differ by 120 degrees produce the same speed
    pattern with the track labels rotated.
    """

    mu_deg: float = 0.0

    @property
    def canonical_mu_deg(self) -> float:
        return self.mu_deg % 120.0

    def track_angles_deg(self) -> tuple:
        return tuple(self.mu_deg + off for off in MODULE_OFFSETS_DEG)


@dataclass(frozen=True)
class PipeNetwork:
    spec: PipeSpec
    sections: tuple

    def __post_init__(self):
        sections = tuple(self.sections)
        if not sections:
            raise GeometryError("a pipe network needs at least one section")
        for i, sec in enumerate(sections):
            if isinstance(sec, Bend) and sec.bend_radius <= self.spec.inner_radius:
                raise GeometryError(
                    "bend radius must exceed pipe radius "
                    f"(section {i}: R={sec.bend_radius} mm, "
                    f"r={self.spec.inner_radius} mm)")
        object.__setattr__(self, "sections", sections)

    @property
    def total_length(self) -> float:
        return sum(sec.length for sec in self.sections)

    def boundaries(self) -> tuple:
        """Cumulative end position of each section along the centreline."""
        out, acc = [], 0.0
        for sec in self.sections:
            acc += sec.length
            out.append(acc)
        return tuple(out)

    def section_index_at(self, s: float) -> int:
        """Index of the section containing centreline position ``s``.

        A boundary position belongs to the section being entered; the very end
        of the network belongs to the last section.
        """
        if s < 0 or s > self.total_length:
            raise GeometryError(f"position {s} mm lies outside the network")
        return min(bisect_right(self.boundaries(), s), len(self.sections) - 1)


def _bend_factor(bend_radius: float, pipe_radius: float, angle_deg: float) -> float:
    if not bend_radius > pipe_radius > 0:
        raise GeometryError(
            "bend radius must exceed pipe radius "
            f"(R={bend_radius} mm, r={pipe_radius} mm)")
    return (bend_radius - pipe_radius * cos(radians(angle_deg))) / bend_radius


def bend_track_speed(nominal_speed: float, bend_radius: float,
                     pipe_radius: float, track_angle_deg: float) -> float:
    """No-slip speed of one track in a bend: ``v * (R - r*cos(angle)) / R``."""
    return nominal_speed * _bend_factor(bend_radius, pipe_radius, track_angle_deg)


def track_speed_factors(section: Section, orientation: Orientation,
                        spec: PipeSpec) -> tuple:
    """Per-track speed (and path-length) scale factors over one section."""
    if isinstance(section, Straight):
        return (1.0, 1.0, 1.0)
    return tuple(_bend_factor(section.bend_radius, spec.inner_radius, a)
                 for a in orientation.track_angles_deg())


def track_speeds(nominal_speed: float, section: Section,
                 orientation: Orientation, spec: PipeSpec) -> tuple:
    """Instantaneous speeds of tracks A, B, C while the robot is in ``section``."""
    return tuple(nominal_speed * f
                 for f in track_speed_factors(section, orientation, spec))


def track_path_length(section: Section, orientation: Orientation,
                      spec: PipeSpec, track_index: int) -> float:
    """Arc length one track covers over a full section.

    Equals the centreline length scaled by the track's speed factor, so the
    three track paths of any bend always average to the centreline length.
    """
    return section.length * track_speed_factors(section, orientation, spec)[track_index]


# Benchmark network used by the published traversal results: a vertical climb
# into a 90 degree elbow, a horizontal run into a 180 degree U-bend, and a
# short horizontal exit.  The bend radius is kept at full precision, derived
# from the published elbow arc length, so the total comes out at exactly
# 3023.49 mm; the bore radius is recovered from the published bend speeds.
REFERENCE_ELBOW_ARC_MM = 657.83
REFERENCE_BEND_RADIUS_MM = REFERENCE_ELBOW_ARC_MM / (pi / 2.0)  # ~418.79
REFERENCE_PIPE_RADIUS_MM = 137.95


def reference_network() -> PipeNetwork:
    """The fixed benchmark network, total centreline 3023.49 mm."""
    return PipeNetwork(
        spec=PipeSpec(inner_radius=REFERENCE_PIPE_RADIUS_MM),
        sections=(
            Straight(550.0, heading="vertical"),
            Bend(REFERENCE_BEND_RADIUS_MM, 90.0),
            Straight(350.0, heading="horizontal"),
            Bend(REFERENCE_BEND_RADIUS_MM, 180.0),
            Straight(150.0, heading="horizontal"),
        ),
    )


def network_to_json(network: PipeNetwork) -> dict:
    """Interchange descriptor with fixed field order and 2-decimal millimetres."""
    sections = []
    for sec in network.sections:
        if isinstance(sec, Straight):
            sections.append({"type": "straight", "length_mm": round(sec.length, 2)})
        else:
            sections.append({"type": "bend",
                             "radius_mm": round(sec.bend_radius, 2),
                             "sweep_deg": round(sec.sweep_deg, 2)})
    return {"pipe": {"inner_radius_mm": round(network.spec.inner_radius, 2)},
            "sections": sections}


def network_to_json_text(network: PipeNetwork) -> str:
    return json.dumps(network_to_json(network), indent=2)


def network_from_json(obj: dict) -> PipeNetwork:
    """Parse the interchange descriptor; field problems raise ConfigError."""
    if not isinstance(obj, dict):
        raise ConfigError("network descriptor must be a JSON object")
    try:
        pipe = obj["pipe"]
        inner = float(pipe["inner_radius_mm"])
    except (KeyError, TypeError, ValueError) as exc:
        raise ConfigError(f"network.pipe.inner_radius_mm is missing or invalid: {exc}")
    raw_sections = obj.get("sections")
    if not isinstance(raw_sections, list) or not raw_sections:
        raise ConfigError("network.sections must be a non-empty list")
    sections = []
    for i, entry in enumerate(raw_sections):
        kind = entry.get("type") if isinstance(entry, dict) else None
        try:
            if kind == "straight":
                sections.append(Straight(float(entry["length_mm"])))
            elif kind == "bend":
                sections.append(Bend(float(entry["radius_mm"]),
                                     float(entry["sweep_deg"])))
            else:
                raise ConfigError(
                    f"network.sections[{i}].type must be 'straight' or 'bend'")
        except (KeyError, TypeError, ValueError) as exc:
            raise ConfigError(f"network.sections[{i}] is invalid: {exc}")
    return PipeNetwork(spec=PipeSpec(inner_radius=inner), sections=tuple(sections))
