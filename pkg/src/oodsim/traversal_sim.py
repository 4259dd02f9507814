"""Quasi-static traversal of a pipe network.

The robot's centre rides the centreline at the constant nominal rim speed.
Each track's speed is an algebraic function of the section the centre is in:
the nominal speed in straights, the bend-modulated speeds otherwise.  Time
steps that would cross a section boundary are split exactly at the boundary,
so distances and total time do not depend on the step size.

The network ends are trimmed by half the robot length each: the robot starts
with its centre half a body in from the mouth and stops half a body short of
the exit, so the centre path is the centreline total minus one robot length.
"""

from __future__ import annotations

import io
from dataclasses import dataclass, field
from math import atan, degrees

from .errors import ConfigError, EndOfNetwork, IncompleteLog
from .geartrain import GearParams, equal_load_output_speed
from .pipe_geometry import Bend, Orientation, PipeNetwork, track_speed_factors
from .reference_data import PUBLISHED_TOTAL_TIME_S, TIMING_NOTE
from .units import rim_speed_mm_s

CSV_HEADER = ("t_s,s_mm,section,v_tA_mms,v_tB_mms,v_tC_mms,"
              "d_A_mm,d_B_mm,d_C_mm,comp_A_mm,comp_B_mm,comp_C_mm")

DEFAULT_DT_S = 0.001
DEFAULT_CADENCE_S = 0.1
_TIME_EPS = 1e-12


@dataclass(frozen=True)
class RobotConfig:
    """Robot geometry, drive input, and spring travel limits."""

    length: float = 200.0                # L_R, mm
    sprocket_diameter: float = 80.0      # mm
    input_rpm: float = 120.0
    spring_preload: float = 1.25         # mm, compression in straight pipe
    bend_extra_compression: float = 1.5  # mm, added while in a bend
    max_compression: float = 16.0        # mm, hard limit of one module
    module_length: float | None = None   # mm, defaults to the robot length

    def __post_init__(self):
        if not self.length > 0:
            raise ConfigError(f"robot length must be positive, got {self.length}")
        if not self.sprocket_diameter > 0:
            raise ConfigError("sprocket diameter must be positive, "
                              f"got {self.sprocket_diameter}")
        if not 0 < self.spring_preload <= self.max_compression:
            raise ConfigError(
                f"spring preload must lie in (0, {self.max_compression}] mm, "
                f"got {self.spring_preload}")
        if self.bend_extra_compression < 0:
            raise ConfigError("bend extra compression cannot be negative, "
                              f"got {self.bend_extra_compression}")
        if self.spring_preload + self.bend_extra_compression > self.max_compression:
            raise ConfigError(
                "preload plus bend compression exceeds the module limit "
                f"({self.spring_preload} + {self.bend_extra_compression} > "
                f"{self.max_compression} mm)")
        if self.module_length is None:
            object.__setattr__(self, "module_length", self.length)
        elif not self.module_length > 0:
            raise ConfigError(f"module length must be positive, got {self.module_length}")


@dataclass(frozen=True)
class TraversalState:
    """Snapshot of the traversal at one instant."""

    time: float            # s
    s: float               # mm along the centreline
    section_index: int
    track_speeds: tuple    # mm/s (A, B, C)
    track_distances: tuple # mm, cumulative (A, B, C)
    compressions: tuple    # mm per module
    done: bool = False


@dataclass(frozen=True)
class TraversalSummary:
    mu_deg: float
    nominal_speed: float        # mm/s
    start_s: float              # mm, first centre position
    end_s: float                # mm, last centre position
    effective_path: float       # mm, end_s - start_s
    total_time: float           # s
    predicted_time: float       # s, effective_path / nominal_speed
    track_distances: tuple      # mm driven per track
    track_path_lengths: tuple   # mm required by geometry per track
    track_slip: tuple           # mm, signed (driven - required)
    section_transitions: tuple  # (section_index, entry_time_s) pairs
    published_total_time: float = PUBLISHED_TOTAL_TIME_S
    timing_note: str = TIMING_NOTE

    def as_dict(self) -> dict:
        return {
            "mu_deg": self.mu_deg,
            "nominal_speed_mms": self.nominal_speed,
            "start_s_mm": self.start_s,
            "end_s_mm": self.end_s,
            "effective_path_mm": self.effective_path,
            "total_time_s": self.total_time,
            "predicted_time_s": self.predicted_time,
            "track_distances_mm": list(self.track_distances),
            "track_path_lengths_mm": list(self.track_path_lengths),
            "track_slip_mm": list(self.track_slip),
            "section_transitions": [
                {"section": i, "t_s": t} for i, t in self.section_transitions],
            "published_total_time_s": self.published_total_time,
            "timing_note": self.timing_note,
        }


@dataclass
class TraversalLog:
    """Sampled states at a fixed cadence plus the run summary."""

    rows: list = field(default_factory=list)
    summary: TraversalSummary | None = None

    def to_csv(self) -> str:
        buf = io.StringIO()
        buf.write(CSV_HEADER + "\n")
        for row in self.rows:
            fields = [f"{row.time:.6f}", f"{row.s:.6f}", str(row.section_index)]
            fields += [f"{v:.6f}" for v in row.track_speeds]
            fields += [f"{d:.6f}" for d in row.track_distances]
            fields += [f"{c:.6f}" for c in row.compressions]
            buf.write(",".join(fields) + "\n")
        return buf.getvalue()


def nominal_speed(config: RobotConfig, params: GearParams) -> float:
    """Sprocket rim speed at the equal-load output speed, in mm/s."""
    return rim_speed_mm_s(equal_load_output_speed(params, config.input_rpm),
                          config.sprocket_diameter)


def compression_profile(state: TraversalState, network: PipeNetwork,
                        config: RobotConfig) -> tuple:
    """Module compressions at the state's position.

    All three modules sit at the preload in straights and gain the bend
    increment in bends, clamped to the module travel limit.
    """
    return _section_compressions(network.sections[state.section_index], config)


def _section_compressions(section, config: RobotConfig) -> tuple:
    c = config.spring_preload
    if isinstance(section, Bend):
        c += config.bend_extra_compression
    c = min(max(c, 0.0), config.max_compression)
    return (c, c, c)


def _effective_span(network: PipeNetwork, config: RobotConfig) -> tuple:
    total = network.total_length
    if total < config.length:
        raise ConfigError(
            f"network centreline ({total} mm) is shorter than the robot "
            f"({config.length} mm)")
    half = config.length / 2.0
    return half, total - half


def geometric_track_paths(network: PipeNetwork, orientation: Orientation,
                          start_s: float, end_s: float) -> tuple:
    """Per-track arc length geometry demands over a centreline span.

    Within one section a track's path scales the centre's progress by a
    constant factor, so the integral is a sum of overlap * factor terms.
    """
    paths = [0.0, 0.0, 0.0]
    sec_start = 0.0
    for sec in network.sections:
        sec_end = sec_start + sec.length
        overlap = min(end_s, sec_end) - max(start_s, sec_start)
        if overlap > 0:
            factors = track_speed_factors(sec, orientation, network.spec)
            for i in range(3):
                paths[i] += overlap * factors[i]
        sec_start = sec_end
    return tuple(paths)


def step(state: TraversalState, dt: float, network: PipeNetwork,
         orientation: Orientation, config: RobotConfig,
         params: GearParams) -> TraversalState:
    """Advance one time step, splitting exactly at section boundaries.

    The returned state is clamped at the end of the effective span and
    flagged done once the centre reaches it; stepping a done state raises
    :class:`EndOfNetwork`.  A zero ``dt`` returns the state unchanged.
    """
    if state.done:
        raise EndOfNetwork("traversal already reached the end of the network")
    if dt < 0:
        raise ConfigError(f"dt must be non-negative, got {dt}")
    if dt == 0:
        return state
    v = nominal_speed(config, params)
    if not v > 0:
        raise ConfigError("nominal speed must be positive; check the input rpm")
    _, end_s = _effective_span(network, config)
    bounds = network.boundaries()

    t, s = state.time, state.s
    d = list(state.track_distances)
    idx = state.section_index
    done = False
    remaining = float(dt)
    while remaining > 0.0 and not done:
        factors = track_speed_factors(network.sections[idx], orientation,
                                      network.spec)
        boundary = min(bounds[idx], end_s)
        room = boundary - s
        ds = v * remaining
        if ds < room:
            s += ds
            t += remaining
            remaining = 0.0
        else:
            ds = room
            dt_used = room / v
            s = boundary
            t += dt_used
            remaining = max(0.0, remaining - dt_used)
            if boundary >= end_s:
                done = True
            else:
                idx += 1
        for i in range(3):
            d[i] += factors[i] * ds

    section = network.sections[idx]
    return TraversalState(
        time=t, s=s, section_index=idx,
        track_speeds=tuple(v * f for f in
                           track_speed_factors(section, orientation, network.spec)),
        track_distances=tuple(d),
        compressions=_section_compressions(section, config),
        done=done,
    )


def run(network: PipeNetwork, orientation: Orientation, config: RobotConfig,
        params: GearParams, dt: float = DEFAULT_DT_S,
        sample_cadence: float = DEFAULT_CADENCE_S,
        modulate_bends: bool = True) -> TraversalLog:
    """Simulate a full traversal and return the sampled log.

    ``modulate_bends=False`` forces the no-differential baseline that drives
    every track at the nominal speed everywhere; bends then slip by
    construction, which is exactly the behaviour speed modulation removes.
    The geometric path lengths in the summary are always the true ones, so
    the baseline's slip shows up in ``track_slip``.
    """
    if not dt > 0:
        raise ConfigError(f"dt must be positive, got {dt}")
    if not sample_cadence > 0:
        raise ConfigError(f"sample cadence must be positive, got {sample_cadence}")
    if sample_cadence < dt:
        raise ConfigError(
            f"sample cadence ({sample_cadence}) must be at least dt ({dt})")
    v = nominal_speed(config, params)
    if not v > 0:
        raise ConfigError("nominal speed must be positive; check the input rpm")
    start_s, end_s = _effective_span(network, config)
    bounds = network.boundaries()
    sections = network.sections

    drive = [track_speed_factors(sec, orientation, network.spec)
             if modulate_bends else (1.0, 1.0, 1.0) for sec in sections]
    comps = [_section_compressions(sec, config) for sec in sections]

    idx = network.section_index_at(start_s)
    t, s = 0.0, start_s
    dA = dB = dC = 0.0
    done = start_s >= end_s
    transitions = [(idx, 0.0)]
    rows = []
    sample_i = 0

    def emit():
        fa, fb, fc = drive[idx]
        rows.append(TraversalState(
            time=t, s=s, section_index=idx,
            track_speeds=(v * fa, v * fb, v * fc),
            track_distances=(dA, dB, dC),
            compressions=comps[idx],
            done=done,
        ))

    emit()
    sample_i = 1
    while not done:
        remaining = dt
        while remaining > 0.0:
            fa, fb, fc = drive[idx]
            boundary = min(bounds[idx], end_s)
            room = boundary - s
            ds = v * remaining
            if ds < room:
                s += ds
                t += remaining
                remaining = 0.0
            else:
                ds = room
                dt_used = room / v
                s = boundary
                t += dt_used
                remaining = max(0.0, remaining - dt_used)
                if boundary >= end_s:
                    done = True
                    remaining = 0.0
                else:
                    idx += 1
                    transitions.append((idx, t))
            dA += fa * ds
            dB += fb * ds
            dC += fc * ds
        if done or t >= sample_i * sample_cadence - _TIME_EPS:
            emit()
            sample_i += 1

    if rows[-1].time < t:
        emit()

    paths = geometric_track_paths(network, orientation, start_s, end_s)
    distances = (dA, dB, dC)
    summary = TraversalSummary(
        mu_deg=orientation.mu_deg,
        nominal_speed=v,
        start_s=start_s,
        end_s=end_s,
        effective_path=end_s - start_s,
        total_time=t,
        predicted_time=(end_s - start_s) / v,
        track_distances=distances,
        track_path_lengths=paths,
        track_slip=tuple(di - pi_ for di, pi_ in zip(distances, paths)),
        section_transitions=tuple(transitions),
    )
    return TraversalLog(rows=rows, summary=summary)


def slip_metric(log: TraversalLog, network: PipeNetwork,
                orientation: Orientation) -> tuple:
    """Signed per-track deviation (mm) of driven distance from geometric path.

    Zero on every track means no slip and no drag.  Raises
    :class:`IncompleteLog` unless the log reached the end of the network.
    """
    if log.summary is None or not log.rows or not log.rows[-1].done:
        raise IncompleteLog("slip is only defined for a finished traversal")
    paths = geometric_track_paths(network, orientation,
                                  log.summary.start_s, log.summary.end_s)
    final = log.rows[-1].track_distances
    return tuple(d - p for d, p in zip(final, paths))


def asym_tilt_limit(config: RobotConfig) -> float:
    """Largest module tilt (degrees) with one end fully compressed.

    The front end of a module takes the full spring travel while the rear end
    stays extended, so the tilt is atan(travel / module length).
    """
    return degrees(atan(config.max_compression / config.module_length))
