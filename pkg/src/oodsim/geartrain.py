"""Closed-form kinematics and torque split of a three-output open differential.

The mechanism couples one input shaft to three output shafts through six open
differentials: three two-output units (rings R1..R3 with side gears S1..S6)
fed by the input, and three two-input units (rings R4..R6 with side gears
S7..S12) that drive the outputs.  Conventions used throughout:

* ``k`` is the input-to-ring reduction: R1..R3 all spin at ``input / k``.
* ``j`` is the ring-to-output step-up: output i spins at ``j`` times R(3+i).
* An open differential's ring speed is the mean of its two side-gear speeds.
* Side gears are rigidly meshed in pairs across the two unit families:
  (S1,S7) (S3,S8) (S5,S11) (S2,S12) (S4,S9) (S6,S10), so R4 averages the
  gears fed by S1 and S3, R5 those fed by S4 and S6, R6 those fed by S5 and
  S2.  Each two-output unit therefore serves two different outputs, which is
  what makes all three outputs kinematically equivalent to the input.

Speeds are rpm at the API boundary.  Torques are N*mm and side-gear
accelerations rad/s^2; the inertia terms then come out in N*mm directly.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ConfigError, NonPositiveRatio

# Rigid side-gear meshes as (two-output gear id, two-input gear id).
RIGID_PAIRS = ((1, 7), (3, 8), (5, 11), (2, 12), (4, 9), (6, 10))

# Inertia/acceleration index pairs subtracted from each output's ideal torque,
# in the exact (and deliberately asymmetric) order of the torque balance:
# output 1 carries (I1, w7) and (I3, w8); output 3 carries (I2, w12) and (I5, w11).
TORQUE_TERMS = (
    ((1, 7), (3, 8)),
    ((4, 9), (6, 10)),
    ((2, 12), (5, 11)),
)


@dataclass(frozen=True)
class GearParams:
    """Fixed ratios and side-gear inertias identifying one gear train."""

    k: float = 20.0
    j: float = 2.0
    inertias: tuple = (0.0,) * 6  # I1..I6, mass * mm^2

    def __post_init__(self):
        if not self.k > 0:
            raise ConfigError(f"gear ratio k must be positive, got {self.k}")
        if not self.j > 0:
            raise ConfigError(f"gear ratio j must be positive, got {self.j}")
        inertias = tuple(float(i) for i in self.inertias)
        if len(inertias) != 6:
            raise ConfigError("exactly six side-gear inertias are required")
        if any(i < 0 for i in inertias):
            raise ConfigError("side-gear inertias must be non-negative")
        object.__setattr__(self, "inertias", inertias)


@dataclass(frozen=True)
class OODState:
    """Every angular speed in the gear train at one instant (all rpm)."""

    input_speed: float
    ring_speeds: tuple    # R1..R6
    side_speeds: tuple    # S1..S12
    output_speeds: tuple  # O1..O3


@dataclass(frozen=True)
class LoadCase:
    """Input torque plus the angular accelerations of side gears S7..S12."""

    input_torque: float                     # N*mm
    side_accelerations: tuple = (0.0,) * 6  # rad/s^2, ordered S7..S12


@dataclass(frozen=True)
class TorqueBreakdown:
    """Output torques and the inertial term subtracted from each ideal share."""

    output_torques: tuple
    inertial_terms: tuple

    @property
    def total(self) -> float:
        return sum(self.output_torques)


def ring_speed(params: GearParams, input_speed: float) -> float:
    """Common speed of the input-side rings R1..R3."""
    return input_speed / params.k


def equal_load_output_speed(params: GearParams, input_speed: float) -> float:
    """Output speed when all three outputs see equal load: j * input / k."""
    return params.j * input_speed / params.k


def output_torques(params: GearParams, load: LoadCase) -> TorqueBreakdown:
    """Split the input torque across the three outputs.

    Each output receives ``k * tau / (3j)`` minus the inertial reaction of the
    two side gears feeding its ring, paired per ``TORQUE_TERMS``.
    """
    ideal = params.k * load.input_torque / (3.0 * params.j)
    accel = {gear: a for gear, a in zip(range(7, 13), load.side_accelerations)}
    torques = []
    terms = []
    for (ia, sa), (ib, sb) in TORQUE_TERMS:
        term = (params.inertias[ia - 1] * accel[sa]
                + params.inertias[ib - 1] * accel[sb]) / params.j
        terms.append(term)
        torques.append(ideal - term)
    return TorqueBreakdown(tuple(torques), tuple(terms))


def two_output_residual(ring: float, side_a: float, side_b: float,
                        k_local: float = 1.0) -> float:
    """Constraint violation of one open differential.

    Zero iff ``ring == k_local * (side_a + side_b) / 2``.  Use ``k_local=1``
    to check a ring against its own side gears, or ``k_local=k`` to check the
    input speed against a two-output unit's side gears directly.
    """
    return ring - k_local * (side_a + side_b) / 2.0


def distribute_speeds(params: GearParams, input_speed: float,
                      demand_ratios) -> tuple:
    """Output speeds for three relative per-track speed demands.

    The gear train constrains only the *sum* of the output speeds, at
    ``3 * j * input / k``; the relative demands come from pipe geometry.  The
    proportional split below is the unique assignment satisfying both, and it
    collapses to :func:`equal_load_output_speed` when the ratios are equal.
    Ratios are relative: (1, 1, 1) and (5, 5, 5) give identical outputs.
    """
    ratios = tuple(float(r) for r in demand_ratios)
    if len(ratios) != 3:
        raise ValueError("exactly three demand ratios are required")
    if any(not r > 0 for r in ratios):
        raise NonPositiveRatio(f"demand ratios must all be positive, got {ratios}")
    base = equal_load_output_speed(params, input_speed)
    total = ratios[0] + ratios[1] + ratios[2]
    return tuple(base * 3.0 * r / total for r in ratios)


def equal_load_state(params: GearParams, input_speed: float) -> OODState:
    """Fully populated state for the equal-load case: every side gear at input/k."""
    c = ring_speed(params, input_speed)
    out = equal_load_output_speed(params, input_speed)
    return OODState(
        input_speed=input_speed,
        ring_speeds=(c,) * 6,
        side_speeds=(c,) * 12,
        output_speeds=(out,) * 3,
    )


def state_from_outputs(params: GearParams, input_speed: float,
                       output_speeds) -> OODState:
    """Reconstruct all internal speeds for a given output assignment.

    Fixing the outputs still leaves the side gears one free circulating mode;
    we pick the solution closest to the uniform ring speed ``c = input / k``,
    which reduces to :func:`equal_load_state` for equal outputs.  Each
    two-output unit then splits symmetrically by two thirds of the difference
    between the two output demands its side gears feed: S1/S2 feed outputs
    1/3, S3/S4 feed 1/2, and S5/S6 feed 3/2.
    """
    out = tuple(float(w) for w in output_speeds)
    if len(out) != 3:
        raise ValueError("exactly three output speeds are required")
    o1, o2, o3 = (w / params.j for w in out)
    c = ring_speed(params, input_speed)
    d13 = 2.0 * (o1 - o3) / 3.0
    d12 = 2.0 * (o1 - o2) / 3.0
    d32 = 2.0 * (o3 - o2) / 3.0
    s1, s2 = c + d13, c - d13
    s3, s4 = c + d12, c - d12
    s5, s6 = c + d32, c - d32
    # S7..S12 mirror their rigid mesh partners.
    side = (s1, s2, s3, s4, s5, s6, s1, s3, s4, s6, s5, s2)
    return OODState(
        input_speed=input_speed,
        ring_speeds=(c, c, c, o1, o2, o3),
        side_speeds=side,
        output_speeds=out,
    )


def verify_state(params: GearParams, state: OODState) -> dict:
    """Residual of every kinematic constraint, keyed by constraint name.

    All residuals are zero (to rounding) iff the state is consistent: the
    input drives all three first-stage rings, every ring averages its side
    pair, rigid meshes agree, and outputs follow their rings.  The derived
    sum-of-outputs residual is included for convenience.
    """
    c = ring_speed(params, state.input_speed)
    r = state.ring_speeds
    s = state.side_speeds
    o = state.output_speeds
    res = {}
    for i in range(3):
        res[f"input_to_ring_R{i + 1}"] = r[i] - c
    for i, (a, b) in enumerate(((1, 2), (3, 4), (5, 6)), start=1):
        res[f"ring_mean_R{i}"] = two_output_residual(r[i - 1], s[a - 1], s[b - 1])
    for a, b in RIGID_PAIRS:
        res[f"rigid_S{a}_S{b}"] = s[a - 1] - s[b - 1]
    for i, (a, b) in enumerate(((7, 8), (9, 10), (11, 12)), start=4):
        res[f"ring_mean_R{i}"] = two_output_residual(r[i - 1], s[a - 1], s[b - 1])
    for i in range(3):
        res[f"output_to_ring_O{i + 1}"] = o[i] - params.j * r[3 + i]
    res["output_sum"] = (o[0] + o[1] + o[2]
                         - 3.0 * equal_load_output_speed(params, state.input_speed))
    return res
