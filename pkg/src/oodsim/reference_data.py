"""Published benchmark values, recorded once so every comparison names its source.

All speeds are mm/s, angles degrees, lengths mm, times seconds.  The values
come from the published study of this mechanism: steady track speeds observed
in a multibody-dynamics simulation of the benchmark pipe network, the
closed-form speeds they were checked against, and the absolute-percentage-
error bounds claimed for the agreement.

Known inconsistencies in that data are kept here too rather than papered
over; see ``KNOWN_DISCREPANCIES``.
"""

REFERENCE_VERSION = "1"

# Scenario constants.
INPUT_SPEED_RPM = 120.0
EQUAL_LOAD_OUTPUT_RPM = 12.0
SPROCKET_DIAMETER_MM = 80.0
ROBOT_LENGTH_MM = 200.0
NETWORK_TOTAL_MM = 3023.49
ROBOT_PATH_MM = 2823.49          # network total minus one robot length
PUBLISHED_NOMINAL_SPEED_MMS = 50.24

# The published total traversal time divides 3016.49 mm by 50.24 mm/s.  That
# distance is inconsistent with the study's own robot-path figure of
# 2823.49 mm, which predicts about 56.2 s; both numbers are reported.
PUBLISHED_TOTAL_TIME_S = 60.04
TIMING_NOTE = (
    "published total time 60.04 s divides 3016.49 mm by 50.24 mm/s, which is "
    "inconsistent with the published robot-path length of 2823.49 mm; the "
    "end-trimmed path predicts ~56.2 s"
)

# Steady straight-section speeds from the published multibody simulation
# (identical on all three tracks), per insertion orientation.
BENCH_STRAIGHT_MMS = {0.0: 50.03, 30.0: 50.22, 60.0: 51.36}

# Per-track bend-speed averages from the published multibody simulation,
# ordered (A, B, C) for each insertion orientation.
BENCH_BEND_MMS = {
    0.0: (33.62, 58.7, 57.8),
    30.0: (37.3, 63.8, 50.3),
    60.0: (40.2, 68.5, 41.3),
}

# Closed-form bend speeds printed alongside the mu=0 results.
BENCH_BEND_THEORY_MU0_MMS = (33.69, 58.51, 58.51)

# Published min/max envelopes of the bend-speed traces, ordered (A, B, C).
BENCH_BEND_RANGE_MMS = {
    0.0: ((30.0, 37.25), (52.0, 60.0), (52.0, 60.0)),
    30.0: ((32.5, 40.0), (60.0, 75.0), (49.0, 52.0)),
    60.0: ((32.5, 48.0), (62.0, 75.0), (32.5, 48.0)),
}

# Claimed absolute-percentage-error bounds: one figure for all straight
# sections, one per orientation for bends.
APE_BOUND_STRAIGHT_PCT = 2.2
APE_BOUND_BEND_PCT = {0.0: 1.2, 30.0: 3.8, 60.0: 2.5}

# The published APE figures are rounded to one decimal, so comparisons grant
# one reporting unit of slack on top of the claimed bound.
APE_REPORTING_MARGIN_PCT = 0.1

REPORT_ORIENTATIONS_DEG = (0.0, 30.0, 60.0)

KNOWN_DISCREPANCIES = (
    "the published mu=60 track-A bend average of 40.2 mm/s lies ~4.3% from "
    "any closed-form speed consistent with the rest of the data (~41.99 mm/s)"
    ", outside the claimed 2.5% bound; that claim is only consistent with "
    "tracks B and C",
    TIMING_NOTE,
    "the published elbow timing window spans ~15 s, while the elbow arc "
    "length over the nominal speed gives ~13.1 s; the extra transient is not "
    "reproducible from the published geometry",
)


def straight_source(mu_deg: float) -> str:
    return (f"published multibody-simulation straight-section speed, "
            f"mu={mu_deg:g} deg")


def bend_source(mu_deg: float, track: str) -> str:
    return (f"published multibody-simulation bend-speed average, "
            f"mu={mu_deg:g} deg, track {track}")
