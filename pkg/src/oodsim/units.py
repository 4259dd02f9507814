"""Angular-speed conversions, kept in one place.

API boundaries speak rpm and degrees; anything that needs SI converts here.
"""

from math import pi

RPM_TO_RAD_S = pi / 30.0


def rpm_to_rad_s(rpm: float) -> float:
    return rpm * RPM_TO_RAD_S


def rad_s_to_rpm(rad_s: float) -> float:
    return rad_s / RPM_TO_RAD_S


def rim_speed_mm_s(rpm: float, diameter_mm: float) -> float:
    """Linear rim speed of a wheel of the given diameter spinning at ``rpm``."""
    return pi * diameter_mm * rpm / 60.0
