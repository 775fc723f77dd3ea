"""Domain error hierarchy.

``MathRejection`` covers inputs that are well-formed but mathematically
outside the tool's contract (improper parameterization, arc through a
denominator root, field extensions beyond one square root).  The CLI
maps these to exit code 2 with a machine-readable reason; plain usage
or I/O problems stay ValueError/OSError and map to exit code 1.
"""

from __future__ import annotations


class MathRejection(Exception):
    reason = "rejected"

    def __init__(self, message, **evidence):
        super().__init__(message)
        self.evidence = evidence


class ImproperParameterization(MathRejection):
    reason = "improper"


class ConstantParameterization(MathRejection):
    reason = "constant"


class ArcMeetsInfinity(MathRejection):
    reason = "arc-meets-infinity"


class UnsupportedExtension(MathRejection):
    reason = "unsupported-extension-degree"


class WrongCase(MathRejection):
    reason = "wrong-case"
