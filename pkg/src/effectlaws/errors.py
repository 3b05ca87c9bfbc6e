"""Exceptions raised by the models and the law harness.

Law failures are never exceptions; they are reported.  Everything here signals
a wiring or implementation bug.
"""


class EffectLawsError(Exception):
    pass


class UnsupportedLaw(EffectLawsError):
    """A law was wired to a model that lacks one of its operations."""


class UnknownSuite(EffectLawsError):
    pass


class UnknownDemo(EffectLawsError):
    pass


class UnknownCheck(EffectLawsError):
    pass


class SizeCertificateViolation(EffectLawsError):
    pass


class FuelExhausted(EffectLawsError):
    pass


class WitnessMismatch(EffectLawsError):
    pass
