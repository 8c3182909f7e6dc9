"""Exception hierarchy shared by every solver.

Each error carries a short machine-readable ``code`` so the CLI can report it
without string matching.
"""

from __future__ import annotations


class CSAEmbedError(Exception):
    code = "Error"


class SumNotZero(CSAEmbedError):
    code = "SumNotZero"


class ArchimedeanViolation(CSAEmbedError):
    code = "ArchimedeanViolation"


class IndexExceedsDegree(CSAEmbedError):
    code = "IndexExceedsDegree"


class InvalidProfile(CSAEmbedError):
    code = "InvalidProfile"


class MissingSplittingData(CSAEmbedError):
    code = "MissingSplittingData"


class NonIntegralEll(CSAEmbedError):
    code = "NonIntegralEll"


class DegreeMismatch(CSAEmbedError):
    code = "DegreeMismatch"


class DegreeNotDividing(CSAEmbedError):
    code = "DegreeNotDividing"


class NonIntegralN(CSAEmbedError):
    code = "NonIntegralN"


class PreconditionViolated(CSAEmbedError):
    code = "PreconditionViolated"


class SchemaError(CSAEmbedError):
    code = "SchemaError"
