"""Exception hierarchy.

``SzwaveError`` covers everything raised deliberately by this package;
``DataError`` marks problems with user-supplied data (bad files, bad label
sets, impossible split requests) as opposed to programming errors.  The CLI
maps ``DataError`` to exit code 2.
"""


class SzwaveError(Exception):
    pass


class DataError(SzwaveError):
    pass


# --- EDF ingest ---

class MalformedHeader(DataError):
    pass


class InconsistentRecordCount(DataError):
    pass


class CalibrationDegenerate(DataError):
    pass


class UnknownLabel(DataError):
    pass


class InvertedInterval(DataError):
    pass


# --- preprocessing ---

class MissingElectrode(DataError):
    pass


class RateMismatch(DataError):
    pass


class EventOutOfRange(DataError):
    pass


class NoSegmentsProduced(DataError):
    pass


class ArchiveError(DataError):
    pass


# --- transform / features ---

class SignalTooShort(DataError):
    pass


class ShapeMismatch(DataError):
    pass


class InsufficientClasses(DataError):
    pass


# --- classifier ---

class SingleClassInput(DataError):
    pass


class EmptyFeatureMatrix(DataError):
    pass


class DimensionMismatch(DataError):
    pass


class InvalidInput(DataError):
    pass


# --- evaluation ---

class ClassTooSmall(DataError):
    pass


class InsufficientPatients(DataError):
    pass


class EmptyMatrix(DataError):
    pass
