"""Exception types shared across the package.

The CLI maps these onto exit codes: ConfigError (and argparse usage
problems) exit 1, DataError and its subclasses exit 2.
"""


class LyricmoodError(Exception):
    """Base class for all errors raised by this package."""


class ConfigError(LyricmoodError):
    """Bad configuration: unknown key, missing key, invalid value."""


class DataError(LyricmoodError):
    """Bad input data: corpus files, labels, infeasible splits."""


class ModelFormatError(DataError):
    """Model file is truncated or not parseable."""


class ModelVersionError(DataError):
    """Model file declares a format version this code does not read."""


class ModelChecksumError(DataError):
    """Model file payload does not match its recorded checksum."""
