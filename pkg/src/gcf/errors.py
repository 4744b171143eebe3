"""Exception hierarchy shared across the toolkit."""


class GcfError(Exception):
    """Base class for all errors raised by this package."""


class ShapeError(GcfError):
    """Tensor shapes are inconsistent for the requested operation."""


class ContractError(GcfError):
    """An operation was called outside its documented contract."""


class ConfigError(GcfError):
    """A run configuration is invalid or contains unknown keys."""


class DataError(GcfError):
    """A manifest or image file could not be loaded."""


class NumericError(GcfError):
    """A non-finite value appeared where finite math was expected."""


class CheckpointError(GcfError):
    """A checkpoint file is malformed or does not match the configuration."""
