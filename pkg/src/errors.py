"""Exception hierarchy shared by every module."""


class SpikeGateError(Exception):
    """Base class for all simulator errors."""


class InvalidArgumentError(SpikeGateError, ValueError):
    """An operation received an argument outside its contract."""


class ConfigError(SpikeGateError):
    """Configuration could not be loaded, parsed or validated."""
