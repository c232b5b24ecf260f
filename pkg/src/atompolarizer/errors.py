"""Exception hierarchy."""


class PolarizerError(Exception):
    """Base class for every error raised by this package."""


class DegenerateDenominator(PolarizerError, ArithmeticError):
    pass


class InvalidAmplitudes(PolarizerError, ValueError):
    pass


class IndeterminateFidelity(PolarizerError, ArithmeticError):
    pass


class SingularSystem(PolarizerError, ArithmeticError):
    pass


class UnknownPreset(PolarizerError, KeyError):
    pass


class InsufficientSamples(PolarizerError, ValueError):
    pass


class ConfigError(PolarizerError, ValueError):
    """Raised for malformed or invalid run configuration."""


class ParseError(ConfigError):
    def __init__(self, msg: str, line: int, column: int):
        super().__init__(f"{msg} (line {line}, column {column})")
        self.line = line
        self.column = column


class ValidationError(ConfigError):
    def __init__(self, key: str, msg: str):
        super().__init__(f"{key}: {msg}")
        self.key = key
