"""Error types shared across the package."""


class BCallError(Exception):
    """Base error."""


class DataError(BCallError, ValueError):
    """Input data cannot be analyzed as given.

    Raised for unknown cast tokens, duplicate casts, unparseable dates,
    missing group labels and similar problems with the data itself.
    """

    def __init__(self, message: str, period: str | None = None):
        self.message = message
        self.period = period
        super().__init__(f"[{period}] {message}" if period else message)

    def with_period(self, period: str) -> "DataError":
        """Return a copy carrying period context."""
        if self.period:
            return self
        return DataError(self.message, period=period)


class ConfigError(BCallError, ValueError):
    """Invalid configuration value or command-line flag."""
