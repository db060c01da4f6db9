"""Exception hierarchy.

Everything raised on bad user input derives from :class:`ValidationError`
(itself a :class:`ValueError`), so callers can catch a single type.
"""


class ValidationError(ValueError):
    """An argument violates a documented precondition."""


class MaterialNotFoundError(KeyError, ValidationError):
    """Material name is not in the catalog."""

    def __str__(self):
        return str(self.args[0]) if self.args else ""


class SwitchConflictError(ValidationError):
    """A coil's switches are set to a physically contradictory state."""


class NoPathError(ValidationError):
    """No conducting path connects the IN and OUT terminals."""


class SingularNetworkError(ValidationError):
    """The node equations of an inductor network cannot be solved."""


class CalibrationError(ValidationError):
    """No positive beam dimension reproduces the requested frequency."""


class BiasUnstableError(ValidationError):
    """Bias voltage is at or above pull-in, so there is no stable operating point."""
