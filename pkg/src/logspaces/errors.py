"""Exception types shared across the package."""


class LogSpaceError(ValueError):
    """Domain error: invalid construction or an operation outside its contract."""


class WorkspaceError(LogSpaceError):
    """Workspace file rejected; the message is field-addressed (no partial acceptance)."""

    def __init__(self, path: str, message: str):
        self.path = path
        super().__init__(f"{path}: {message}" if path else message)
