"""Exception types shared by the JaxKin sub-packages"""


class ConfigurationError(ValueError):
    """Raised when a user supplied configuration cannot be turned into a run"""


class NumericalFailure(RuntimeError):
    """Raised when a step produces non-finite values or an implicit solve fails

    Args:
        message (str): Description of the failure
        time (float, optional): Simulation time at which the failure happened
        stage (int, optional): IMEX stage index, when relevant
    """

    def __init__(self, message: str, time: float = None, stage: int = None):
        details = []
        if time is not None:
            details.append(f"t={time:.6g}")
        if stage is not None:
            details.append(f"stage={stage}")
        suffix = f" ({', '.join(details)})" if details else ""
        super().__init__(message + suffix)
        self.time = time
        self.stage = stage


class TableauClassificationError(ValueError):
    """Raised when a double Butcher tableau is neither of type A nor of type CK"""
