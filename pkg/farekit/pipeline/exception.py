class InvariantPipelineError(Exception):
    """
    Raised when the invariant pipeline is used in an incorrect internal state,
    e.g. computing before the biquandle or the fare is given.
    """
    def __init__(self, message: str):
        super().__init__(message)
