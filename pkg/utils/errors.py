class PstlabError(Exception):
    """Base class for every error raised by the library."""


class GraphError(PstlabError, ValueError):
    pass


class EdgeListError(GraphError):
    def __init__(self, message, line_number=None):
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)
        self.line_number = line_number


class GraphSpecError(PstlabError, ValueError):
    pass


class ConvergenceError(PstlabError, ArithmeticError):
    pass


class CertificateError(PstlabError, ValueError):
    pass


class SpectrumMismatchError(CertificateError):
    pass


class VerificationError(PstlabError, AssertionError):
    def __init__(self, message, graph=None):
        super().__init__(message)
        self.graph = graph
