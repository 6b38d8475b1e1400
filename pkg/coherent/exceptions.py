class DepthTooSmallError(ValueError):
    ...


class StateBranchingFactorMismatchError(ValueError):
    ...


class CascadeViolationError(ValueError):
    def __init__(self, words, message=None):
        self.words = words
        super().__init__(message or words)


class PairingStabilizationError(ArithmeticError):
    ...


class ThresholdError(ValueError):
    def __init__(self, lambda2, message=None):
        self.lambda2 = lambda2
        super().__init__(message or lambda2)


class DiskCoefficientsFormatError(ValueError):
    def __init__(self, line_number, message=None):
        self.line_number = line_number
        super().__init__(message or line_number)
