class LevelError(ValueError):
    ...


class FunctionBranchingFactorMismatchError(ValueError):
    ...


class GeneralizedFunctionDepthError(ValueError):
    ...


class TestFunctionFormatError(ValueError):
    __test__ = False

    def __init__(self, line_number, message=None):
        self.line_number = line_number
        super().__init__(message or line_number)
