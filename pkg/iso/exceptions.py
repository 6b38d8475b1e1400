class PhiLevelError(ValueError):
    ...


class UnknownSuiteError(ValueError):
    def __init__(self, suite, message=None):
        self.suite = suite
        super().__init__(message or suite)


class SuiteDepthError(ValueError):
    def __init__(self, depth, message=None):
        self.depth = depth
        super().__init__(message or depth)
