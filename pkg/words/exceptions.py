class InvalidBranchingFactorError(ValueError):
    ...


class WordDigitOutOfRangeError(ValueError):
    ...


class PrefixLengthOutOfRangeError(ValueError):
    ...


class BranchingFactorMismatchError(ValueError):
    ...


class InsufficientResolutionError(ValueError):
    ...


class WordLiteralError(ValueError):
    def __init__(self, literal, message=None):
        self.literal = literal
        super().__init__(message or literal)


class WordLengthError(ValueError):
    def __init__(self, length, message=None):
        self.length = length
        super().__init__(message or length)
