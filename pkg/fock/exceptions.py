class DepthBoundError(ValueError):
    ...


class CreatorIndexError(ValueError):
    ...


class FockBranchingFactorMismatchError(ValueError):
    ...


class NotCoherentError(ValueError):
    def __init__(self, word, message=None):
        self.word = word
        super().__init__(message or word)


class VectorFormatError(ValueError):
    def __init__(self, line_number, message=None):
        self.line_number = line_number
        super().__init__(message or line_number)
