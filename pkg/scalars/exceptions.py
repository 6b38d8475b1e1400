class ScalarDivisionByZeroError(ZeroDivisionError):
    ...


class ScalarPoleError(ZeroDivisionError):
    def __init__(self, point, message=None):
        self.point = point
        super().__init__(message or point)


class ScalarNotConstantError(ValueError):
    ...


class ScalarLiteralError(ValueError):
    def __init__(self, literal, message=None):
        self.literal = literal
        super().__init__(message or literal)


class OddPowerError(ValueError):
    ...


class SeriesMismatchError(ValueError):
    ...


class SeriesRebaseError(ValueError):
    ...
