class StateSpecError(ValueError):
    def __init__(self, spec, message=None):
        self.spec = spec
        super().__init__(message or spec)


class NotInXSpanError(ValueError):
    def __init__(self, spec, message=None):
        self.spec = spec
        super().__init__(message or spec)


class LambdaLiteralError(ValueError):
    def __init__(self, literal, message=None):
        self.literal = literal
        super().__init__(message or literal)


class EpsGridError(ValueError):
    def __init__(self, value, message=None):
        self.value = value
        super().__init__(message or value)


class GramSizeError(ValueError):
    ...
