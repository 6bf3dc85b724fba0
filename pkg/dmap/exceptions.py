from fractions import Fraction


class DMapError(Exception):
    def __init__(self, details: str):
        self.details = details
        super().__init__(details)


class InvalidBaseError(DMapError):
    def __init__(self, base: int):
        self.base = base
        super().__init__(f"base must be an integer >= 2, got {base}")


class InvalidDigitError(DMapError):
    def __init__(self, digit: int, base: int):
        self.digit = digit
        self.base = base
        super().__init__(f"digit {digit} is not valid in base {base}")


class NotPrimitiveError(DMapError):
    def __init__(self, word: str):
        self.word = word
        super().__init__(f"word {word} has a proper period")


class NotACycleError(DMapError):
    def __init__(self, details: str, point: Fraction = None):
        self.point = point
        super().__init__(details)


class NotAPrecycleError(NotACycleError):
    pass


class NoCrossingError(DMapError):
    pass


class DegenerateMapError(DMapError):
    pass


class InvalidMapError(DMapError):
    pass


class InsufficientPaddingError(DMapError):
    def __init__(self, pad: int, required: int):
        self.pad = pad
        self.required = required
        super().__init__(f"block length {pad} is too small, it must be at least {required}")


class UnsupportedDegenerateError(DMapError):
    pass


class InvalidInputError(DMapError):
    pass


class InsufficientDataError(DMapError):
    pass


class WorkLimitExceededError(DMapError):
    def __init__(self, base: int, n: int, limit: int):
        self.base = base
        self.n = n
        self.limit = limit
        super().__init__(f"{base}^{n} candidate words exceed the work limit of {limit}")


class CensusMismatchError(DMapError):
    def __init__(self, base: int, n: int, found: int, expected: int):
        self.base = base
        self.n = n
        self.found = found
        self.expected = expected
        super().__init__(f"census d={base} n={n} found {found} cycles, necklace count is {expected}")
