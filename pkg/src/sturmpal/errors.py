"""Exception types raised across the package."""


class SturmpalError(Exception):
    """Base class for all package errors."""


class InvalidPair(SturmpalError, ValueError):
    """A parameter pair violates |p - p'| = 1 or p, p' >= 1."""

    def __init__(self, message, index=None):
        self.index = index
        if index is not None:
            message = f"pair {index}: {message}"
        super().__init__(message)


class ParseError(SturmpalError, ValueError):
    """Malformed defining-sequence text; ``index`` is the 1-based pair index."""

    def __init__(self, message, index=None):
        self.index = index
        if index is not None:
            message = f"pair {index}: {message}"
        super().__init__(message)


class NotBlockComplete(SturmpalError, ValueError):
    """The word is not a concatenation of full blocks a^p b / a^p' b."""


class SizeLimitExceeded(SturmpalError):
    """A word would exceed the configured length cap."""

    def __init__(self, needed, cap):
        self.needed = needed
        self.cap = cap
        super().__init__(f"length {needed} exceeds cap {cap}")


class NotAPalindrome(SturmpalError, ValueError):
    pass


class InsufficientContext(SturmpalError):
    """A classification needs letters beyond the end of the word."""


class OutOfRange(SturmpalError, IndexError):
    pass
