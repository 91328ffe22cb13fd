"""Exception hierarchy."""


class ShirshovError(Exception):
    pass


class AlphabetMismatchError(ShirshovError, ValueError):
    pass


class ParseError(ShirshovError, ValueError):
    def __init__(self, message, location=None):
        super().__init__(message if location is None else f"{location}: {message}")
        self.location = location


class ZeroPolynomialError(ShirshovError, ValueError):
    pass


class NonMonicError(ShirshovError, ValueError):
    pass


class NotClosedError(ShirshovError, ValueError):
    """Raised when an operation needs a Groebner-Shirshov basis and gets something else."""


class NotALSWError(ShirshovError, ValueError):
    pass


class NoEliminationError(ShirshovError, ValueError):
    pass


class NotALieElementError(ShirshovError, ValueError):
    def __init__(self, word, message=None):
        super().__init__(message or f"residual leading word {word} is not an ALSW")
        self.word = word


class InfiniteULError(ShirshovError):
    def __init__(self, relation, message=None):
        super().__init__(message or f"U_L is not finite for relation {relation}")
        self.relation = relation


class InternalContradictionError(ShirshovError, AssertionError):
    pass
