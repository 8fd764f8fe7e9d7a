"""Exception types raised by the cogsim library.

``DataError`` subclasses signal problems with user-supplied data (missing
files, malformed rows, words the loaded data cannot support); the CLI maps
them to exit code 3. Remaining ``CogsimError`` subclasses are computation
contract violations, mapped to exit code 4.
"""


class CogsimError(Exception):
    """Base class for all cogsim errors."""


class DataError(CogsimError):
    """Input data is missing, malformed, or insufficient."""


class MissingFile(DataError):
    pass


class MalformedRow(DataError):
    def __init__(self, line_no: int, message: str):
        self.line_no = line_no
        super().__init__(f"line {line_no}: {message}")


class DuplicateWord(DataError):
    def __init__(self, word: str):
        self.word = word
        super().__init__(f"duplicate word after case folding: {word!r}")


class EmptyDictionary(DataError):
    pass


class PercentSumOutOfTolerance(DataError):
    def __init__(self, line_no: int, total: float):
        self.line_no = line_no
        self.total = total
        super().__init__(
            f"line {line_no}: percentages sum to {total:g}, outside [96.5, 103.5]"
        )


class InvalidWord(DataError):
    def __init__(self, word: str):
        self.word = word
        super().__init__(f"not a 5-letter lowercase a-z word: {word!r}")


class TargetNotInDictionary(DataError):
    def __init__(self, word: str):
        self.word = word
        super().__init__(f"target word not in dictionary: {word!r}")


class WordNotInDictionary(DataError):
    def __init__(self, word: str):
        self.word = word
        super().__init__(f"word not in dictionary: {word!r}")


class BaselineUnavailable(DataError):
    pass


class TooFewRecords(DataError):
    pass


class InvalidDistribution(CogsimError):
    pass


class LengthMismatch(CogsimError):
    pass


class InfeasibleRange(CogsimError):
    pass
