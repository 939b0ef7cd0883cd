"""
Exception hierarchy shared by every layer of LinTagLab
"""

from typing import Optional


class LinTagLabError(Exception):
    """Base class for all LinTagLab errors"""


class DataError(LinTagLabError):
    """Input data could not be used (CLI exit code 2)"""


class ConlluParseError(DataError):
    """A CoNLL-U line is malformed"""

    def __init__(self, line_no: int, message: str):
        self.line_no = line_no
        super().__init__(f"line {line_no}: {message}")


class TreeValidationError(DataError):
    """Head assignment of a sentence is not a rooted tree"""

    def __init__(self, message: str, sentence_index: Optional[int] = None, token_index: Optional[int] = None):
        self.message = message
        self.sentence_index = sentence_index
        self.token_index = token_index
        where = []
        if sentence_index is not None:
            where.append(f"sentence {sentence_index}")
        if token_index is not None:
            where.append(f"token {token_index}")
        prefix = f"{', '.join(where)}: " if where else ""
        super().__init__(f"{prefix}{message}")


class NotProjectiveError(DataError):
    """Arc-hybrid can only linearize projective trees"""

    def __init__(self, sentence_index: Optional[int] = None):
        self.sentence_index = sentence_index
        where = f"sentence {sentence_index}: " if sentence_index is not None else ""
        super().__init__(f"{where}not projective")


class LabelError(DataError):
    """Malformed label or label sequence"""


class AlignmentError(DataError):
    """Two treebanks (or a treebank and a tag sequence) are not aligned"""


class NoErrorEvidenceError(DataError):
    """The error model cannot propose the requested number of errors"""


class ConfigError(DataError):
    """Invalid sweep configuration"""


class ToleranceError(LinTagLabError):
    """Corruption missed the E_A tolerance after every reseeded attempt (CLI exit code 3)"""

    def __init__(self, target_accuracy: float, best_accuracy: float, attempts: int):
        self.target_accuracy = target_accuracy
        self.best_accuracy = best_accuracy
        self.attempts = attempts
        super().__init__(
            f"could not reach accuracy {target_accuracy:.4f} within tolerance after "
            f"{attempts} attempts (best achieved {best_accuracy:.4f})"
        )
