"""
Parser evaluation
"""

from .attachment import EvalResult, attachment_scores, merge_results, sentence_scores, universal_deprel

__all__ = [
    "EvalResult",
    "attachment_scores",
    "sentence_scores",
    "merge_results",
    "universal_deprel",
]
