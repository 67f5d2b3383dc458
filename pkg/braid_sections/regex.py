"""This module holds constants for compiled regular expressions to be used in other modules.

Braid words, rationals and index pairs arrive as text from the command line and from JSON
documents, so every accepted textual format is described once here.
"""
import re


# used in braid_core.py
LETTER_STR = r"[+-]?[1-9]\d*"
LETTERS_STR = rf"\s*({LETTER_STR}(\s+{LETTER_STR})*)?\s*"
LETTERS_PATTERN = re.compile(LETTERS_STR)

# the name inside the < and > must match the keyword used by BraidWord.fromstring()
MATCH_STRANDS = r"(?P<strands>\d+)"
MATCH_LETTERS = f"(?P<letters>{LETTERS_STR})"

WORD_HEADER_PATTERN = re.compile(rf"\s*n\s*=\s*{MATCH_STRANDS}\s*;{MATCH_LETTERS}")


# used in parsing.py
INTEGER_STR = r"[+-]?\d+"
INTEGER_PATTERN = re.compile(INTEGER_STR)

MATCH_NUMERATOR = rf"(?P<numerator>{INTEGER_STR})"
MATCH_DENOMINATOR = r"(?P<denominator>[1-9]\d*)"

RATIONAL_PATTERN = re.compile(rf"\s*{MATCH_NUMERATOR}(\s*/\s*{MATCH_DENOMINATOR})?\s*")


# used in cohomology.py
SYMBOL_PATTERN = re.compile(r"(?P<kind>[ab])(?P<index>[1-9]\d*)")
