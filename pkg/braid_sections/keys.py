"""This module holds constants for keys, status strings and names shared between modules.

It exists because it is easier to ensure consistent string values by using constants instead of raw strings.
This also means typos are easier to correct.
"""

# verdict keys
CLAIM = "claim"
STATUS = "status"
WITNESS = "witness"
TIMING = "timing"
VERIFIED = "verified"

# verdict statuses
STATUS_VERIFIED = "verified"
STATUS_REFUTED = "refuted"
STATUS_INCONCLUSIVE = "inconclusive"
STATUS_ERROR = "error"

# obstruction verdicts
NO_SECTION = "NoSection"
INCONCLUSIVE = "Inconclusive"

# curve JSON keys
N = "n"
TYPE = "type"
SUBSET = "subset"
BASE = "base"
CONJUGATOR = "conjugator"
COORDS = "coords"
ROUND = "round"
IMAGE = "image"

# section spec JSON keys
KIND = "kind"
K = "k"
WEIGHTS = "weights"
I = "i"
J = "j"
W = "w"
NEAR_K = "near_k"
INFINITY = "infinity"

# cohomology JSON keys
G = "g"
FSTAR = "fstar"
MATRIX = "matrix"
OMEGA = "omega"
PRESET = "preset"
CASE_1A = "case1a"
CASE_1B = "case1b"
CASE_2 = "case2"

# configuration JSON keys
SPACE = "space"
POINTS = "points"
PLANE = "plane"
SPHERE = "sphere"

# lantern presets
LANTERN_SUBCASE3 = "paper-subcase3"
LANTERN_CASE1 = "paper-case1"
LANTERN_CASE3 = "paper-case3"

# cohomology symbols for a single surface factor
ONE = "1"
TOP = "w"
A_PREFIX = "a"
B_PREFIX = "b"

# floating point geometry
UNIT_TOLERANCE = 1e-12

# exit codes
EXIT_OK = 0
EXIT_REFUTED = 1
EXIT_USAGE = 2
