"""Published reference counts used to check reproduced statistics.

Keys: ``"full"`` / ``"lowhalf"`` arithmetic mode, then operand width.
"""

# Minterm disjunctions of the full DNF of a w x w block.
BLOCK_DNF = {
    "full": {2: 14, 3: 111, 4: 678, 5: 3733, 6: 18953, 7: 92334, 8: 434660},
    "lowhalf": {2: 10, 3: 68, 4: 392, 5: 2064, 6: 10272, 7: 49216, 8: 229504},
}

# Disjunctions after minimization (published tool output, not a strict minimum).
BLOCK_MINIMIZED = {
    "full": {2: 8, 3: 40, 4: 160, 5: 629, 6: 2435, 7: 9194, 8: 38957},
    "lowhalf": {2: 5, 3: 14, 4: 44, 5: 143, 6: 511, 7: 1881, 8: 6916},
}

# (common-case adders, adders after concatenation) of n x n multipliers.
ADDERS = {
    "full": {8: (3, 2), 10: (3, 2), 12: (19, 10), 14: (15, 6), 16: (25, 6), 18: (25, 8),
             20: (15, 6), 22: (35, 10), 24: (35, 10), 26: (48, 12), 28: (48, 12),
             30: (35, 10), 32: (63, 14)},
    "lowhalf": {8: (2, 2), 10: (2, 2), 12: (5, 4), 14: (9, 6), 16: (10, 6), 18: (14, 6),
                20: (9, 6), 22: (21, 10), 24: (21, 10), 26: (27, 12), 28: (28, 12),
                30: (21, 10), 32: (35, 21)},
}

# Rows whose published value cannot come out of the stated construction.
KNOWN_DISCREPANCIES = {
    ("adders", "full", 12, "common"): "k*k-1 is 8 for m=4 (k=3); no m in 3..5 gives 19",
    ("adders", "full", 16, "common"): "k*k-1 is 15 for m=4 (k=4); no m in 3..5 gives 25",
    ("adders", "full", 18, "common"): "k*k-1 is 24 for m=4 (k=5); no m in 3..5 gives 25",
    ("adders", "lowhalf", 16, "common"): "10 surviving terms for m=4, 9 adders",
    ("adders", "lowhalf", 22, "common"): "21 surviving terms for m=4, 20 adders",
    ("adders", "lowhalf", 24, "common"): "21 surviving terms for m=4, 20 adders",
    ("adders", "lowhalf", 28, "common"): "28 surviving terms for m=4, 27 adders",
    ("adders", "lowhalf", 30, "common"): "21 surviving terms for m=5, 20 adders",
    ("adders", "lowhalf", 18, "reduced"): (
        "nine terms overlap result bits 16-17, so any two-input adder network needs 8"),
}

MINIMIZED_TOLERANCE = 1.5
