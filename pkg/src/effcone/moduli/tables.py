"""Embedded class tables for M_{0,6} in the curve basis.

Rows are coordinates in the dual basis ``L^2, E_1^2..E_5^2, -LE_12..-LE_45``.
These are canonical data; everything computed elsewhere is checked against
them.
"""

# fiber classes of the two rulings of each D_ijk
B_TABLE = {
    "B_126": (0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0),
    "B_136": (0, 0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0),
    "B_146": (0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0),
    "B_156": (0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 0),
    "B_236": (0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0),
    "B_246": (0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0),
    "B_256": (0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0, 0),
    "B_346": (0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0),
    "B_356": (0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0),
    "B_456": (0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1),
    "B_123": (1, 0, 0, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1),
    "B_124": (1, 0, 0, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0),
    "B_125": (1, 0, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0),
    "B_134": (1, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0, -1, 0, 0, 0),
    "B_135": (1, 0, 1, 0, 1, 0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0),
    "B_145": (1, 0, 1, 1, 0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0),
    "B_234": (1, 1, 0, 0, 0, 1, 0, 0, 0, -1, 0, 0, 0, 0, 0, 0),
    "B_235": (1, 1, 0, 0, 1, 0, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0),
    "B_245": (1, 1, 0, 1, 0, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0),
    "B_345": (1, 1, 1, 0, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0),
}

# forgetting-map classes on the D_ij, node forgotten
A_TABLE = {
    "A_12": (1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 1, 1),
    "A_13": (1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 1, 1, 0, 0, 1),
    "A_14": (1, 0, 0, 0, 0, 0, 0, 0, 1, 0, 1, 0, 1, 0, 1, 0),
    "A_15": (1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 0, 1, 0, 0),
    "A_16": (0, -2, 0, 0, 0, 0, 1, 1, 1, 1, 0, 0, 0, 0, 0, 0),
    "A_23": (1, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 0, 0, 0, 0, 1),
    "A_24": (1, 0, 0, 0, 0, 0, 0, 1, 0, 1, 0, 1, 0, 0, 1, 0),
    "A_25": (1, 0, 0, 0, 0, 0, 0, 1, 1, 0, 0, 0, 1, 1, 0, 0),
    "A_26": (0, 0, -2, 0, 0, 0, 1, 0, 0, 0, 1, 1, 1, 0, 0, 0),
    "A_34": (1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 1, 1, 0, 0),
    "A_35": (1, 0, 0, 0, 0, 0, 1, 0, 1, 0, 0, 1, 0, 0, 1, 0),
    "A_36": (0, 0, 0, -2, 0, 0, 0, 1, 0, 0, 1, 0, 0, 1, 1, 0),
    "A_45": (1, 0, 0, 0, 0, 0, 1, 1, 0, 0, 1, 0, 0, 0, 0, 1),
    "A_46": (0, 0, 0, 0, -2, 0, 0, 0, 1, 0, 0, 1, 0, 1, 0, 1),
    "A_56": (0, 0, 0, 0, 0, -2, 0, 0, 0, 1, 0, 0, 1, 0, 1, 1),
}

# forgetting-map classes on the D_ij, marked point k forgotten
A_FORGET_TABLE = {
    "A_12;3": (1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    "A_12;4": (1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0),
    "A_12;5": (1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0),
    "A_12;6": (2, 0, 0, 1, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0),
    "A_13;2": (1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    "A_13;4": (1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0),
    "A_13;5": (1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0),
    "A_13;6": (2, 0, 1, 0, 1, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0),
    "A_14;2": (1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0),
    "A_14;3": (1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0),
    "A_14;5": (1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0),
    "A_14;6": (2, 0, 1, 1, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0),
    "A_15;2": (1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0),
    "A_15;3": (1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0),
    "A_15;4": (1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0),
    "A_15;6": (2, 0, 1, 1, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0),
    "A_16;2": (0, -1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0),
    "A_16;3": (0, -1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0),
    "A_16;4": (0, -1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0),
    "A_16;5": (0, -1, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0),
    "A_23;1": (1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    "A_23;4": (1, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0),
    "A_23;5": (1, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0),
    "A_23;6": (2, 1, 0, 0, 1, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0),
    "A_24;1": (1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0),
    "A_24;3": (1, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0),
    "A_24;5": (1, 0, 0, 0, 0, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0),
    "A_24;6": (2, 1, 0, 1, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0),
    "A_25;1": (1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0),
    "A_25;3": (1, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0),
    "A_25;4": (1, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0),
    "A_25;6": (2, 1, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0),
    "A_26;1": (0, 0, -1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0),
    "A_26;3": (0, 0, -1, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0),
    "A_26;4": (0, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0),
    "A_26;5": (0, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0),
    "A_34;1": (1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0),
    "A_34;2": (1, 0, 1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0),
    "A_34;5": (1, 0, 0, 0, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0),
    "A_34;6": (2, 1, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0),
    "A_35;1": (1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0),
    "A_35;2": (1, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0),
    "A_35;4": (1, 0, 0, 0, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0),
    "A_35;6": (2, 1, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0),
    "A_36;1": (0, 0, 0, -1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0),
    "A_36;2": (0, 0, 0, -1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0),
    "A_36;4": (0, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0),
    "A_36;5": (0, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0),
    "A_45;1": (1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0),
    "A_45;2": (1, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0),
    "A_45;3": (1, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0),
    "A_45;6": (2, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    "A_46;1": (0, 0, 0, 0, -1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0),
    "A_46;2": (0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0),
    "A_46;3": (0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0),
    "A_46;5": (0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    "A_56;1": (0, 0, 0, 0, 0, -1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0),
    "A_56;2": (0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0),
    "A_56;3": (0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0),
    "A_56;4": (0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1),
}

# the ten generators of the nef-curve cone of D_45 pushed into M_{0,6}
D45_TABLE = {
    "A_45": (1, 0, 0, 0, 0, 0, 1, 1, 0, 0, 1, 0, 0, 0, 0, 1),
    "A_45;1": (1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0),
    "A_45;2": (1, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0),
    "A_45;3": (1, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0),
    "A_45;6": (2, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    "C_45;6": (1, 0, 0, 0, 0, 0, 1, 1, 0, 0, 1, 0, 0, 0, 0, 0),
    "C_45;1": (2, 0, 1, 1, 0, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 1),
    "C_45;2": (2, 1, 0, 1, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0, 1),
    "C_45;3": (2, 1, 1, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 1),
    "C_45": (2, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
}

# (index, anticanonical degree, orbit size, representative)
COEXTREMAL_TABLE = (
    (1, 2, 1, (3, 0, 0, 0, 0, 0, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1)),
    (2, 2, 6, (1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0)),
    (3, 2, 15, (2, 0, 0, 0, 0, 0, 0, 0, 1, 1, 0, 1, 1, 1, 1, 0)),
    (4, 2, 45, (1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 0, 0)),
    (5, 3, 60, (1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1)),
    (6, 3, 72, (2, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 0, 1, 1, 0, 0)),
    (7, 3, 120, (2, 0, 0, 0, 0, 1, 0, 0, 0, 1, 0, 1, 0, 1, 0, 0)),
    (8, 3, 120, (2, 0, 0, 0, 0, 1, 0, 0, 1, 0, 1, 0, 0, 1, 0, 0)),
    (9, 3, 180, (2, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 1, 1, 1, 1, 0)),
    (10, 4, 6, (1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0)),
    (11, 4, 10, (3, 0, 0, 1, 1, 1, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0)),
    (12, 4, 30, (2, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 1, 1)),
    (13, 4, 60, (3, 0, 0, 0, 0, 0, 0, 0, 0, 2, 1, 1, 1, 1, 1, 1)),
    (14, 4, 90, (3, 0, 0, 0, 0, 1, 0, 0, 1, 1, 0, 1, 1, 2, 0, 0)),
    (15, 4, 90, (3, 0, 0, 0, 0, 2, 0, 1, 1, 0, 1, 1, 0, 0, 0, 0)),
    (16, 4, 180, (2, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 1, 0, 0)),
    (17, 4, 180, (3, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 0, 2, 2, 0, 1)),
    (18, 4, 360, (2, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 1, 0, 1)),
    (19, 4, 360, (3, 0, 0, 0, 0, 1, 0, 0, 1, 1, 1, 0, 1, 2, 0, 0)),
    (20, 4, 360, (3, 0, 0, 0, 0, 1, 0, 1, 1, 0, 1, 2, 0, 0, 1, 0)),
    (21, 5, 120, (2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 1, 1)),
    (22, 5, 360, (3, 0, 0, 0, 0, 0, 0, 0, 0, 2, 0, 1, 1, 2, 0, 1)),
    (23, 5, 360, (4, 0, 0, 0, 0, 2, 0, 1, 1, 1, 2, 2, 0, 0, 0, 0)),
    (24, 6, 360, (4, 0, 0, 0, 0, 0, 0, 0, 0, 3, 0, 2, 1, 2, 1, 1)),
    (25, 6, 360, (5, 0, 0, 0, 0, 2, 0, 1, 2, 1, 2, 3, 0, 0, 1, 0)),
)
COEXTREMAL_TOTAL = 3905

# each orbit representative as a positive combination of A, A_forget, B
DECOMPOSITIONS = {
    1: "A_15+A_13+A_35+2B_246",
    2: "A_34;5+B_126",
    3: "A_15+A_14+2B_236",
    4: "A_25+B_146+B_136",
    5: "A_23+B_146+B_156+B_236",
    6: "A_15+A_14+B_236+B_246+B_356",
    7: "A_13;5+A_15+B_236+B_246",
    8: "A_12;5+A_14+B_256+B_356",
    9: "A_24+A_34+B_126+B_136+B_156",
    10: "A_25+B_136+B_146+B_256+B_346",
    11: "A_34;5+A_35;4+A_25;3+B_146",
    12: "A_12+A_34+2B_126+2B_346",
    13: "A_15+A_14+A_23+2B_146+2B_236",
    14: "A_23;5+A_15+A_25+B_136+B_146+B_236",
    15: "A_23;5+A_24;5+A_15+B_156+B_346",
    16: "A_24;5+A_15+B_136+B_156+B_236",
    17: "A_23+2A_25+2B_136+2B_146",
    18: "A_12;3+A_34+B_126+B_136+A_36;1",
    19: "A_12;5+A_15+A_25+B_136+B_246+B_346",
    20: "A_13;5+A_35+A_45+2B_126+B_456",
    21: "A_12+A_13+B_126+B_136+B_246+B_346+B_456",
    22: "A_15+A_23+A_34+B_126+B_146+B_156+2B_236",
    23: "A_13;5+A_14;5+A_23+A_13+B_256+2B_456",
    24: "A_15+A_23+A_24+A_34+B_126+B_136+B_146+B_156+2B_236",
    25: "2A_14+A_24+2A_13;5+2B_256+2B_356",
}

# pushforward along D_345 -> M_{0,6}; columns are the images of B_126, B_345
J345_COLUMNS = (
    (0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0),
    (1, 1, 1, 0, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0),
)

# pushforward along D_45 -> M_{0,6}; columns are the images of the five
# basis curves of N_1(D_45)
J45_COLUMNS = (
    (1, 0, 0, 0, 0, 0, 1, 1, 0, 0, 1, 0, 0, 0, 0, 0),
    (0, 1, 0, 0, 0, 0, -1, -1, 0, 0, 0, 0, 0, 0, 0, 0),
    (0, 0, 1, 0, 0, 0, -1, 0, 0, 0, -1, 0, 0, 0, 0, 0),
    (0, 0, 0, 1, 0, 0, 0, -1, 0, 0, -1, 0, 0, 0, 0, 0),
    (0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1),
)
