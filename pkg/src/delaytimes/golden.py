"""Published reference values, transcribed literally.

Nothing here is computed at import time.  Polynomials are ascending
coefficient lists; rational functions keep their printed factorized
denominators.
"""
from __future__ import annotations

# --- finite-N moments tau_k(N) ----------------------------------------------
# each entry: (numerator coefficients, [denominator factors])

_Nsq_minus = lambda j: [-(j * j), 0, 1]  # noqa: E731  N^2 - j^2
_lin = lambda r: [-r, 1]  # noqa: E731  N - r

MOMENTS = {
    2: {
        2: ([0, 0, 2], [_Nsq_minus(1)]),
        3: ([0, 0, 0, 0, 6], [_Nsq_minus(2), _Nsq_minus(1)]),
        4: ([0, 0, 0, 0, 2, 0, 22], [_Nsq_minus(3), _Nsq_minus(2), _Nsq_minus(1)]),
        5: ([0, 0, 0, 0, 0, 0, 30, 0, 90], [_Nsq_minus(4), _Nsq_minus(3), _Nsq_minus(2), _Nsq_minus(1)]),
        6: (
            [0, 0, 0, 0, 0, 0, 16, 0, 310, 0, 394],
            [_Nsq_minus(5), _Nsq_minus(4), _Nsq_minus(3), _Nsq_minus(2), _Nsq_minus(1)],
        ),
    },
    1: {
        2: ([0, 0, 2], [_lin(2), _lin(-1)]),
        3: ([0, 0, 0, 0, 6], [_lin(4), _lin(2), _lin(-1), _lin(-2)]),
        4: ([0, 0, 0, 0, 0, -4, 22], [_lin(6), _lin(4), _lin(2), _lin(-1), _lin(-2), _lin(-3)]),
        5: (
            [0, 0, 0, 0, 0, 0, 0, -60, 90],
            [_lin(8), _lin(6), _lin(4), _lin(2), _lin(-1), _lin(-2), _lin(-3), _lin(-4)],
        ),
        6: (
            [0, 0, 0, 0, 0, 0, -64, -184, -48, -998, 394],
            [_lin(10), _lin(8), _lin(6), _lin(4), _lin(3), _lin(-1), _lin(-2), _lin(-3), _lin(-4), _lin(-5)],
        ),
    },
}

# --- expansion coefficients tau_{k,g}, rows k = 0..8, columns g = 0..6 ------

TABLE_BETA2 = [
    [1, 0, 0, 0, 0, 0, 0],
    [1, 0, 0, 0, 0, 0, 0],
    [2, 0, 2, 0, 2, 0, 2],
    [6, 0, 30, 0, 126, 0, 510],
    [22, 0, 310, 0, 3262, 0, 31270],
    [90, 0, 2730, 0, 57330, 0, 1048410],
    [394, 0, 21980, 0, 805854, 0, 24848560],
    [1806, 0, 167076, 0, 9781002, 0, 468660192],
    [8558, 0, 1220100, 0, 106963626, 0, 7510405760],
]

TABLE_BETA1 = [
    [1, 0, 0, 0, 0, 0, 0],
    [1, 0, 0, 0, 0, 0, 0],
    [2, 2, 6, 10, 22, 42, 86],
    [6, 18, 102, 378, 1638, 6426, 26214],
    [22, 128, 1142, 7048, 47454, 291696, 1821094],
    [90, 840, 10650, 96000, 904530, 7786680, 66945450],
    [394, 5306, 89576, 1092460, 13529862, 152881422, 1704027412],
    [1806, 32802, 705012, 11060700, 172576362, 2451889734, 34038711504],
    [8558, 200064, 5297924, 103150528, 1966038698, 34052988736, 572050771840],
]

TABLES = {2: TABLE_BETA2, 1: TABLE_BETA1}

# --- polynomial families -----------------------------------------------------

R_POLYS = {
    2: [0, 0, 2],
    4: [0, 0, 2, 60, 6, -24, 16],
    6: [0, 0, 2, 408, 7572, 12600, -14110, 4464, -304, -96, 360],
    8: [0, 0, 2, 1908, 152298, 2426400, 7652766, -3243996, -5754378, 5724216, -2210472, 413136, -64776, 46656,
        16128],
    10: [0, 0, 2, 8016, 1927176, 98620176, 1479326572, 6426673488, 2587036584, -11252766096, 5092739154,
         2088897408, -2988047424, 1396450368, -351879792, 34986528, 936576, 9106560, 1209600],
}

P_POLYS = {
    2: [2],
    3: [6],
    4: [22, 2],
    5: [90, 30],
    6: [394, 310, 16],
    7: [1806, 2730, 504],
    8: [8558, 21980, 9422, 360],
    9: [41586, 167076, 135954, 18264],
}

# F_g^(1) as printed: sum of terms scale * z^zpow * poly(z) * y^ypow,
# with ypow given as (numerator, denominator).
F1_PRINTED = {
    0: [((1, 2), 0, [3, -1], (0, 1)), ((-1, 2), 0, [1], (1, 2))],
    1: [((1, 2), 0, [1, -3], (-1, 1)), ((-1, 2), 0, [1], (-1, 2))],
    2: [((1, 1), 0, [0, -3, 1], (-2, 1)), ((1, 1), 0, [0, 3, -4, 3], (-5, 2))],
    3: [((-2, 1), 1, [3, 19, -9, 2], (-7, 2)), ((-2, 1), 1, [-3, -15, 9, -5, 6], (-4, 1))],
    4: [
        ((2, 1), 0, [0, 6, 163, 216, -219, 24, 20, 36], (-11, 2)),
        ((2, 1), 0, [0, -6, -134, 720, 1840, -1830, 618, -132, 12], (-6, 1)),
    ],
    5: [
        ((-2, 1), 1, [12, 979, 8214, 3089, -7068, 2992, -456, 96], (-13, 2)),
        ((-2, 1), 1, [-12, -964, -7560, -1312, 6276, -2916, -336, 776, 288], (-7, 1)),
    ],
    6: [
        ((2, 1), 0, [0, 24, 4699, 100650, 329334, -186156, -121877, 139938, -53360, -3552, 15588, 2880], (-17, 2)),
        ((2, 1), 0, [0, -24, -4584, -75672, 250584, 2243256, -1012248, -981480, 997768, -373248, 62944, -9504,
                     960], (-9, 1)),
    ],
}

# Series coefficients z^0..z^12 of the printed F_g^(1), frozen so that the
# comparison does not depend on re-expanding the printed closed forms.
F1_SERIES = {
    0: [1, 1, 2, 6, 22, 90, 394, 1806, 8558, 41586, 206098, 1037718, 5293446],
    1: [0, 0, 2, 18, 128, 840, 5306, 32802, 200064, 1209168, 7261042, 43394802, 258401216],
    2: [0, 0, 6, 102, 1142, 10650, 89576, 705012, 5297924, 38478492, 272262050, 1887071274, 12862479402],
    3: [0, 0, 10, 378, 7048, 96000, 1092460, 11060700, 103150528, 905077728, 7576640950, 61098854454,
        477942694136],
    4: [0, 0, 22, 1638, 47454, 904530, 13529862, 172576362, 1966038698, 20583987894, 201838423616,
        1878183167916, 16744919877108],
    5: [0, 0, 42, 6426, 291696, 7786680, 152881422, 2451889734, 34052988736, 424606263984, 4868397305884,
        52193110266396, 529596113392928],
    6: [0, 0, 86, 26214, 1821094, 66945450, 1704027412, 34038711504, 572050771840, 8443921227936,
        112644843054780, 1385543912313132, 15943946323796556],
}
F1_SERIES_ORDER = 12
