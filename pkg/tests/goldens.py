"""Golden census data: published distribution tables for q = 3, 5, 7, 11.

Each entry maps a degree to the per-discriminant counts indexed by encoding
0..q-1 (column layout; irreducible tables carry 0 at encoding 0).
"""

TABLE_ALL = {
    3: {m: [3 ** (m - 1)] * 3 for m in range(2, 11)},
    5: {
        2: [5] * 5,
        3: [25] * 5,
        4: [125, 95, 165, 85, 155],
        5: [625, 475, 825, 425, 775],
        6: [3125] * 5,
        7: [15625] * 5,
        8: [78125, 76375, 72125, 84125, 79875],
        9: [390625, 381875, 360625, 420625, 399375],
        10: [1953125] * 5,
    },
    7: {
        2: [7] * 7,
        3: [49, 56, 14, 21, 77, 84, 42],
        4: [343, 392, 98, 147, 539, 588, 294],
        5: [2401] * 7,
        6: [16807, 12845, 16835, 13195, 20741, 15463, 21763],
        7: [117649, 89915, 117845, 92365, 145187, 108241, 152341],
        8: [823543] * 7,
        9: [5764801, 5428661, 6386660, 6050520, 5479082, 5142942, 6100941],
        10: [40353607, 38000627, 44706620, 42353640, 38353574, 36000594, 42706587],
    },
    11: {
        2: [11] * 11,
        3: [121] * 11,
        4: [1331] * 11,
        5: [14641, 13662, 14190, 15917, 14542, 13992, 15290, 14740, 13365, 15092, 15620],
        6: [161051, 150282, 156090, 175087, 159962, 153912, 168190, 162140, 147015,
            166012, 171820],
        7: [1771561] * 11,
        8: [19487171] * 11,
        9: [214358881] * 11,
    },
}

TABLE_IRR = {
    3: {
        2: [0, 0, 3],
        3: [0, 8, 0],
        4: [0, 0, 18],
        5: [0, 48, 0],
        6: [0, 0, 116],
        7: [0, 312, 0],
        8: [0, 0, 810],
        9: [0, 2184, 0],
        10: [0, 0, 5880],
    },
    5: {
        2: [0, 0, 5, 5, 0],
        3: [0, 20, 0, 0, 20],
        4: [0, 0, 95, 55, 0],
        5: [0, 240, 0, 0, 384],
        6: [0, 0, 1290, 1290, 0],
        7: [0, 5580, 0, 0, 5580],
        8: [0, 0, 22575, 26175, 0],
        9: [0, 105240, 0, 0, 111760],
        10: [0, 0, 488124, 488124, 0],
    },
    7: {
        2: [0, 0, 0, 7, 0, 7, 7],
        3: [0, 42, 14, 0, 56, 0, 0],
        4: [0, 0, 0, 84, 0, 336, 168],
        5: [0, 1120, 1120, 0, 1120, 0, 0],
        6: [0, 0, 0, 5131, 0, 6034, 8379],
        7: [0, 29952, 39312, 0, 48384, 0, 0],
        8: [0, 0, 0, 240100, 0, 240100, 240100],
    },
    11: {
        2: [0, 0, 11, 0, 0, 0, 11, 11, 11, 0, 11],
        3: [0, 88, 0, 88, 88, 88, 0, 0, 0, 88, 0],
        4: [0, 0, 726, 0, 0, 0, 726, 726, 726, 0, 726],
        5: [0, 6050, 0, 6952, 6402, 6182, 0, 0, 0, 6622, 0],
        6: [0, 0, 57200, 0, 0, 0, 61600, 59400, 53900, 0, 62920],
        7: [0, 556776, 0, 556776, 556776, 556776, 0, 0, 0, 556776, 0],
        8: [0, 0, 5358606, 0, 0, 0, 5358606, 5358606, 5358606, 0, 5358606],
        9: [0, 52398808, 0, 52398808, 52398808, 52398808, 0, 0, 0, 52398808, 0],
    },
}


def _check_sums():
    for q, cols in TABLE_ALL.items():
        for m, counts in cols.items():
            assert len(counts) == q
            assert sum(counts) == q**m, (q, m)


_check_sums()
