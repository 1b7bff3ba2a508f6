"""Previously published reference values for the efficiency tables.

Everything in this module is transcribed data, kept byte-for-byte at the
precision it was printed at. None of it feeds the estimators; it exists so the
audit in `tables` can classify each printed cell against a fresh computation.
Three things to know about the source printing:

* the per-column weights were printed to 4 decimals, and a few of them are
  outright misprints; cells computed from a misprinted weight reproduce only
  when the printed weight is substituted (the audit calls these artifacts);
* range endpoints were truncated, not rounded, in some places (6.262 appears
  as 6.25), so endpoint comparisons must accept either reading;
* a handful of entries are garbled beyond reconstruction (the pull-weight-1,
  quarter-q bias-range row) or internally inconsistent, and are stored as None
  or flagged by the audit rather than silently repaired.
"""

from __future__ import annotations

GRID_P = (-2.0, -1.0, 1.0, 2.0)
GRID_Q = (0.25, 0.5, 0.75)
GRID_M = (6, 8, 10, 12)

# nine (delta1, delta2, delta) departure rows of the efficiency table
TABLE_31_DEPARTURES = (
    (0.1, 0.2, 0.15),
    (0.4, 0.6, 0.50),
    (0.4, 1.6, 1.00),
    (1.0, 2.0, 1.50),
    (1.6, 2.4, 2.00),
    (2.0, 3.0, 2.50),
    (2.5, 3.5, 3.00),
    (3.5, 3.5, 3.50),
    (3.8, 4.2, 4.00),
)

# seven (delta1, delta2) interval rows of the truncated-estimator table
TABLE_51_INTERVALS = (
    (0.2, 0.3),
    (0.4, 0.6),
    (0.6, 0.9),
    (0.8, 1.2),
    (1.0, 1.5),
    (1.2, 1.8),
    (1.5, 2.0),
)

# weights as printed in the column headers, 4 decimals, misprints included
W_PRINTED = {
    -2.0: {6: 0.1750, 8: 0.3970, 10: 0.5369, 12: 0.6305},
    -1.0: {6: 0.7739, 8: 0.8537, 10: 0.8939, 12: 0.9180},
    1.0: {6: 0.6888, 8: 0.7737, 10: 0.8251, 12: 0.8779},
    2.0: {6: 0.3131, 8: 0.4385, 10: 0.5392, 12: 0.6816},
}

# bias of the minimum-MSE multiple, printed in the table footer
MMSE_ARB_PRINTED = {6: 0.2259, 8: 0.1463, 10: 0.1061, 12: 0.0820}

# TABLE_31[(p, q)] is a tuple of nine rows matching TABLE_31_DEPARTURES; each
# row is (pre_m6, arb_m6, pre_m8, arb_m8, pre_m10, arb_m10, pre_m12, arb_m12)
TABLE_31 = {
    (-2.0, 0.25): (
        (35.33, 0.7941, 40.20, 0.5804, 45.57, 0.4457, 50.60, 0.3556),
        (42.62, 0.7219, 47.90, 0.5276, 53.49, 0.4052, 58.53, 0.3233),
        (57.66, 0.6188, 63.18, 0.4522, 68.54, 0.3473, 72.99, 0.2771),
        (82.21, 0.5156, 86.53, 0.3769, 89.95, 0.2894, 92.27, 0.2309),
        (126.15, 0.4125, 124.06, 0.3015, 120.83, 0.2315, 117.72, 0.1847),
        (215.89, 0.3094, 187.20, 0.2261, 164.84, 0.1737, 149.86, 0.1386),
        (438.90, 0.2063, 294.12, 0.1507, 222.82, 0.1158, 186.17, 0.0924),
        (1154.45, 0.1031, 447.47, 0.0754, 282.42, 0.0579, 217.84, 0.0462),
        (2528.52, 0.0000, 541.60, 0.0000, 310.07, 0.0000, 230.93, 0.0000),
    ),
    (-2.0, 0.5): (
        (38.21, 0.7632, 43.26, 0.5577, 48.75, 0.4284, 53.81, 0.3418),
        (57.66, 0.6188, 63.18, 0.4522, 68.54, 0.3473, 72.99, 0.2771),
        (126.15, 0.4125, 124.06, 0.3015, 120.83, 0.2315, 117.72, 0.1847),
        (438.90, 0.2063, 294.12, 0.1507, 222.82, 0.1158, 186.17, 0.0924),
        (2528.5, 0.0000, 541.60, 0.0000, 310.07, 0.0000, 230.93, 0.0000),
        (438.90, 0.2063, 294.12, 0.1507, 222.82, 0.1158, 186.17, 0.0924),
        (126.15, 0.4125, 124.06, 0.3015, 120.83, 0.2315, 117.72, 0.1847),
        (57.66, 0.6188, 63.18, 0.4522, 68.54, 0.3473, 72.99, 0.2771),
        (32.76, 0.8250, 37.45, 0.6030, 42.68, 0.4631, 47.65, 0.3695),
    ),
    (-2.0, 0.75): (
        (41.45, 0.7322, 46.67, 0.5351, 52.25, 0.4110, 57.30, 0.3279),
        (82.21, 0.5156, 86.53, 0.3769, 89.95, 0.2894, 92.27, 0.2309),
        (438.90, 0.2063, 294.12, 0.1507, 222.82, 0.1158, 186.17, 0.0924),
        (1154.4, 0.1031, 447.47, 0.0754, 282.42, 0.0579, 217.84, 0.0462),
        (126.15, 0.4125, 124.06, 0.3015, 120.83, 0.2315, 117.72, 0.1847),
        (42.62, 0.7219, 47.90, 0.5276, 53.49, 0.4052, 58.53, 0.3233),
        (21.07, 1.0313, 24.58, 0.7537, 28.74, 0.5789, 32.94, 0.4619),
        (12.51, 1.3407, 14.82, 0.9798, 17.67, 0.7525, 20.70, 0.6004),
        (8.27, 1.6501, 9.87, 1.2059, 11.90, 0.9262, 14.09, 0.7390),
    ),
    (-1.0, 0.25): (
        (101.69, 0.2176, 101.09, 0.1408, 100.79, 0.1022, 100.61, 0.0789),
        (105.60, 0.1978, 103.55, 0.1280, 102.55, 0.0929, 101.96, 0.0718),
        (110.98, 0.1696, 106.84, 0.1097, 104.87, 0.0796, 103.73, 0.0615),
        (115.99, 0.1413, 109.79, 0.0914, 106.91, 0.0663, 105.27, 0.0513),
        (120.43, 0.1130, 112.32, 0.0731, 108.65, 0.0531, 106.56, 0.0410),
        (124.13, 0.0848, 114.38, 0.0549, 110.04, 0.0398, 107.59, 0.0308),
        (126.91, 0.0565, 115.89, 0.0366, 111.05, 0.0265, 108.34, 0.0205),
        (128.65, 0.0283, 116.82, 0.0183, 111.67, 0.0133, 108.79, 0.0103),
        (129.23, 0.0000, 117.13, 0.0000, 111.87, 0.0000, 108.94, 0.0000),
    ),
    (-1.0, 0.5): (
        (103.38, 0.2091, 102.16, 0.1353, 101.56, 0.0982, 101.20, 0.0759),
        (110.98, 0.1696, 106.84, 0.1097, 104.87, 0.0796, 103.73, 0.0615),
        (120.43, 0.1130, 112.32, 0.0731, 108.65, 0.0531, 106.56, 0.0410),
        (126.91, 0.0565, 115.89, 0.0366, 111.05, 0.0265, 108.34, 0.0205),
        (129.23, 0.0000, 117.13, 0.0000, 111.87, 0.0000, 108.94, 0.0000),
        (126.91, 0.0565, 115.89, 0.0366, 111.05, 0.0265, 108.34, 0.0205),
        (120.43, 0.1130, 112.32, 0.0731, 108.65, 0.0531, 106.56, 0.0410),
        (110.98, 0.1696, 106.84, 0.1097, 104.87, 0.0796, 103.73, 0.0615),
        (100.00, 0.2261, 100.00, 0.1463, 100.00, 0.1061, 100.00, 0.0820),
    ),
    (-1.0, 0.75): (
        (105.05, 0.2006, 103.21, 0.1298, 102.31, 0.0942, 101.77, 0.0728),
        (115.99, 0.1413, 109.79, 0.0914, 106.91, 0.0663, 105.27, 0.0513),
        (126.91, 0.0565, 115.89, 0.0366, 111.05, 0.0265, 108.34, 0.0205),
        (128.65, 0.0283, 116.82, 0.0183, 111.67, 0.0133, 108.79, 0.0103),
        (120.43, 0.1130, 112.32, 0.0731, 108.65, 0.0531, 106.56, 0.0410),
        (105.60, 0.1978, 103.55, 0.1280, 102.55, 0.0929, 101.96, 0.0718),
        (88.71, 0.2826, 92.40, 0.1828, 94.37, 0.1327, 95.59, 0.1025),
        (72.93, 0.3674, 80.65, 0.2377, 85.17, 0.1725, 88.13, 0.1333),
        (59.57, 0.4521, 69.50, 0.2925, 75.85, 0.2123, 80.24, 0.1640),
    ),
    (1.0, 0.25): (
        (99.00, 0.2996, 97.51, 0.2178, 97.21, 0.1684, 99.20, 0.1175),
        (106.26, 0.2723, 103.17, 0.1980, 101.80, 0.1531, 102.17, 0.1069),
        (117.09, 0.2334, 111.34, 0.1697, 108.25, 0.1312, 106.18, 0.0916),
        (128.15, 0.1945, 119.34, 0.1415, 114.39, 0.1093, 109.82, 0.0763),
        (138.88, 0.1556, 126.79, 0.1132, 119.95, 0.0875, 113.00, 0.0611),
        (148.56, 0.1167, 133.27, 0.0849, 124.67, 0.0656, 115.60, 0.0458),
        (156.33, 0.0778, 138.31, 0.0566, 128.27, 0.0437, 117.53, 0.0305),
        (161.41, 0.0389, 141.52, 0.0283, 130.54, 0.0219, 118.72, 0.0153),
        (163.17, 0.0000, 142.63, 0.0000, 131.31, 0.0000, 119.12, 0.0000),
    ),
    (1.0, 0.5): (
        (102.07, 0.2879, 99.92, 0.2093, 99.18, 0.1618, 100.49, 0.1130),
        (117.09, 0.2334, 111.34, 0.1697, 108.25, 0.1312, 106.18, 0.0916),
        (138.88, 0.1556, 126.79, 0.1132, 119.95, 0.0875, 113.00, 0.0611),
        (156.33, 0.0778, 138.31, 0.0566, 128.27, 0.0437, 117.53, 0.0305),
        (163.17, 0.0000, 142.63, 0.0000, 131.31, 0.0000, 119.12, 0.0000),
        (156.33, 0.0778, 138.31, 0.0566, 128.27, 0.0437, 117.53, 0.0305),
        (138.88, 0.1556, 126.79, 0.1132, 119.95, 0.0875, 113.00, 0.0611),
        (117.09, 0.2334, 111.34, 0.1697, 108.25, 0.1312, 106.18, 0.0916),
        (96.01, 0.3112, 95.12, 0.2263, 95.25, 0.1749, 97.90, 0.1221),
    ),
    (1.0, 0.75): (
        (105.20, 0.2762, 102.36, 0.2009, 101.15, 0.1553, 101.75, 0.1084),
        (128.15, 0.1945, 119.34, 0.1415, 114.39, 0.1093, 109.82, 0.0763),
        (156.33, 0.0778, 138.31, 0.0566, 128.27, 0.0437, 117.53, 0.0305),
        (161.41, 0.0389, 141.52, 0.0283, 130.54, 0.0219, 118.72, 0.0153),
        (138.88, 0.1556, 126.79, 0.1132, 119.95, 0.0875, 113.00, 0.0611),
        (106.26, 0.2723, 103.17, 0.1980, 101.80, 0.1531, 102.17, 0.1069),
        (77.96, 0.3891, 80.11, 0.2829, 82.50, 0.2187, 88.98, 0.1526),
        (57.31, 0.5058, 61.51, 0.3678, 65.66, 0.2843, 75.76, 0.1984),
        (42.96, 0.6225, 47.58, 0.4526, 52.22, 0.3499, 63.80, 0.2442),
    ),
    (2.0, 0.25): (
        (48.51, 0.6612, 45.00, 0.5405, 45.90, 0.4435, 60.53, 0.3065),
        (57.95, 0.6011, 53.31, 0.4913, 53.85, 0.4032, 68.81, 0.2786),
        (76.84, 0.5152, 69.55, 0.4211, 68.94, 0.3456, 83.20, 0.2388),
        (106.11, 0.4293, 93.70, 0.3509, 90.35, 0.2880, 101.08, 0.1990),
        (154.14, 0.3435, 130.87, 0.2808, 121.15, 0.2304, 122.65, 0.1592),
        (237.92, 0.2576, 189.27, 0.2106, 164.85, 0.1728, 147.06, 0.1194),
        (388.87, 0.1717, 277.82, 0.1404, 222.08, 0.1152, 171.43, 0.0796),
        (627.92, 0.0859, 386.26, 0.0702, 280.49, 0.0576, 190.36, 0.0398),
        (789.74, 0.0000, 444.03, 0.0000, 307.45, 0.0000, 197.63, 0.0000),
    ),
    (2.0, 0.5): (
        (52.26, 0.6354, 48.32, 0.5194, 49.09, 0.4262, 63.91, 0.2946),
        (76.84, 0.5152, 69.55, 0.4211, 68.94, 0.3456, 83.20, 0.2388),
        (154.14, 0.3435, 130.87, 0.2808, 121.15, 0.2304, 122.65, 0.1592),
        (388.87, 0.1717, 277.82, 0.1404, 222.08, 0.1152, 171.43, 0.0796),
        (789.74, 0.0000, 444.03, 0.0000, 307.45, 0.0000, 197.63, 0.0000),
        (388.87, 0.1717, 277.82, 0.1404, 222.08, 0.1152, 171.43, 0.0796),
        (154.14, 0.3435, 130.87, 0.2808, 121.15, 0.2304, 122.65, 0.1592),
        (76.84, 0.5152, 69.55, 0.4211, 68.94, 0.3456, 83.20, 0.2388),
        (45.14, 0.6869, 42.00, 0.5615, 42.99, 0.4608, 57.36, 0.3184),
    ),
    (2.0, 0.75): (
        (56.45, 0.6096, 52.00, 0.4983, 52.60, 0.4090, 67.54, 0.2826),
        (106.11, 0.4293, 93.70, 0.3509, 90.35, 0.2880, 101.08, 0.1990),
        (388.87, 0.1717, 277.82, 0.1404, 222.08, 0.1152, 171.43, 0.0796),
        (627.92, 0.0859, 386.26, 0.0702, 280.49, 0.0576, 190.36, 0.0398),
        (154.14, 0.3435, 130.87, 0.2808, 121.15, 0.2304, 122.65, 0.1592),
        (57.95, 0.6011, 53.31, 0.4913, 53.85, 0.4032, 68.81, 0.2786),
        (29.50, 0.8587, 27.83, 0.7019, 28.97, 0.5760, 41.00, 0.3980),
        (17.73, 1.1163, 16.90, 0.9125, 17.83, 0.7488, 26.50, 0.5175),
        (11.79, 1.3739, 11.30, 1.1230, 12.01, 0.9216, 18.33, 0.6369),
    ),
}


def printed_pre_arb(p: float, q: float, row: int, m: int) -> tuple[float, float]:
    """One printed (efficiency, bias) cell of the main table."""
    j = GRID_M.index(m)
    r = TABLE_31[(float(p), float(q))][row]
    return r[2 * j], r[2 * j + 1]


# Printed dominance ranges per (p, q): departures where the shrinkage
# estimator beats the MMSE multiple on MSE, on bias, and on both. Keyed by m;
# None marks entries the source did not print (the m=12 bias column) or
# printed garbled (the whole bias row at p=1, q=0.25).
RANGES_31 = {
    (-2.0, 0.25): {
        "mse": {6: (1.74, 6.25), 8: (1.70, 6.29), 10: (1.68, 6.31), 12: (1.66, 6.33)},
        "arb": {6: (2.90, 5.09), 8: (3.02, 4.97), 10: (3.08, 4.91), 12: None},
        "best": {6: (2.90, 5.09), 8: (3.02, 4.97), 10: (3.08, 4.91), 12: (3.11, 4.88)},
    },
    (-2.0, 0.5): {
        "mse": {6: (0.87, 3.13), 8: (0.85, 3.15), 10: (0.84, 3.16), 12: (0.83, 3.17)},
        "arb": {6: (1.45, 2.55), 8: (1.51, 2.49), 10: (1.54, 2.46), 12: None},
        "best": {6: (1.45, 2.55), 8: (1.51, 2.49), 10: (1.54, 2.46), 12: (1.56, 2.44)},
    },
    (-2.0, 0.75): {
        "mse": {6: (0.58, 2.09), 8: (0.57, 2.10), 10: (0.56, 2.11), 12: (0.56, 2.11)},
        "arb": {6: (0.97, 1.70), 8: (1.01, 1.66), 10: (1.03, 1.64), 12: None},
        "best": {6: (0.97, 1.70), 8: (1.01, 1.66), 10: (1.03, 1.64), 12: (1.04, 1.63)},
    },
    (-1.0, 0.25): {
        "mse": {m: (0.00, 8.00) for m in GRID_M},
        "arb": {m: (0.00, 8.00) for m in (6, 8, 10)} | {12: None},
        "best": {m: (0.00, 8.00) for m in GRID_M},
    },
    (-1.0, 0.5): {
        "mse": {m: (0.00, 4.00) for m in GRID_M},
        "arb": {m: (0.00, 4.00) for m in (6, 8, 10)} | {12: None},
        "best": {m: (0.00, 4.00) for m in GRID_M},
    },
    (-1.0, 0.75): {
        "mse": {m: (0.00, 2.67) for m in GRID_M},
        "arb": {m: (0.00, 2.67) for m in (6, 8, 10)} | {12: None},
        "best": {m: (0.00, 2.67) for m in GRID_M},
    },
    (1.0, 0.25): {
        "mse": {6: (0.20, 7.80), 8: (0.30, 7.70), 10: (0.36, 7.64), 12: (0.24, 7.76)},
        "arb": {6: None, 8: None, 10: None, 12: None},
        "best": {6: (0.20, 7.80), 8: (0.30, 7.70), 10: (0.36, 7.64), 12: (0.24, 7.76)},
    },
    (1.0, 0.5): {
        "mse": {6: (0.10, 3.90), 8: (0.15, 3.85), 10: (0.18, 3.82), 12: (0.12, 3.88)},
        "arb": {6: (0.55, 3.45), 8: (0.71, 3.29), 10: (0.79, 3.21), 12: None},
        "best": {6: (0.55, 3.45), 8: (0.71, 3.29), 10: (0.79, 3.21), 12: (0.66, 3.34)},
    },
    (1.0, 0.75): {
        "mse": {6: (0.07, 2.60), 8: (0.10, 2.57), 10: (0.12, 2.55), 12: (0.08, 2.59)},
        "arb": {6: (0.37, 2.30), 8: (0.47, 2.20), 10: (0.52, 2.14), 12: None},
        "best": {6: (0.37, 2.30), 8: (0.47, 2.20), 10: (0.52, 2.14), 12: (0.44, 2.23)},
    },
    (2.0, 0.25): {
        "mse": {6: (1.41, 6.59), 8: (1.60, 6.40), 10: (1.68, 6.32), 12: (1.47, 6.53)},
        "arb": {6: (2.68, 5.32), 8: (2.96, 5.04), 10: (3.08, 4.92), 12: None},
        "best": {6: (2.68, 5.32), 8: (2.96, 5.04), 10: (3.08, 4.92), 12: (2.97, 5.03)},
    },
    (2.0, 0.5): {
        "mse": {6: (0.71, 3.29), 8: (0.80, 3.20), 10: (0.84, 3.16), 12: (0.74, 3.26)},
        "arb": {6: (1.34, 2.66), 8: (1.48, 2.52), 10: (1.54, 2.46), 12: None},
        "best": {6: (1.34, 2.66), 8: (1.48, 2.52), 10: (1.54, 2.46), 12: (1.49, 2.51)},
    },
    (2.0, 0.75): {
        "mse": {6: (0.47, 2.20), 8: (0.53, 2.13), 10: (0.56, 2.11), 12: (0.49, 2.18)},
        "arb": {6: (0.89, 1.77), 8: (0.99, 1.68), 10: (1.03, 1.64), 12: None},
        "best": {6: (0.89, 1.77), 8: (0.99, 1.68), 10: (1.03, 1.64), 12: (0.99, 1.68)},
    },
}

# TABLE_51[(q, p, m)] is a tuple of seven efficiencies matching
# TABLE_51_INTERVALS. Many of these printed values carry substantial error
# from the source's own evaluation (growing with m and with how deep the
# interval truncates); the audit quantifies this rather than hiding it.
TABLE_51 = {
    (0.25, -1.0, 6): (50.80, 117.60, 261.72, 548.60, 649.95, 268.31, 80.46),
    (0.25, -1.0, 8): (41.39, 81.01, 227.42, 426.98, 470.44, 189.82, 53.66),
    (0.25, -1.0, 10): (34.91, 67.45, 203.08, 342.54, 375.91, 150.17, 39.90),
    (0.25, -1.0, 12): (30.59, 63.17, 172.06, 286.06, 314.98, 125.21, 31.38),
    (0.25, 1.0, 6): (49.84, 113.90, 227.59, 454.93, 636.21, 286.06, 82.35),
    (0.25, 1.0, 8): (40.10, 79.57, 191.97, 355.31, 504.49, 210.91, 55.10),
    (0.25, 1.0, 10): (34.66, 65.63, 172.31, 293.42, 427.74, 168.38, 40.79),
    (0.25, 1.0, 12): (31.15, 61.55, 156.69, 262.79, 353.74, 135.01, 31.74),
    (0.25, -2.0, 6): (46.04, 92.48, 106.83, 145.02, 220.29, 208.14, 82.08),
    (0.25, -2.0, 8): (34.18, 72.59, 95.44, 131.16, 243.10, 211.32, 57.89),
    (0.25, -2.0, 10): (30.92, 59.44, 92.75, 126.15, 282.54, 202.36, 43.07),
    (0.25, -2.0, 12): (30.53, 53.42, 90.11, 122.15, 320.74, 179.81, 33.36),
    (0.25, 2.0, 6): (46.77, 98.00, 128.68, 191.47, 305.32, 250.20, 84.21),
    (0.25, 2.0, 8): (34.81, 73.36, 102.24, 145.23, 273.81, 220.57, 57.95),
    (0.25, 2.0, 10): (30.96, 59.48, 93.16, 126.97, 284.60, 202.56, 43.06),
    (0.25, 2.0, 12): (31.23, 54.88, 100.45, 144.22, 368.42, 175.49, 33.12),
    (0.5, -1.0, 6): (50.84, 120.81, 298.17, 642.86, 626.09, 247.90, 78.41),
    (0.5, -1.0, 8): (41.32, 82.01, 253.12, 473.19, 435.87, 175.97, 52.66),
    (0.5, -1.0, 10): (34.76, 67.97, 221.74, 368.65, 345.16, 140.57, 39.39),
    (0.5, -1.0, 12): (30.39, 63.49, 184.38, 303.15, 289.53, 118.43, 31.11),
    (0.5, 1.0, 6): (49.90, 118.31, 271.73, 583.65, 658.77, 264.16, 79.96),
    (0.5, 1.0, 8): (40.03, 81.13, 225.47, 433.16, 481.87, 191.09, 53.72),
    (0.5, 1.0, 10): (34.45, 66.48, 198.40, 344.05, 390.95, 152.66, 40.02),
    (0.5, 1.0, 12): (30.87, 62.03, 173.57, 292.64, 317.87, 124.73, 31.36),
    (0.5, -2.0, 6): (46.28, 103.18, 157.81, 267.16, 445.44, 289.70, 84.92),
    (0.5, -2.0, 8): (34.31, 76.82, 135.64, 228.67, 443.06, 240.03, 57.28),
    (0.5, -2.0, 10): (30.86, 61.54, 127.02, 207.62, 448.55, 198.56, 42.13),
    (0.5, -2.0, 12): (30.24, 54.80, 118.59, 190.69, 438.38, 163.98, 32.67),
    (0.5, 2.0, 6): (46.95, 107.21, 181.60, 331.58, 541.60, 298.93, 84.44),
    (0.5, 2.0, 8): (34.91, 77.31, 142.94, 246.71, 467.49, 238.16, 57.03),
    (0.5, 2.0, 10): (30.90, 61.57, 127.44, 208.58, 449.42, 198.30, 42.12),
    (0.5, 2.0, 12): (30.87, 56.08, 128.23, 212.20, 432.21, 156.40, 32.44),
    (0.75, -1.0, 6): (50.89, 124.02, 339.92, 723.50, 566.19, 224.67, 76.05),
    (0.75, -1.0, 8): (41.24, 83.01, 282.24, 510.42, 392.47, 161.95, 51.59),
    (0.75, -1.0, 10): (34.60, 68.50, 242.46, 389.34, 312.16, 131.14, 38.85),
    (0.75, -1.0, 12): (30.19, 63.81, 197.73, 316.87, 263.77, 111.81, 30.83),
    (0.75, 1.0, 6): (49.97, 122.74, 325.66, 710.96, 597.64, 233.41, 76.93),
    (0.75, 1.0, 8): (39.95, 82.68, 266.36, 504.67, 421.61, 169.19, 52.14),
    (0.75, 1.0, 10): (34.23, 67.32, 229.58, 388.35, 337.17, 136.65, 39.17),
    (0.75, 1.0, 12): (30.59, 62.50, 192.68, 317.53, 278.26, 114.63, 30.95),
    (0.75, -2.0, 6): (46.50, 114.64, 247.11, 543.26, 704.42, 280.39, 81.39),
    (0.75, -2.0, 8): (34.43, 81.04, 202.90, 418.40, 541.77, 203.46, 54.49),
    (0.75, -2.0, 10): (30.78, 63.59, 181.31, 345.15, 447.06, 160.74, 40.40),
    (0.75, -2.0, 12): (29.92, 56.13, 160.85, 293.90, 381.03, 132.95, 31.66),
    (0.75, 2.0, 6): (47.13, 116.87, 266.60, 596.79, 696.36, 269.47, 80.35),
    (0.75, 2.0, 8): (34.99, 81.23, 209.00, 430.93, 532.12, 199.82, 54.26),
    (0.75, 2.0, 10): (30.82, 63.61, 181.65, 345.67, 446.25, 160.55, 40.39),
    (0.75, 2.0, 12): (30.50, 57.24, 167.34, 302.22, 358.48, 129.07, 31.52),
}
