"""Expected `table` command outputs, one tuple per published row.

Row layout: (t, v, k, lambda_known, lambda_min, lambda_max, n, dim, ell, r,
speedup) with speedup as the printed one-decimal string, "" when
lambda_known equals lambda_max.
"""

# mode = "projective", q = 2
TABLE_PROJECTIVE_Q2 = [
    (2, 3, 2, 1, 1, 1, 7, 3, 1, 3, ""),
    (2, 4, 2, 1, 1, 1, 15, 4, 3, 7, ""),
    (2, 4, 3, 3, 3, 3, 15, 10, 1, 7, ""),
    (2, 5, 2, 1, 1, 1, 31, 5, 7, 15, ""),
    (2, 5, 3, 7, 7, 7, 31, 15, 2, 35, ""),
    (2, 5, 4, 7, 7, 7, 31, 25, 1, 15, ""),
    (2, 6, 2, 1, 1, 1, 63, 6, 15, 31, ""),
    (2, 6, 3, 3, 3, 15, 63, 21, 5, 31, "5.0"),
    (2, 6, 4, 35, 35, 35, 63, 41, 2, 155, ""),
    (2, 6, 5, 15, 15, 15, 63, 56, 1, 31, ""),
    (2, 7, 2, 1, 1, 1, 127, 7, 31, 63, ""),
    (2, 7, 3, 3, 1, 31, 127, 28, 10, 63, "10.3"),
    (2, 7, 4, 15, 5, 155, 127, 63, 4, 135, "10.3"),
    (2, 7, 5, 155, 155, 155, 127, 98, 2, 651, ""),
    (2, 7, 6, 31, 31, 31, 127, 119, 1, 63, ""),
    (2, 8, 2, 1, 1, 1, 255, 8, 63, 127, ""),
    (2, 8, 3, 21, 21, 63, 255, 36, 21, 889, "3.0"),
    (2, 8, 4, 7, 7, 651, 255, 92, 9, 127, "93.0"),
    (2, 8, 5, 465, 465, 1395, 255, 162, 4, 3937, "3.0"),
    (2, 8, 6, 651, 651, 651, 255, 218, 2, 2667, ""),
    (2, 8, 7, 63, 63, 63, 255, 246, 1, 127, ""),
    (2, 9, 2, 1, 1, 1, 511, 9, 127, 255, ""),
    (2, 9, 3, 7, 1, 127, 511, 45, 42, 595, "18.1"),
    (2, 9, 4, 21, 7, 2667, 511, 129, 18, 765, "127.0"),
    (2, 9, 5, 93, 31, 11811, 511, 255, 8, 1581, "127.0"),
    (2, 9, 6, 651, 93, 11811, 511, 381, 4, 5355, "18.1"),
    (2, 9, 8, 127, 127, 127, 511, 501, 1, 255, ""),
    (2, 10, 2, 1, 1, 1, 1023, 10, 255, 511, ""),
    (2, 10, 3, 15, 3, 255, 1023, 55, 85, 2555, "17.0"),
    (2, 10, 4, 595, 5, 10795, 1023, 175, 36, 43435, "18.1"),
    (2, 10, 5, 765, 15, 97155, 1023, 385, 17, 26061, "127.0"),
    (2, 10, 9, 255, 255, 255, 1023, 1012, 1, 511, ""),
    (2, 11, 2, 1, 1, 1, 2047, 11, 511, 1023, ""),
    (2, 11, 3, 7, 7, 511, 2047, 66, 170, 2387, "73.0"),
    (2, 11, 10, 511, 511, 511, 2047, 2035, 1, 1023, ""),
    (2, 12, 2, 1, 1, 1, 4095, 12, 1023, 2047, ""),
    (2, 12, 3, 1023, 3, 1023, 4095, 78, 341, 698027, ""),
    (2, 12, 11, 1023, 1023, 1023, 4095, 4082, 1, 2047, ""),
    (2, 13, 2, 1, 1, 1, 8191, 13, 2047, 4095, ""),
    (2, 13, 3, 1, 1, 2047, 8191, 91, 682, 1365, "2047.0"),
    (2, 13, 12, 2047, 2047, 2047, 8191, 8177, 1, 4095, ""),
]

# mode = "affine", q = 2
TABLE_AFFINE_Q2 = [
    (2, 3, 2, 1, 1, 1, 4, 1, 1, 3, ""),
    (2, 4, 2, 1, 1, 1, 8, 1, 3, 7, ""),
    (2, 4, 3, 3, 3, 3, 8, 4, 1, 7, ""),
    (2, 5, 2, 1, 1, 1, 16, 1, 7, 15, ""),
    (2, 5, 3, 7, 7, 7, 16, 5, 2, 35, ""),
    (2, 5, 4, 7, 7, 7, 16, 11, 1, 15, ""),
    (2, 6, 2, 1, 1, 1, 32, 1, 15, 31, ""),
    (2, 6, 3, 3, 3, 15, 32, 6, 5, 31, "5.0"),
    (2, 6, 4, 35, 35, 35, 32, 16, 2, 155, ""),
    (2, 6, 5, 15, 15, 15, 32, 26, 1, 31, ""),
    (2, 7, 2, 1, 1, 1, 64, 1, 31, 63, ""),
    (2, 7, 3, 3, 1, 31, 64, 7, 10, 63, "10.3"),
    (2, 7, 4, 15, 5, 155, 64, 22, 4, 135, "10.3"),
    (2, 7, 5, 155, 155, 155, 64, 42, 2, 651, ""),
    (2, 7, 6, 31, 31, 31, 64, 57, 1, 63, ""),
    (2, 8, 2, 1, 1, 1, 128, 1, 63, 127, ""),
    (2, 8, 3, 21, 21, 63, 128, 8, 21, 889, "3.0"),
    (2, 8, 4, 7, 7, 651, 128, 29, 9, 127, "93.0"),
    (3, 8, 4, 11, 1, 31, 128, 29, 9, 4191, "2.8"),
    (2, 8, 5, 465, 465, 1395, 128, 64, 4, 3937, "3.0"),
    (2, 8, 6, 651, 651, 651, 128, 99, 2, 2667, ""),
    (2, 8, 7, 63, 63, 63, 128, 120, 1, 127, ""),
    (2, 9, 2, 1, 1, 1, 256, 1, 127, 255, ""),
    (2, 9, 3, 7, 1, 127, 256, 9, 42, 595, "18.1"),
    (2, 9, 4, 21, 7, 2667, 256, 37, 18, 765, "127.0"),
    (2, 9, 5, 93, 31, 11811, 256, 93, 8, 1581, "127.0"),
    (2, 9, 6, 651, 93, 11811, 256, 163, 4, 5355, "18.1"),
    (2, 9, 8, 127, 127, 127, 256, 247, 1, 255, ""),
    (2, 10, 2, 1, 1, 1, 512, 1, 255, 511, ""),
    (2, 10, 3, 15, 3, 255, 512, 10, 85, 2555, "17.0"),
    (2, 10, 4, 595, 5, 10795, 512, 46, 36, 43435, "18.1"),
    (2, 10, 5, 765, 15, 97155, 512, 130, 17, 26061, "127.0"),
    (2, 10, 9, 255, 255, 255, 512, 502, 1, 511, ""),
    (2, 11, 2, 1, 1, 1, 1024, 1, 511, 1023, ""),
    (2, 11, 3, 7, 7, 511, 1024, 11, 170, 2387, "73.0"),
    (2, 11, 10, 511, 511, 511, 1024, 1013, 1, 1023, ""),
    (2, 12, 2, 1, 1, 1, 2048, 1, 1023, 2047, ""),
    (2, 12, 3, 1023, 3, 1023, 2048, 12, 341, 698027, ""),
    (2, 12, 11, 1023, 1023, 1023, 2048, 2036, 1, 2047, ""),
    (2, 13, 2, 1, 1, 1, 4096, 1, 2047, 4095, ""),
    (2, 13, 3, 1, 1, 2047, 4096, 13, 682, 1365, "2047.0"),
    (2, 13, 12, 2047, 2047, 2047, 4096, 4083, 1, 4095, ""),
]

# mode = "flats", q = 2
TABLE_FLATS_Q2 = [
    (2, 3, 2, 1, 1, 1, 8, 4, 1, 7, ""),
    (2, 4, 2, 1, 1, 1, 16, 5, 3, 35, ""),
    (2, 4, 3, 3, 3, 3, 16, 11, 1, 15, ""),
    (2, 5, 2, 1, 1, 1, 32, 6, 5, 155, ""),
    (2, 5, 3, 7, 7, 7, 32, 16, 3, 155, ""),
    (2, 5, 4, 7, 7, 7, 32, 26, 1, 31, ""),
    (2, 6, 2, 1, 1, 1, 64, 7, 11, 651, ""),
    (2, 6, 3, 3, 3, 15, 64, 22, 5, 279, "5.0"),
    (2, 6, 4, 35, 35, 35, 64, 42, 2, 651, ""),
    (2, 6, 5, 15, 15, 15, 64, 57, 1, 63, ""),
    (2, 7, 2, 1, 1, 1, 128, 8, 21, 2667, ""),
    (2, 7, 3, 3, 1, 31, 128, 29, 9, 1143, "10.3"),
    (2, 7, 4, 15, 5, 155, 128, 64, 5, 1143, "10.3"),
    (2, 7, 5, 155, 155, 155, 128, 99, 2, 2667, ""),
    (2, 7, 6, 31, 31, 31, 128, 120, 1, 127, ""),
    (2, 8, 2, 1, 1, 1, 256, 9, 43, 10795, ""),
    (2, 8, 3, 21, 21, 63, 256, 37, 19, 32385, "3.0"),
    (2, 8, 4, 7, 7, 651, 256, 93, 9, 2159, "93.0"),
    (2, 8, 5, 465, 465, 1395, 256, 163, 5, 32385, "3.0"),
    (2, 8, 6, 651, 651, 651, 256, 219, 2, 10795, ""),
    (2, 8, 7, 63, 63, 63, 256, 247, 1, 255, ""),
    (2, 9, 2, 1, 1, 1, 512, 10, 85, 43435, ""),
    (2, 9, 3, 7, 1, 127, 512, 46, 37, 43435, "18.1"),
    (2, 9, 4, 21, 7, 2667, 512, 130, 17, 26061, "127.0"),
    (2, 9, 5, 93, 31, 11811, 512, 256, 9, 26061, "127.0"),
    (2, 9, 6, 651, 93, 11811, 512, 382, 4, 43435, "18.1"),
    (2, 9, 8, 127, 127, 127, 512, 502, 1, 511, ""),
    (2, 10, 2, 1, 1, 1, 1024, 11, 171, 174251, ""),
    (2, 10, 3, 15, 3, 255, 1024, 56, 73, 373395, "17.0"),
    (2, 10, 4, 595, 5, 10795, 1024, 176, 35, 2962267, "18.1"),
    (2, 10, 5, 765, 15, 97155, 1024, 386, 17, 860013, "127.0"),
    (2, 10, 9, 255, 255, 255, 1024, 1013, 1, 1023, ""),
    (2, 11, 2, 1, 1, 1, 2048, 12, 341, 698027, ""),
    (2, 11, 3, 7, 7, 511, 2048, 67, 147, 698027, "73.0"),
    (2, 11, 10, 511, 511, 511, 2048, 2036, 1, 2047, ""),
    (2, 12, 2, 1, 1, 1, 4096, 13, 683, 2794155, ""),
    (2, 12, 3, 1023, 3, 1023, 4096, 79, 293, 408345795, ""),
    (2, 12, 11, 1023, 1023, 1023, 4096, 4083, 1, 4095, ""),
    (2, 13, 2, 1, 1, 1, 8192, 14, 1365, 11180715, ""),
    (2, 13, 3, 1, 1, 2047, 8192, 92, 585, 1597245, "2047.0"),
    (2, 13, 12, 2047, 2047, 2047, 8192, 8178, 1, 8191, ""),
]

# mode = "projective", q = 4
TABLE_PROJECTIVE_Q4 = [
    (2, 7, 3, 21, 1, 341, 5461, 1064, 136, 5733, "16.2"),
    (2, 7, 4, 357, 17, 5797, 5461, 3185, 32, 23205, "16.2"),
]

ALL_TABLES = [
    ("projective", 2, TABLE_PROJECTIVE_Q2),
    ("affine", 2, TABLE_AFFINE_Q2),
    ("flats", 2, TABLE_FLATS_Q2),
    ("projective", 4, TABLE_PROJECTIVE_Q4),
]
