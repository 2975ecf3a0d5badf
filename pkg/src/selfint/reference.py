"""Known census counts used by the verification suites."""

# primitive torus classes of length L (key) with SI = 0, 1, 2, ...
TORUS_COUNTS = {
    1: [4],
    2: [4],
    3: [8],
    4: [10, 8],
    5: [16, 8, 24],
    6: [8, 16, 32, 40, 20],
    7: [24, 16, 32, 48, 112, 24, 56],
    8: [16, 24, 52, 76, 116, 156, 136, 104, 90, 40],
    9: [24, 32, 64, 120, 144, 240, 384, 208, 376, 136, 304, 48, 104],
    10: [16, 32, 72, 168, 272, 332, 492, 628, 644, 700, 700, 548, 464, 360, 224,
         160, 68],
    11: [40, 48, 80, 160, 272, 584, 664, 1200, 1280, 1368, 1608, 1368, 2048, 976,
         1704, 528, 1072, 264, 592, 80, 168],
    12: [16, 40, 104, 208, 372, 660, 1048, 1408, 2044, 2696, 3088, 3580, 3866, 3792,
         3816, 3612, 3272, 2820, 2276, 1808, 1308, 960, 680, 392, 250, 104],
}
