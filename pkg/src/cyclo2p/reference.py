"""Published values for the worked examples and the autocorrelation table.

``verify-paper`` replays these claims. They are data to compare against,
not expectations, and a few are wrong (see the verify report).
"""

EXAMPLES = [
    {
        "example": 1,
        "p": 5, "g": 3, "r": 7,
        "sets": {"d02p": [1, 9], "d12p": [3, 7], "two_d0p": [2, 8], "two_d1p": [4, 6]},
        "sequence": "1001101100",
        "lc": 6,
        "minimal_poly": "quotient",
    },
    {
        "example": 2,
        "p": 13, "g": 7, "r": 5,
        "sets": {
            "d02p": [1, 3, 9, 17, 23, 25],
            "d12p": [5, 7, 11, 15, 19, 21],
            "two_d0p": [2, 6, 8, 18, 20, 24],
            "two_d1p": [4, 10, 12, 14, 16, 22],
        },
        "sequence": "10001101001110111001011000",
        "lc": 14,
        "minimal_poly": "quotient",
    },
    {
        "example": 3,
        "p": 17, "g": 3, "r": 5,
        "sets": {
            "d02p": [1, 9, 13, 15, 19, 21, 25, 33],
            "d12p": [3, 5, 7, 11, 23, 27, 29, 31],
            "two_d0p": [2, 4, 8, 16, 18, 26, 30, 32],
            "two_d1p": [6, 10, 12, 14, 20, 22, 24, 28],
        },
        "sequence": "1001011100111010000010111001110100",
        "lc": 34,
        "minimal_poly": "x^N-1",
    },
    {
        "example": 4,
        "p": 19, "g": 3, "r": 13,
        "sets": {
            "d02p": [1, 5, 7, 9, 11, 17, 23, 25, 35],
            # printed list repeats the previous example's class
            "d12p": [3, 5, 7, 11, 23, 27, 29, 31],
            "two_d0p": [2, 8, 10, 12, 14, 18, 22, 32, 34],
            "two_d1p": [4, 6, 16, 20, 24, 26, 28, 30, 36],
        },
        "sequence": "10011010000001011000110010111111010011",
        "lc": 20,
        "minimal_poly": "quotient",
    },
    {
        "example": 5,
        "p": 23, "g": 7, "r": 13,
        "sets": {
            "d02p": [1, 3, 9, 13, 25, 27, 29, 31, 35, 39, 41],
            "d12p": [5, 7, 11, 15, 17, 19, 21, 33, 37, 43, 45],
            "two_d0p": [2, 4, 6, 8, 12, 16, 18, 24, 26, 32, 36],
            "two_d1p": [10, 14, 20, 22, 28, 30, 34, 38, 40, 42, 44],
        },
        "sequence": "1000010100110011010111100000101001100110101111",
        "lc": 46,
        "minimal_poly": "x^N-1",
    },
    {
        "example": 6,
        "p": 113, "g": 7, "r": 13,
        "sets": {
            "d02p": [
                1, 7, 9, 11, 13, 15, 25, 31, 41, 49, 51, 53, 57, 61, 63, 69, 77,
                81, 83, 85, 87, 91, 95, 97, 99, 105, 109, 111, 115, 117, 121,
                127, 129, 131, 135, 139, 141, 143, 145, 149, 157, 163, 165, 169,
                173, 175, 177, 185, 195, 201, 211, 213, 215, 217, 219, 225,
            ],
            "d12p": [
                3, 5, 17, 19, 21, 23, 27, 29, 33, 35, 37, 39, 43, 45, 47, 55,
                59, 65, 67, 71, 73, 75, 79, 89, 93, 101, 103, 107, 119, 123,
                125, 133, 137, 147, 151, 153, 155, 159, 161, 167, 171, 179, 181,
                183, 187, 189, 191, 193, 197, 199, 203, 205, 207, 209, 221, 223,
            ],
            "two_d0p": [
                2, 4, 8, 14, 16, 18, 22, 26, 28, 30, 32, 36, 44, 50, 52, 56, 60,
                62, 64, 72, 82, 88, 98, 100, 102, 104, 106, 112, 114, 120, 122,
                124, 126, 128, 138, 144, 154, 162, 164, 166, 170, 174, 176, 182,
                190, 194, 196, 198, 200, 204, 208, 210, 212, 218, 222, 224,
            ],
            "two_d1p": [
                6, 10, 12, 20, 24, 34, 38, 40, 42, 46, 48, 54, 58, 66, 68, 70,
                74, 76, 78, 80, 84, 86, 90, 92, 94, 96, 108, 110, 116, 118, 130,
                132, 134, 136, 140, 142, 146, 148, 150, 152, 156, 158, 160, 168,
                172, 178, 180, 184, 186, 188, 192, 202, 206, 214, 216, 220,
            ],
        },
        "sequence": (
            "100101100010100001011101100101000111011110110111100000110011"
            "000001111011011110111000101001101110100001010001101000001011"
            "000101000010111011001010001110111101101111000001100110000011"
            "1101101111011100010100110111010000101000110100"
        ),
        "lc": 226,
        "minimal_poly": "x^N-1",
    },
    {
        "example": 7,
        "p": 5, "g": 3,
        "sets": {"d02p": [1, 9], "d12p": [3, 7], "two_d0p": [2, 8], "two_d1p": [4, 6]},
        "sequence": "1001101100",
        "s2": 217,
        "s2_factors": [7, 31],
        "modulus_factors": [3, 11, 11],
        "gcd_total": 1,
        "phi2_floor": 9,
    },
    {
        "example": 8,
        "p": 7, "g": 3,
        "sets": {"d02p": [1, 9, 11], "d12p": [3, 5, 13], "two_d0p": [2, 4, 8], "two_d1p": [6, 10, 12]},
        "sequence": "10010110001011",
        "s2": 13417,
        "modulus_factors": [3, 43, 127],
        "gcd_total": 1,
        "phi2_floor": 13,
    },
]

# residue of p mod 8 -> {value: count} as functions of p
TABLE1_ROWS = {
    1: lambda p: {2 * p: 1, 2 * p - 4: 1, -2: 2 * p - 2},
    3: lambda p: {2 * p: 1, -2 * p: 1, 2: p - 1, -2: p - 1},
}
