"""Test matrices printed in the defective-eigenvalue literature, stored verbatim."""

import numpy as np

GRID20_ROWS = [
    [0, 4, 0, -4, 0, -2, 1, 0, 0, -1, -1, -1, -1, 2, 1, 0, 0, -1, 0, 0],
    [0, 3, 3, -4, 1, 0, 4, 1, -1, -1, 0, 0, 0, 0, 0, -2, 0, 0, -1, -1],
    [1, -4, 2, 10, -3, 1, -7, -2, -1, 3, 2, 0, 0, -1, 0, 3, -1, 1, 1, 2],
    [-1, -1, 2, 5, -2, -1, -5, -1, -1, 2, 0, -1, 0, 1, 0, 2, -1, -1, -1, 1],
    [-1, -2, 2, 1, 1, 1, -1, 0, -2, 1, 0, 0, 0, 1, 0, 0, -1, -1, 0, 0],
    [1, 4, 1, -12, 4, 2, 13, 3, 0, -4, 0, 0, -2, -1, 1, -6, 1, 1, 0, -3],
    [-1, -1, 1, 5, -2, 0, -4, -2, 0, 1, -1, 0, 0, 1, 0, 4, 0, -1, -1, 2],
    [1, 2, -4, 0, 1, 0, 1, 1, 4, -2, -1, 1, 0, -1, 0, 1, 2, 1, 0, 1],
    [0, -5, 2, 10, -5, -1, -10, -2, -1, 6, 3, -2, 0, 0, 0, 3, -3, 0, 1, 2],
    [1, 1, 1, -1, 2, 2, 4, 0, 1, -1, -1, 2, 0, -1, 0, 0, 2, 1, -1, 0],
    [1, -1, 0, 2, 1, 2, 1, 0, 1, -1, 3, 2, 0, -1, 0, 0, 1, 1, -1, 0],
    [-1, -3, 0, 5, -1, 2, -4, -1, 0, 1, -1, 4, 4, 1, -2, 2, 0, -1, 0, 1],
    [-2, 0, 0, -1, 0, 0, 0, 0, 0, 0, -1, 0, 3, 2, 0, 0, 0, -1, 0, 0],
    [-3, 4, -1, -4, 0, -2, 1, 0, 0, -1, -1, -1, -2, 5, 2, 0, 0, -1, 1, 0],
    [-2, 0, 0, -1, 0, 0, 0, 0, 0, 0, -1, 0, 0, 2, 3, 0, 0, -1, 0, 0],
    [0, 0, -2, 3, 1, 2, -1, -1, 2, -2, -2, 2, 0, 0, 0, 5, 2, 0, 0, 1],
    [6, 3, -6, 3, 6, 4, 7, 0, 7, -7, 1, 5, -2, -6, 1, 0, 8, 6, -1, 0],
    [0, 2, -4, -4, 1, -1, 4, 1, 0, -1, 0, -1, -1, 0, 1, -2, 0, 3, 4, -1],
    [1, -4, -1, 11, -4, 1, -8, -3, -1, 3, 2, 0, 0, -1, 0, 4, -1, 1, 4, 3],
    [0, 0, -1, 1, -2, 0, -1, -2, 1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 4],
]

JBITEA_ROWS = [
    [2, 1, 0, 0, 0],
    [0, -8, 1, 0, 0],
    [0, 0, 2, 1, 0],
    [0, 0, 0, 2, 1],
    [0, -10000, 1000, -100, 12],
]

# scaled by 1e-5 before being added to JBITEA
JBITEA_NOISE_ROWS = [
    [-0.092, -0.653, -0.201, -0.416, -0.787],
    [-0.135, -0.218, 0.054, -0.136, -0.255],
    [0.651, 0.663, -0.166, -0.969, -0.603],
    [-0.833, 0.607, 0.314, 0.969, -0.020],
    [-0.733, -0.879, 0.256, -0.665, -0.321],
]

EXAMPLE4_ROWS = [
    [3.006, 2, 1.005, -1.001, -0.002, -0.001, -0.001, -1],
    [5, 2, 5, -1, -2, -1, -1, 0],
    [-5.006, -3, -3.005, 2.001, 3.002, 2.001, 0.001, 2],
    [-6, -1, -6, 3, 5, 3, 0, 1],
    [-5, -1, -5, 1, 6, 3, 0, 1],
    [1, 0, 1, 0, -1, 1, 0, 0],
    [-4, -2, -4, 1, 3, 2, 2, 2],
    [5, 0, 5, -1, -2, -1, -1, 2],
]

# 14 significant digits, as published
MATRIX_B_ROWS = [
    [3.0059955942896, 1.9999978851470, 1.0049959180573, -1.0010020728471, -0.0020046893569, -0.0010002300301, -0.0010132897111, -0.9999977586058],
    [4.9999998736434, 1.9999937661529, 5.0000001193777, -1.0000000065301, -2.0000000129428, -0.9999999934070, -0.9999999926252, -0.0000169379637],
    [-5.0060008381014, -3.0000021146845, -3.0050076499797, 2.0009979267360, 3.0019953102172, 2.0009997699688, 0.0009867094117, 2.0000022421372],
    [-5.9999927405774, -1.0000021677309, -6.0000074892946, 2.9999962015789, 4.9999997701478, 2.9999999999775, -0.0000002324249, 0.9999978331627],
    [-4.9999995930006, -0.9999961877596, -5.0000095377366, 0.9999880178349, 5.9999870716625, 3.0000002295144, -0.0000150335883, 0.9999994536709],
    [0.9999971940837, -0.0000010574036, 1.0000006545259, -0.0000047736356, -1.0000023807994, 0.9999966612522, -0.0000036987224, -0.0000054161918],
    [-4.0000092166543, -1.9999997569827, -3.9999765043908, 1.0000142841290, 3.0000142782479, 2.0000000005386, 2.0000249853630, 2.0000002431865],
    [4.9999998983338, 0.0000026655939, 5.0000001062663, -0.9999999958672, -1.9999999894366, -1.0000000065916, -1.0000000120790, 2.0000133696815],
]


def grid20():
    """20x20 integer matrix with eigenvalue 2 (Segre {4,3,3}) and 3 (Segre {5,5})."""
    return np.array(GRID20_ROWS, dtype=complex)


def jbiteA():
    """5x5 matrix with eigenvalue 2 of multiplicity support 1x5."""
    return np.array(JBITEA_ROWS, dtype=complex)


def jbiteA_perturbed():
    return np.array(JBITEA_ROWS, dtype=float).astype(complex) + 1e-5 * np.array(
        JBITEA_NOISE_ROWS, dtype=complex
    )


def example4():
    """8x8 matrix: simple eigenvalue 2.001 and eigenvalue 2 with Segre {5,2}."""
    return np.array(EXAMPLE4_ROWS, dtype=complex)


def matrix_b():
    """Nearby matrix of example4 with a single eigenvalue 2.000125, Segre {6,2}."""
    return np.array(MATRIX_B_ROWS, dtype=complex)


# computed eigenvalues of grid20 used as starting estimates
GRID20_LAMBDA_NEAR_2 = 1.999881443477439 - 0.000118714860725j
GRID20_LAMBDA_NEAR_3 = 3.001287762162967 + 0.0j
