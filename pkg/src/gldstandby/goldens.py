"""Published MTTF sensitivity tables for the numerical example.

Base point (alpha, beta, theta, gamma, eta) = (2, 3, 0.5, 1.5, 2.2); each
table varies one parameter (rows) against n = 2, 5, 10, 20 (columns).
"""

N_COLUMNS = (2, 5, 10, 20)

ALPHA_ROW = (3.4932, 8.7329, 17.4658, 34.9317)
BETA_ROW = (0.5068, 1.2671, 2.5342, 5.0683)

THETA_TABLE = {
    0.3: (-43.3426, -108.357, -216.713, -433.426),
    0.4: (-23.9595, -59.8988, -119.798, -239.595),
    0.5: (-15.0662, -37.6654, -75.3309, -150.662),
    0.6: (-10.3115, -25.7787, -51.5573, -103.115),
    0.7: (-7.5094, -18.7734, -37.5468, -75.0937),
}

GAMMA_TABLE = {
    1.2: (-0.4332, -1.0829, -2.1659, -4.3318),
    1.5: (-0.2951, -0.7377, -1.4754, -2.9507),
    1.8: (-0.2138, -0.5346, -1.0692, -2.1385),
    2.2: (-0.1489, -0.3724, -0.7447, -1.4894),
    2.5: (-0.1179, -0.2947, -0.5894, -1.1787),
}

ETA_TABLE = {
    1.5: (-0.428, -1.0699, -2.1399, -4.2798),
    1.8: (-0.3739, -0.9348, -1.8696, -3.7393),
    2.2: (-0.3068, -0.767, -1.534, -3.0679),
    2.5: (-0.2615, -0.6537, -1.3074, -2.6149),
    3.0: (-0.1969, -0.4922, -0.9844, -1.9687),
}

TABLE_TOL = 5e-4
THETA_TABLE_TOL = 5e-3
